#include "duocat/graded.hpp"

#include <numeric>

namespace duocat {

namespace {

void require_same_truncation(const GradedObject& v, const GradedObject& w) {
  if (v.truncation != w.truncation) throw Error("truncation mismatch");
}

long product_of(const std::vector<int>& dims) {
  long p = 1;
  for (int d : dims) p *= d;
  return p;
}

}  // namespace

GradedMap::GradedMap(GradedObject src, GradedObject dst,
                     std::vector<Matrix> comps)
    : source(std::move(src)), target(std::move(dst)), components(std::move(comps)) {
  require_same_truncation(source, target);
  if (static_cast<int>(components.size()) != source.truncation + 1)
    throw Error("graded map needs one component per degree");
  for (int n = 0; n <= source.truncation; ++n)
    if (components[n].rows() != target.dim(n) ||
        components[n].cols() != source.dim(n))
      throw Error("graded map component shape mismatch");
}

GradedMap graded_identity(const GradedObject& v) {
  std::vector<Matrix> comps;
  for (int d : v.dims) comps.push_back(Matrix::identity(d));
  return GradedMap(v, v, std::move(comps));
}

GradedMap graded_zero_map(const GradedObject& src, const GradedObject& dst) {
  require_same_truncation(src, dst);
  std::vector<Matrix> comps;
  for (int n = 0; n <= src.truncation; ++n)
    comps.push_back(Matrix::zero(dst.dim(n), src.dim(n)));
  return GradedMap(src, dst, std::move(comps));
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (!(f.source == g.target)) throw Error("composition source/target mismatch");
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source.truncation; ++n)
    comps.push_back(f.at(n) * g.at(n));
  return GradedMap(g.source, f.target, std::move(comps));
}

bool maps_equal(const GradedMap& f, const GradedMap& g) {
  return f.source == g.source && f.target == g.target &&
         f.components == g.components;
}

GradedObject hadamard_unit(int truncation) {
  return GradedObject(truncation, std::vector<int>(truncation + 1, 1));
}

GradedObject cauchy_unit(int truncation) {
  std::vector<int> d(truncation + 1, 0);
  d[0] = 1;
  return GradedObject(truncation, d);
}

GradedObject substitution_unit(int truncation) {
  if (truncation < 1) throw Error("substitution unit needs truncation >= 1");
  std::vector<int> d(truncation + 1, 0);
  d[1] = 1;
  return GradedObject(truncation, d);
}

// ---- Hadamard ----

GradedObject hadamard(const GradedObject& v, const GradedObject& w) {
  require_same_truncation(v, w);
  std::vector<int> d(v.truncation + 1);
  for (int n = 0; n <= v.truncation; ++n) d[n] = v.dim(n) * w.dim(n);
  return GradedObject(v.truncation, d);
}

GradedMap hadamard(const GradedMap& f, const GradedMap& g) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source.truncation; ++n)
    comps.push_back(kron(f.at(n), g.at(n)));
  return GradedMap(hadamard(f.source, g.source), hadamard(f.target, g.target),
                   std::move(comps));
}

GradedMap hadamard_swap(const GradedObject& v, const GradedObject& w) {
  require_same_truncation(v, w);
  std::vector<Matrix> comps;
  for (int n = 0; n <= v.truncation; ++n)
    comps.push_back(factor_reorder({v.dim(n), w.dim(n)}, {1, 0}));
  return GradedMap(hadamard(v, w), hadamard(w, v), std::move(comps));
}

GradedMap hadamard_lunitor(const GradedObject& v) {
  return GradedMap(hadamard(hadamard_unit(v.truncation), v), v,
                   graded_identity(v).components);
}

GradedMap hadamard_runitor(const GradedObject& v) {
  return GradedMap(hadamard(v, hadamard_unit(v.truncation)), v,
                   graded_identity(v).components);
}

GradedMap hadamard_associator(const GradedObject& v, const GradedObject& w,
                              const GradedObject& u) {
  GradedObject o = hadamard(hadamard(v, w), u);
  return GradedMap(o, hadamard(v, hadamard(w, u)),
                   graded_identity(o).components);
}

// ---- Cauchy ----

int cauchy_block_offset(const GradedObject& v, const GradedObject& w, int n,
                        int k) {
  int off = 0;
  for (int j = 0; j < k; ++j) off += v.dim(j) * w.dim(n - j);
  return off;
}

GradedObject cauchy(const GradedObject& v, const GradedObject& w) {
  require_same_truncation(v, w);
  std::vector<int> d(v.truncation + 1, 0);
  for (int n = 0; n <= v.truncation; ++n)
    for (int k = 0; k <= n; ++k) d[n] += v.dim(k) * w.dim(n - k);
  return GradedObject(v.truncation, d);
}

GradedMap cauchy(const GradedMap& f, const GradedMap& g) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source.truncation; ++n) {
    std::vector<Matrix> blocks;
    for (int k = 0; k <= n; ++k) blocks.push_back(kron(f.at(k), g.at(n - k)));
    comps.push_back(direct_sum(blocks));
  }
  return GradedMap(cauchy(f.source, g.source), cauchy(f.target, g.target),
                   std::move(comps));
}

GradedMap cauchy_braiding(const GradedObject& v, const GradedObject& w,
                          const Rational& q) {
  require_same_truncation(v, w);
  if (q == 0) throw Error("braiding parameter must be nonzero");
  GradedObject src = cauchy(v, w), dst = cauchy(w, v);
  std::vector<Matrix> comps;
  for (int n = 0; n <= v.truncation; ++n) {
    Matrix c(dst.dim(n), src.dim(n));
    for (int k = 0; k <= n; ++k) {
      int m = n - k;
      Rational scale = 1;
      for (int t = 0; t < k * m; ++t) scale *= q;
      Matrix blk = factor_reorder({v.dim(k), w.dim(m)}, {1, 0}).scaled(scale);
      c.set_block(cauchy_block_offset(w, v, n, m),
                  cauchy_block_offset(v, w, n, k), blk);
    }
    comps.push_back(std::move(c));
  }
  return GradedMap(src, dst, std::move(comps));
}

GradedMap cauchy_lunitor(const GradedObject& v) {
  return GradedMap(cauchy(cauchy_unit(v.truncation), v), v,
                   graded_identity(v).components);
}

GradedMap cauchy_runitor(const GradedObject& v) {
  return GradedMap(cauchy(v, cauchy_unit(v.truncation)), v,
                   graded_identity(v).components);
}

GradedMap cauchy_associator(const GradedObject& v, const GradedObject& w,
                            const GradedObject& u) {
  GradedObject vw = cauchy(v, w), wu = cauchy(w, u);
  GradedObject src = cauchy(vw, u), dst = cauchy(v, wu);
  std::vector<Matrix> comps;
  for (int n = 0; n <= v.truncation; ++n) {
    Matrix c(dst.dim(n), src.dim(n));
    // Source basis: degree split (a, n-a), then (k, a-k) inside (V.W)_a.
    for (int a = 0; a <= n; ++a)
      for (int k = 0; k <= a; ++k) {
        int d = v.dim(k) * w.dim(a - k) * u.dim(n - a);
        if (d == 0) continue;
        int src_off = cauchy_block_offset(vw, u, n, a) +
                      cauchy_block_offset(v, w, a, k) * u.dim(n - a);
        int inner = cauchy_block_offset(w, u, n - k, a - k);
        int dst_start =
            cauchy_block_offset(v, wu, n, k);  // start of V_k (x) (W.U)_{n-k}
        // Row offset inside the target block: the V_k coordinate is the major
        // index over (W.U)_{n-k}, and `inner` shifts within each stripe.
        for (int i = 0; i < v.dim(k); ++i) {
          int rows = w.dim(a - k) * u.dim(n - a);
          c.set_block(dst_start + i * wu.dim(n - k) + inner,
                      src_off + i * rows, Matrix::identity(rows));
        }
      }
    comps.push_back(std::move(c));
  }
  return GradedMap(src, dst, std::move(comps));
}

// ---- m-fold Cauchy ----

GradedObject m_fold_cauchy(const GradedObject& v, int m) {
  if (m < 0) throw Error("negative power");
  std::vector<int> d(v.truncation + 1, 0);
  for (int n = 0; n <= v.truncation; ++n)
    for (const auto& c : compositions(n, m)) {
      long p = 1;
      for (int x : c) p *= v.dim(x);
      d[n] += static_cast<int>(p);
    }
  return GradedObject(v.truncation, d);
}

GradedMap m_fold_cauchy(const GradedMap& f, int m) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source.truncation; ++n) {
    std::vector<Matrix> blocks;
    for (const auto& c : compositions(n, m)) {
      std::vector<Matrix> factors;
      for (int x : c) factors.push_back(f.at(x));
      blocks.push_back(kron(factors));
    }
    comps.push_back(direct_sum(blocks));
  }
  return GradedMap(m_fold_cauchy(f.source, m), m_fold_cauchy(f.target, m),
                   std::move(comps));
}

int m_fold_block_offset(const GradedObject& v, int m, int n,
                        const std::vector<int>& comp) {
  int off = 0;
  for (const auto& c : compositions(n, m)) {
    if (c == comp) return off;
    long p = 1;
    for (int x : c) p *= v.dim(x);
    off += static_cast<int>(p);
  }
  throw Error("composition not in block table");
}

// ---- Substitution ----

std::vector<SubBlock> substitution_blocks(int truncation, int degree,
                                          bool positive) {
  std::vector<SubBlock> out;
  if (positive) {
    for (int m = 1; m <= degree; ++m)
      for (auto& c : positive_compositions(degree, m))
        out.push_back({m, std::move(c)});
  } else {
    for (int m = 0; m <= truncation; ++m)
      for (auto& c : compositions(degree, m)) out.push_back({m, std::move(c)});
  }
  return out;
}

bool positive_check(const GradedObject& v) { return v.dim(0) == 0; }

GradedObject positive_truncate(const GradedObject& v) {
  std::vector<int> d = v.dims;
  d[0] = 0;
  return GradedObject(v.truncation, d);
}

namespace {

long sub_block_dim(const GradedObject& v, const GradedObject& w,
                   const SubBlock& b) {
  long p = v.dim(b.m);
  for (int x : b.comp) p *= w.dim(x);
  return p;
}

}  // namespace

GradedObject substitution_truncated(const GradedObject& v,
                                    const GradedObject& w) {
  require_same_truncation(v, w);
  int N = v.truncation;
  std::vector<int> d(N + 1, 0);
  for (int n = 0; n <= N; ++n)
    for (const auto& b : substitution_blocks(N, n, false))
      d[n] += static_cast<int>(sub_block_dim(v, w, b));
  return GradedObject(N, d);
}

GradedObject substitution(const GradedObject& v, const GradedObject& w,
                          bool v_finitely_supported) {
  require_same_truncation(v, w);
  if (!positive_check(w) && !v_finitely_supported)
    throw Error("infinite m-sum at truncation");
  return substitution_truncated(v, w);
}

GradedMap substitution_truncated(const GradedMap& f, const GradedMap& g) {
  int N = f.source.truncation;
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    std::vector<Matrix> blocks;
    for (const auto& b : substitution_blocks(N, n, false)) {
      std::vector<Matrix> factors{f.at(b.m)};
      for (int x : b.comp) factors.push_back(g.at(x));
      blocks.push_back(kron(factors));
    }
    comps.push_back(direct_sum(blocks));
  }
  return GradedMap(substitution_truncated(f.source, g.source),
                   substitution_truncated(f.target, g.target),
                   std::move(comps));
}

GradedMap substitution(const GradedMap& f, const GradedMap& g,
                       bool v_finitely_supported) {
  if (!positive_check(g.source) || !positive_check(g.target))
    if (!v_finitely_supported) throw Error("infinite m-sum at truncation");
  return substitution_truncated(f, g);
}

GradedMap substitution_lunitor(const GradedObject& v) {
  GradedObject x = substitution_unit(v.truncation);
  GradedObject src = substitution_truncated(x, v);
  // Only the block (m=1, (n)) is nonzero, and it sits at offset 0.
  return GradedMap(src, v, graded_identity(v).components);
}

GradedMap substitution_runitor(const GradedObject& v) {
  GradedObject x = substitution_unit(v.truncation);
  GradedObject src = substitution_truncated(v, x);
  // Only the block (m=n, (1,...,1)) is nonzero; earlier blocks all vanish.
  return GradedMap(src, v, graded_identity(v).components);
}

GradedMap substitution_associator(const GradedObject& v, const GradedObject& w,
                                  const GradedObject& u) {
  require_same_truncation(v, w);
  require_same_truncation(v, u);
  int N = v.truncation;
  GradedObject vw = substitution_truncated(v, w);
  GradedObject wu = substitution_truncated(w, u);
  GradedObject src = substitution_truncated(vw, u);
  GradedObject dst = substitution_truncated(v, wu);
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix c(dst.dim(n), src.dim(n));
    int src_off = 0;
    for (const auto& outer : substitution_blocks(N, n, false)) {
      int r = outer.m;
      const std::vector<int>& beta = outer.comp;  // r parts of n, for U
      for (const auto& inner : substitution_blocks(N, r, false)) {
        int m = inner.m;
        const std::vector<int>& gamma = inner.comp;  // m parts of r, for W
        // Source block basis: V_m (x) W_{gamma_1..m} (x) U_{beta_1..r},
        // where (V o W)_r block (m, gamma) sits inside the outer block.
        std::vector<int> fdims{v.dim(m)};
        for (int x : gamma) fdims.push_back(w.dim(x));
        for (int x : beta) fdims.push_back(u.dim(x));
        long bdim = product_of(fdims);
        int inner_off = 0;
        for (const auto& b2 : substitution_blocks(N, r, false)) {
          if (b2.m == m && b2.comp == gamma) break;
          inner_off += static_cast<int>(sub_block_dim(v, w, b2));
        }
        long udim = 1;
        for (int x : beta) udim *= u.dim(x);
        int src_block = src_off + inner_off * static_cast<int>(udim);
        if (bdim != 0) {
          // Regroup: group j of beta has gamma_j entries; delta_j = its sum.
          std::vector<std::vector<int>> groups(m);
          std::vector<int> delta(m, 0);
          {
            int pos = 0;
            for (int j = 0; j < m; ++j)
              for (int t = 0; t < gamma[j]; ++t) {
                groups[j].push_back(beta[pos]);
                delta[j] += beta[pos];
                ++pos;
              }
          }
          // Target outer block (m, delta); factor j is (W o U)_{delta_j}
          // restricted to its inner block (gamma_j, groups[j]).
          int dst_outer = 0;
          for (const auto& b2 : substitution_blocks(N, n, false)) {
            if (b2.m == m && b2.comp == delta) break;
            dst_outer += static_cast<int>(sub_block_dim(v, wu, b2));
          }
          std::vector<int> in_off(m, 0), in_dim(m, 0);
          for (int j = 0; j < m; ++j) {
            int off = 0;
            for (const auto& b2 : substitution_blocks(N, delta[j], false)) {
              if (b2.m == gamma[j] && b2.comp == groups[j]) break;
              off += static_cast<int>(sub_block_dim(w, u, b2));
            }
            in_off[j] = off;
            in_dim[j] = 1;
            in_dim[j] *= w.dim(gamma[j]);
            for (int x : groups[j]) in_dim[j] *= u.dim(x);
          }
          // Walk the source block basis and route each vector.
          std::vector<int> idx(fdims.size(), 0);
          for (long t = 0; t < bdim; ++t) {
            // target coordinate per factor j: flatten (w_j, u-group j) and
            // shift by the inner block offset.
            long row = idx[0];  // V_m coordinate, major
            int upos = 1 + m;   // index into idx for U factors
            std::vector<int> usave;
            int up = upos;
            for (int j = 0; j < m; ++j) {
              long cj = idx[1 + j];
              for (size_t g2 = 0; g2 < groups[j].size(); ++g2)
                cj = cj * u.dim(groups[j][g2]) + idx[up++];
              cj += in_off[j];
              row = row * wu.dim(delta[j]) + cj;
            }
            long col = 0;
            for (size_t p = 0; p < fdims.size(); ++p)
              col = col * fdims[p] + idx[p];
            c(static_cast<int>(dst_outer + row),
              static_cast<int>(src_block + col)) = 1;
            for (int p = static_cast<int>(fdims.size()) - 1; p >= 0; --p) {
              if (++idx[p] < fdims[p]) break;
              idx[p] = 0;
            }
          }
        }
      }
      src_off += static_cast<int>(sub_block_dim(vw, u, outer));
    }
    comps.push_back(std::move(c));
  }
  return GradedMap(src, dst, std::move(comps));
}

// ---- Internal homs ----

GradedObject internal_hom(ProductKind kind, const GradedObject& v,
                          const GradedObject& w) {
  require_same_truncation(v, w);
  int N = v.truncation;
  std::vector<int> d(N + 1, 0);
  switch (kind) {
    case ProductKind::Hadamard:
      for (int n = 0; n <= N; ++n) d[n] = v.dim(n) * w.dim(n);
      break;
    case ProductKind::Cauchy:
      for (int n = 0; n <= N; ++n)
        for (int i = 0; i + n <= N; ++i) d[n] += v.dim(i) * w.dim(i + n);
      break;
    case ProductKind::Substitution:
      for (int n = 0; n <= N; ++n) {
        GradedObject p = m_fold_cauchy(v, n);
        for (int m = 0; m <= N; ++m) d[n] += p.dim(m) * w.dim(m);
      }
      break;
  }
  return GradedObject(N, d);
}

GradedMap hadamard_hom_evaluation(const GradedObject& v,
                                  const GradedObject& w) {
  GradedObject h = internal_hom(ProductKind::Hadamard, v, w);
  GradedObject src = hadamard(v, h);
  std::vector<Matrix> comps;
  for (int n = 0; n <= v.truncation; ++n) {
    Matrix c(w.dim(n), src.dim(n));
    int dv = v.dim(n), dw = w.dim(n);
    for (int s = 0; s < dv; ++s)
      for (int t = 0; t < dw; ++t) c(t, s * (dv * dw) + s * dw + t) = 1;
    comps.push_back(std::move(c));
  }
  return GradedMap(src, w, std::move(comps));
}

GradedMap cauchy_hom_evaluation(const GradedObject& v, const GradedObject& w) {
  int N = v.truncation;
  GradedObject h = internal_hom(ProductKind::Cauchy, v, w);
  GradedObject src = cauchy(v, h);
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix c(w.dim(n), src.dim(n));
    for (int k = 0; k <= n; ++k) {
      int m = n - k;
      // Hom blocks of h at degree m: [V_i, W_{i+m}] ascending i; evaluation
      // hits the i = k block.
      int hom_off = 0;
      for (int i = 0; i < k; ++i) hom_off += v.dim(i) * w.dim(i + m);
      if (k + m > N) continue;
      int dv = v.dim(k), dw = w.dim(n);
      int base = cauchy_block_offset(v, h, n, k);
      for (int s = 0; s < dv; ++s)
        for (int t = 0; t < dw; ++t)
          c(t, base + s * h.dim(m) + hom_off + s * dw + t) = 1;
    }
    comps.push_back(std::move(c));
  }
  return GradedMap(src, w, std::move(comps));
}

GradedObject product(ProductKind kind, const GradedObject& v,
                     const GradedObject& w) {
  switch (kind) {
    case ProductKind::Hadamard: return hadamard(v, w);
    case ProductKind::Cauchy: return cauchy(v, w);
    default: return substitution_truncated(v, w);
  }
}

GradedMap product(ProductKind kind, const GradedMap& f, const GradedMap& g) {
  switch (kind) {
    case ProductKind::Hadamard: return hadamard(f, g);
    case ProductKind::Cauchy: return cauchy(f, g);
    default: return substitution_truncated(f, g);
  }
}

GradedObject product_unit_object(ProductKind kind, int truncation) {
  switch (kind) {
    case ProductKind::Hadamard: return hadamard_unit(truncation);
    case ProductKind::Cauchy: return cauchy_unit(truncation);
    default: return substitution_unit(truncation);
  }
}

GradedMap product_lunitor(ProductKind kind, const GradedObject& v) {
  switch (kind) {
    case ProductKind::Hadamard: return hadamard_lunitor(v);
    case ProductKind::Cauchy: return cauchy_lunitor(v);
    default: return substitution_lunitor(v);
  }
}

GradedMap product_runitor(ProductKind kind, const GradedObject& v) {
  switch (kind) {
    case ProductKind::Hadamard: return hadamard_runitor(v);
    case ProductKind::Cauchy: return cauchy_runitor(v);
    default: return substitution_runitor(v);
  }
}

GradedMap product_associator(ProductKind kind, const GradedObject& v,
                             const GradedObject& w, const GradedObject& u) {
  switch (kind) {
    case ProductKind::Hadamard: return hadamard_associator(v, w, u);
    case ProductKind::Cauchy: return cauchy_associator(v, w, u);
    default: return substitution_associator(v, w, u);
  }
}

std::vector<Rational> hilbert(const GradedObject& v) {
  std::vector<Rational> out;
  for (int d : v.dims) out.emplace_back(d);
  return out;
}

}  // namespace duocat
