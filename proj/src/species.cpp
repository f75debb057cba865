#include "duocat/species.hpp"

#include <algorithm>

namespace duocat {

namespace {

Matrix gen_or_identity(const SymmetricSequence& a, int n, int i) {
  if (n < 2) throw Error("no adjacent transposition at this degree");
  return a.gens[n][i];
}

int find_shuffle(const std::vector<Shuffle>& list, const Shuffle& sh) {
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == sh) return static_cast<int>(i);
  throw Error("shuffle not in block table");
}

}  // namespace

SymmetricSequence::SymmetricSequence(GradedObject o,
                                     std::vector<std::vector<Matrix>> g)
    : ob(std::move(o)), gens(std::move(g)) {
  if (static_cast<int>(gens.size()) != ob.truncation + 1)
    throw Error("species actions need one generator list per degree");
  for (int n = 0; n <= ob.truncation; ++n) {
    int want = n >= 2 ? n - 1 : 0;
    if (static_cast<int>(gens[n].size()) != want)
      throw Error("species generator count mismatch");
    for (const Matrix& m : gens[n])
      if (m.rows() != ob.dim(n) || m.cols() != ob.dim(n))
        throw Error("species generator shape mismatch");
  }
}

SymmetricSequence trivial_species(const GradedObject& v) {
  std::vector<std::vector<Matrix>> g(v.truncation + 1);
  for (int n = 2; n <= v.truncation; ++n)
    g[n].assign(n - 1, Matrix::identity(v.dim(n)));
  return SymmetricSequence(v, std::move(g));
}

Matrix species_action(const SymmetricSequence& a, int n, const Perm& p) {
  if (static_cast<int>(p.size()) != n) throw Error("permutation size mismatch");
  Matrix r = Matrix::identity(a.dim(n));
  for (int i : adjacent_word(p)) r = r * gen_or_identity(a, n, i);
  return r;
}

bool coxeter_check(const SymmetricSequence& a) {
  for (int n = 2; n <= a.truncation(); ++n) {
    const auto& g = a.gens[n];
    Matrix id = Matrix::identity(a.dim(n));
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i] * g[i] != id) return false;
      if (i + 1 < g.size() &&
          g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1])
        return false;
      for (size_t j = i + 2; j < g.size(); ++j)
        if (g[i] * g[j] != g[j] * g[i]) return false;
    }
  }
  return true;
}

bool equivariance_check(const GradedMap& f, const SymmetricSequence& a,
                        const SymmetricSequence& b) {
  if (!(f.source == a.ob) || !(f.target == b.ob))
    throw Error("equivariance check shape mismatch");
  for (int n = 2; n <= a.truncation(); ++n)
    for (int i = 0; i + 2 <= n; ++i)
      if (f.at(n) * a.gens[n][i] != b.gens[n][i] * f.at(n)) return false;
  return true;
}

SymmetricSequence species_hadamard_unit(int truncation) {
  return trivial_species(hadamard_unit(truncation));
}
SymmetricSequence species_cauchy_unit(int truncation) {
  return trivial_species(cauchy_unit(truncation));
}
SymmetricSequence species_substitution_unit(int truncation) {
  return trivial_species(substitution_unit(truncation));
}

SymmetricSequence species_hadamard(const SymmetricSequence& a,
                                   const SymmetricSequence& b) {
  GradedObject o = hadamard(a.ob, b.ob);
  std::vector<std::vector<Matrix>> g(o.truncation + 1);
  for (int n = 2; n <= o.truncation; ++n)
    for (int i = 0; i + 2 <= n; ++i)
      g[n].push_back(kron(a.gens[n][i], b.gens[n][i]));
  return SymmetricSequence(std::move(o), std::move(g));
}

// ---- shared machinery for multi-factor Cauchy blocks ----

namespace {

struct MBlock {
  std::vector<int> comp;
  Shuffle sh;
  int offset;
  int dim;
  std::vector<int> fdims;  // per-factor dimensions
};

std::vector<MBlock> mblocks(const std::vector<const GradedObject*>& fs,
                            int n) {
  int m = static_cast<int>(fs.size());
  std::vector<MBlock> out;
  int off = 0;
  for (const auto& c : compositions(n, m))
    for (const auto& sh : shuffles(c)) {
      std::vector<int> fdims;
      int d = 1;
      for (int t = 0; t < m; ++t) {
        fdims.push_back(fs[t]->dim(c[t]));
        d *= fdims.back();
      }
      out.push_back({c, sh, off, d, fdims});
      off += d;
    }
  return out;
}

int find_block(const std::vector<MBlock>& blocks, const std::vector<int>& comp,
               const Shuffle& sh) {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].comp == comp && blocks[i].sh == sh)
      return static_cast<int>(i);
  throw Error("block not in table");
}

/// The action of s_i on the degree-n component of the multi-factor Cauchy
/// product: transporting position sets and conjugating to inner generators.
Matrix mgen(const std::vector<const SymmetricSequence*>& fs, int n, int i) {
  std::vector<const GradedObject*> obs;
  for (auto* f : fs) obs.push_back(&f->ob);
  auto blocks = mblocks(obs, n);
  int total = 0;
  for (const auto& b : blocks) total += b.dim;
  Matrix r(total, total);
  int m = static_cast<int>(fs.size());
  for (const auto& b : blocks) {
    if (b.dim == 0) continue;
    int t1 = -1, t2 = -1;
    for (int t = 0; t < m; ++t) {
      for (int v : b.sh.parts[t]) {
        if (v == i) t1 = t;
        if (v == i + 1) t2 = t;
      }
    }
    if (t1 == t2) {
      // Both letters in the same factor: i and i+1 are adjacent in its
      // sorted position list, so the inner action is an adjacent generator.
      int j = 0;
      while (b.sh.parts[t1][j] != i) ++j;
      std::vector<Matrix> factors;
      for (int t = 0; t < m; ++t)
        factors.push_back(t == t1 ? gen_or_identity(*fs[t], b.comp[t], j)
                                  : Matrix::identity(b.fdims[t]));
      r.set_block(b.offset, b.offset, kron(factors));
    } else {
      // Letters in different factors: the transposition only re-labels the
      // position sets; the inner bases are carried by the identity.
      Shuffle ns = b.sh;
      for (int& v : ns.parts[t1])
        if (v == i) v = i + 1;
      for (int& v : ns.parts[t2])
        if (v == i + 1) v = i;
      const MBlock& dst = blocks[find_block(blocks, b.comp, ns)];
      r.set_block(dst.offset, b.offset, Matrix::identity(b.dim));
    }
  }
  return r;
}

SymmetricSequence mcauchy(const std::vector<const SymmetricSequence*>& fs) {
  int N = fs.empty() ? 0 : fs[0]->truncation();
  for (auto* f : fs)
    if (f->truncation() != N) throw Error("truncation mismatch");
  std::vector<const GradedObject*> obs;
  for (auto* f : fs) obs.push_back(&f->ob);
  std::vector<int> dims(N + 1, 0);
  for (int n = 0; n <= N; ++n)
    for (const auto& b : mblocks(obs, n)) dims[n] += b.dim;
  GradedObject o(N, dims);
  std::vector<std::vector<Matrix>> g(N + 1);
  for (int n = 2; n <= N; ++n)
    for (int i = 0; i + 2 <= n; ++i) g[n].push_back(mgen(fs, n, i));
  return SymmetricSequence(std::move(o), std::move(g));
}

}  // namespace

std::vector<SpCauchyBlock> species_cauchy_blocks(const GradedObject& a,
                                                 const GradedObject& b,
                                                 int n) {
  std::vector<SpCauchyBlock> out;
  for (const auto& mb : mblocks({&a, &b}, n))
    out.push_back({mb.comp[0], mb.sh, mb.offset, mb.dim});
  return out;
}

SymmetricSequence species_cauchy(const SymmetricSequence& a,
                                 const SymmetricSequence& b) {
  return mcauchy({&a, &b});
}

GradedMap species_cauchy_map(const GradedMap& f, const GradedMap& g) {
  if (f.source.truncation != g.source.truncation)
    throw Error("truncation mismatch");
  int N = f.source.truncation;
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    std::vector<Matrix> blocks;
    for (const auto& b : mblocks({&f.source, &g.source}, n))
      blocks.push_back(kron(f.at(b.comp[0]), g.at(b.comp[1])));
    comps.push_back(direct_sum(blocks));
  }
  auto dims_of = [N](const GradedObject& x, const GradedObject& y) {
    std::vector<int> d(N + 1, 0);
    for (int n = 0; n <= N; ++n)
      for (const auto& b : mblocks({&x, &y}, n)) d[n] += b.dim;
    return GradedObject(N, d);
  };
  return GradedMap(dims_of(f.source, g.source), dims_of(f.target, g.target),
                   std::move(comps));
}

GradedMap species_cauchy_lunitor(const SymmetricSequence& a) {
  GradedObject src = species_cauchy(species_cauchy_unit(a.truncation()), a).ob;
  return GradedMap(src, a.ob, graded_identity(a.ob).components);
}

GradedMap species_cauchy_runitor(const SymmetricSequence& a) {
  GradedObject src = species_cauchy(a, species_cauchy_unit(a.truncation())).ob;
  return GradedMap(src, a.ob, graded_identity(a.ob).components);
}

GradedMap species_cauchy_associator(const SymmetricSequence& a,
                                    const SymmetricSequence& b,
                                    const SymmetricSequence& c) {
  int N = a.truncation();
  SymmetricSequence ab = species_cauchy(a, b);
  SymmetricSequence bc = species_cauchy(b, c);
  GradedObject src = species_cauchy(ab, c).ob;
  GradedObject dst = species_cauchy(a, bc).ob;
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix mat(dst.dim(n), src.dim(n));
    auto outer_src = species_cauchy_blocks(ab.ob, c.ob, n);
    auto outer_dst = species_cauchy_blocks(a.ob, bc.ob, n);
    for (const auto& ob : outer_src) {
      if (ob.dim == 0) continue;
      int adeg = ob.k;  // degree of the (A.B) factor
      for (const auto& ib : species_cauchy_blocks(a.ob, b.ob, adeg)) {
        if (ib.dim == 0) continue;
        int k = ib.k, bd = adeg - k, cd = n - adeg;
        int dA = a.dim(k), dB = b.dim(bd), dC = c.dim(cd);
        if (dA * dB * dC == 0) continue;
        // Absolute position sets of the three factors inside {0..n-1}.
        std::vector<int> absA, absB;
        for (int p : ib.sh.parts[0]) absA.push_back(ob.sh.parts[0][p]);
        for (int p : ib.sh.parts[1]) absB.push_back(ob.sh.parts[0][p]);
        const std::vector<int>& absC = ob.sh.parts[1];
        std::vector<int> bcset = absB;
        bcset.insert(bcset.end(), absC.begin(), absC.end());
        std::sort(bcset.begin(), bcset.end());
        Shuffle so{{absA, bcset}};
        // Relative positions of B and C inside the merged (B.C) letter set.
        auto ranks = [&](const std::vector<int>& xs) {
          std::vector<int> r;
          for (int x : xs)
            r.push_back(static_cast<int>(
                std::lower_bound(bcset.begin(), bcset.end(), x) -
                bcset.begin()));
          return r;
        };
        Shuffle si{{ranks(absB), ranks(absC)}};
        int dst_outer = -1, dst_inner = -1;
        for (const auto& x : outer_dst)
          if (x.k == k && x.sh == so) dst_outer = x.offset;
        for (const auto& x : species_cauchy_blocks(b.ob, c.ob, n - k))
          if (x.k == bd && x.sh == si) dst_inner = x.offset;
        if (dst_outer < 0 || dst_inner < 0)
          throw Error("block not in table");
        int dbc = bc.dim(n - k);
        for (int ia = 0; ia < dA; ++ia)
          for (int jb = 0; jb < dB; ++jb)
            for (int jc = 0; jc < dC; ++jc) {
              int col = ob.offset +
                        (ib.offset + ia * dB + jb) * dC + jc;
              int row = dst_outer + ia * dbc + dst_inner + jb * dC + jc;
              mat(row, col) = 1;
            }
      }
    }
    comps.push_back(std::move(mat));
  }
  return GradedMap(src, dst, std::move(comps));
}

std::vector<SpFoldBlock> species_m_fold_blocks(const GradedObject& a, int m,
                                               int n) {
  std::vector<const GradedObject*> obs(m, &a);
  std::vector<SpFoldBlock> out;
  for (const auto& mb : mblocks(obs, n))
    out.push_back({mb.comp, mb.sh, mb.offset, mb.dim});
  return out;
}

SpeciesPower species_m_fold(const SymmetricSequence& a, int m) {
  if (m < 0) throw Error("negative power");
  int N = a.truncation();
  std::vector<const SymmetricSequence*> fs(m, &a);
  SpeciesPower out;
  out.seq = m == 0 ? species_cauchy_unit(N) : mcauchy(fs);
  out.outer.assign(N + 1, {});
  std::vector<const GradedObject*> obs(m, &a.ob);
  for (int n = 0; n <= N; ++n) {
    for (int j = 0; j + 2 <= m; ++j) {
      auto blocks = mblocks(obs, n);
      Matrix r(out.seq.dim(n), out.seq.dim(n));
      for (const auto& b : blocks) {
        if (b.dim == 0) continue;
        std::vector<int> nc = b.comp;
        std::swap(nc[j], nc[j + 1]);
        Shuffle ns = b.sh;
        std::swap(ns.parts[j], ns.parts[j + 1]);
        const MBlock& dst = blocks[find_block(blocks, nc, ns)];
        std::vector<int> tau(m);
        for (int t = 0; t < m; ++t) tau[t] = t;
        std::swap(tau[j], tau[j + 1]);
        r.set_block(dst.offset, b.offset, factor_reorder(b.fdims, tau));
      }
      out.outer[n].push_back(std::move(r));
    }
  }
  return out;
}

SpeciesSubstitution species_substitution(const SymmetricSequence& a,
                                         const SymmetricSequence& b,
                                         bool a_finitely_supported,
                                         size_t group_bound) {
  if (a.truncation() != b.truncation()) throw Error("truncation mismatch");
  if (!positive_check(b.ob) && !a_finitely_supported)
    throw Error("infinite m-sum at truncation");
  int N = a.truncation();
  std::vector<SpeciesPower> powers;
  for (int m = 0; m <= N; ++m) powers.push_back(species_m_fold(b, m));
  SpeciesSubstitution out;
  out.inclusion.assign(N + 1, {});
  out.quotient.assign(N + 1, {});
  std::vector<int> dims(N + 1, 0);
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= N; ++m) {
      int pre = a.dim(m) * powers[m].seq.dim(n);
      Matrix inc, quot;
      if (pre == 0 || m < 2) {
        inc = Matrix::identity(pre);
        quot = Matrix::identity(pre);
      } else {
        std::vector<Matrix> gens;
        for (int j = 0; j + 2 <= m; ++j)
          gens.push_back(kron(a.gens[m][j], powers[m].outer[n][j]));
        Coinvariants ci = coinvariants(gens, group_bound);
        inc = ci.inclusion;
        quot = ci.quotient;
      }
      dims[n] += inc.cols();
      out.inclusion[n].push_back(std::move(inc));
      out.quotient[n].push_back(std::move(quot));
    }
  }
  GradedObject o(N, dims);
  std::vector<std::vector<Matrix>> g(N + 1);
  for (int n = 2; n <= N; ++n)
    for (int i = 0; i + 2 <= n; ++i) {
      std::vector<Matrix> blocks;
      for (int m = 0; m <= N; ++m) {
        Matrix inner =
            kron(Matrix::identity(a.dim(m)), powers[m].seq.gens[n][i]);
        blocks.push_back(out.quotient[n][m] * inner * out.inclusion[n][m]);
      }
      g[n].push_back(direct_sum(blocks));
    }
  out.result = SymmetricSequence(std::move(o), std::move(g));
  return out;
}

GradedObject forget_to_graded(const SymmetricSequence& a) { return a.ob; }

std::vector<Rational> egf(const GradedObject& v) {
  std::vector<Rational> out;
  for (int n = 0; n <= v.truncation; ++n)
    out.push_back(Rational(v.dim(n)) / Rational(factorial(n)));
  return out;
}

std::vector<Rational> egf(const SymmetricSequence& a) { return egf(a.ob); }

}  // namespace duocat
