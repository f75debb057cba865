#include "duocat/measuring.hpp"

#include <sstream>

namespace duocat {
namespace {

void add_map_eq(Report& rep, const std::string& axiom, const GradedMap& lhs,
                const GradedMap& rhs) {
  int N = lhs.source.truncation;
  for (int n = 0; n <= N; ++n) {
    const Matrix &a = lhs.at(n), &b = rhs.at(n);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      rep.add(axiom, {n}, false, "shape mismatch");
      continue;
    }
    bool done = false;
    for (int i = 0; i < a.rows() && !done; ++i)
      for (int j = 0; j < a.cols() && !done; ++j)
        if (a(i, j) != b(i, j)) {
          std::ostringstream os;
          os << "degree " << n << " entry (" << i << "," << j
             << "): " << to_string(a(i, j)) << " vs " << to_string(b(i, j));
          rep.add(axiom, {n}, false, os.str());
          done = true;
        }
    if (!done) rep.add(axiom, {n}, true);
  }
}

StructureKind monoid_kind(ProductKind p) {
  switch (p) {
    case ProductKind::Hadamard: return StructureKind::HadamardMonoid;
    case ProductKind::Cauchy: return StructureKind::GradedMonoid;
    default: return StructureKind::Operad;
  }
}

// Right adjunct of f : c o x -> b over the outer product: reindexes f as
// x -> [c,b]. Hom bases are (source, target) pairs, source-major; for the
// Cauchy hom the blocks [c_i, b_{i+m}] stack in ascending i.
GradedMap curry(ProductKind outer, const GradedObject& c,
                const GradedObject& x, const GradedMap& f) {
  if (outer == ProductKind::Substitution)
    throw Error("no substitution hom transpose");
  const GradedObject& b = f.target;
  int N = c.truncation;
  GradedObject h = internal_hom(outer, c, b);
  std::vector<Matrix> comps;
  for (int m = 0; m <= N; ++m) {
    Matrix out(h.dim(m), x.dim(m));
    if (outer == ProductKind::Hadamard) {
      const Matrix& F = f.at(m);
      for (int s = 0; s < c.dim(m); ++s)
        for (int t = 0; t < b.dim(m); ++t)
          for (int j = 0; j < x.dim(m); ++j)
            out(s * b.dim(m) + t, j) = F(t, s * x.dim(m) + j);
    } else {
      int hom_off = 0;
      for (int i = 0; i + m <= N; ++i) {
        const Matrix& F = f.at(i + m);
        int base = cauchy_block_offset(c, x, i + m, i);
        for (int s = 0; s < c.dim(i); ++s)
          for (int t = 0; t < b.dim(i + m); ++t)
            for (int j = 0; j < x.dim(m); ++j)
              out(hom_off + s * b.dim(i + m) + t, j) =
                  F(t, base + s * x.dim(m) + j);
        hom_off += c.dim(i) * b.dim(i + m);
      }
    }
    comps.push_back(std::move(out));
  }
  return GradedMap(x, h, std::move(comps));
}

void validate_candidate(const MeasuringCandidate& m) {
  ProductKind outer = pair_outer(m.pair), inner = pair_inner(m.pair);
  StructureKind mk = monoid_kind(inner);
  if (m.comonoid.kind != kind_dual(mk))
    throw Error("comonoid kind does not match the pair");
  if (m.mon_a.kind != mk || m.mon_b.kind != mk)
    throw Error("monoid kind does not match the pair");
  if (m.phi.source != product(outer, m.comonoid.carrier, m.mon_a.carrier) ||
      m.phi.target != m.mon_b.carrier)
    throw Error("shape mismatch");
}

bool structured_equal(const Structured& a, const Structured& b) {
  return a.kind == b.kind && a.carrier == b.carrier && a.comps == b.comps &&
         a.unit == b.unit;
}

}  // namespace

Report check_measuring(const MeasuringCandidate& m) {
  validate_candidate(m);
  ProductKind outer = pair_outer(m.pair), inner = pair_inner(m.pair);
  const GradedObject& c = m.comonoid.carrier;
  const GradedObject& a = m.mon_a.carrier;
  int N = c.truncation;

  GradedMap delta = assemble_comult(m.comonoid);
  GradedMap eps = assemble_counit(m.comonoid);
  GradedMap mu_a = assemble_mult(m.mon_a);
  GradedMap mu_b = assemble_mult(m.mon_b);
  GradedMap eta_a = assemble_unit(m.mon_a);
  GradedMap eta_b = assemble_unit(m.mon_b);
  GradedMap zeta = interchange(m.pair, c, c, a, a);
  GradedObject aa = product(inner, a, a);

  Report rep;
  GradedMap lhs = compose(
      mu_b, compose(product(inner, m.phi, m.phi),
                    compose(zeta, product(outer, delta,
                                          graded_identity(aa)))));
  GradedMap rhs = compose(m.phi, product(outer, graded_identity(c), mu_a));
  add_map_eq(rep, "multiplicativity", lhs, rhs);

  GradedObject j = product_unit_object(inner, N);
  StructureMaps sm = structure_maps(m.pair, c);
  GradedMap unit_lhs = compose(
      eta_b, compose(sm.mu_j, product(outer, eps, graded_identity(j))));
  GradedMap unit_rhs =
      compose(m.phi, product(outer, graded_identity(c), eta_a));
  add_map_eq(rep, "unitality", unit_lhs, unit_rhs);
  return rep;
}

GradedMap measuring_transpose(const MeasuringCandidate& m) {
  validate_candidate(m);
  return curry(pair_outer(m.pair), m.comonoid.carrier, m.mon_a.carrier,
               m.phi);
}

Report check_monoid_map(const GradedMap& f, const Structured& a,
                        const Structured& b) {
  if (a.kind != b.kind || kind_is_comonoid(a.kind))
    throw Error("monoid kinds required");
  if (f.source != a.carrier || f.target != b.carrier)
    throw Error("shape mismatch");
  ProductKind p = kind_product(a.kind);
  Report rep;
  add_map_eq(rep, "multiplicative", compose(f, assemble_mult(a)),
             compose(assemble_mult(b), product(p, f, f)));
  add_map_eq(rep, "unital", compose(f, assemble_unit(a)), assemble_unit(b));
  return rep;
}

Structured convolution_monoid(PairTag t, const Structured& z,
                              const Structured& v) {
  if (t == PairTag::SubOverHadamard)
    throw Error("no substitution hom convolution");
  ProductKind outer = pair_outer(t), inner = pair_inner(t);
  StructureKind mk = monoid_kind(inner);
  if (z.kind != kind_dual(mk) || v.kind != mk)
    throw Error("structure kind does not match the pair");
  const GradedObject &zc = z.carrier, &vc = v.carrier;
  int N = zc.truncation;

  GradedObject h = internal_hom(outer, zc, vc);
  GradedObject hh = product(inner, h, h);
  GradedMap ev = outer == ProductKind::Cauchy
                     ? cauchy_hom_evaluation(zc, vc)
                     : hadamard_hom_evaluation(zc, vc);
  GradedMap zeta = interchange(t, zc, zc, h, h);
  GradedMap big = compose(
      assemble_mult(v),
      compose(product(inner, ev, ev),
              compose(zeta, product(outer, assemble_comult(z),
                                    graded_identity(hh)))));
  GradedMap mult = curry(outer, zc, hh, big);

  GradedObject j = product_unit_object(inner, N);
  StructureMaps sm = structure_maps(t, zc);
  GradedMap unit_big = compose(
      assemble_unit(v),
      compose(sm.mu_j, product(outer, assemble_counit(z),
                               graded_identity(j))));
  GradedMap unit_map = curry(outer, zc, j, unit_big);
  return structure_from_maps(mk, h, mult, unit_map);
}

Structured cauchy_convolution_monoid(const Structured& z, const Structured& v,
                                     const Rational& q) {
  if (z.kind != StructureKind::GradedComonoid ||
      v.kind != StructureKind::GradedMonoid)
    throw Error("graded comonoid and monoid required");
  const GradedObject &zc = z.carrier, &vc = v.carrier;
  int N = zc.truncation;
  GradedObject h = internal_hom(ProductKind::Cauchy, zc, vc);
  GradedObject hh = cauchy(h, h);
  GradedObject zz = cauchy(zc, zc);
  GradedObject zh = cauchy(zc, h);

  // Middle swap (z.z).(h.h) -> (z.h).(z.h): the second comonoid factor
  // moves past the first hom factor, picking up q^{deg * deg}.
  std::vector<Matrix> swap_comps;
  GradedObject src = cauchy(zz, hh), dst = cauchy(zh, zh);
  for (int n = 0; n <= N; ++n) {
    Matrix out(dst.dim(n), src.dim(n));
    for (int u = 0; u <= n; ++u) {
      int src_outer = cauchy_block_offset(zz, hh, n, u);
      for (int p = 0; p <= u; ++p) {
        int qd = u - p;
        int src_z = cauchy_block_offset(zc, zc, u, p);
        for (int k = 0; k + u <= n; ++k) {
          int md = n - u - k;
          int src_h = cauchy_block_offset(h, h, n - u, k);
          int dst_outer = cauchy_block_offset(zh, zh, n, p + k);
          int dst_1 = cauchy_block_offset(zc, h, p + k, p);
          int dst_2 = cauchy_block_offset(zc, h, qd + md, qd);
          Rational coeff = 1;
          for (int e = 0; e < qd * k; ++e) coeff *= q;
          for (int zp = 0; zp < zc.dim(p); ++zp)
            for (int zq = 0; zq < zc.dim(qd); ++zq)
              for (int hk = 0; hk < h.dim(k); ++hk)
                for (int hm = 0; hm < h.dim(md); ++hm) {
                  int col = src_outer +
                            (src_z + zp * zc.dim(qd) + zq) * hh.dim(n - u) +
                            src_h + hk * h.dim(md) + hm;
                  int row = dst_outer +
                            (dst_1 + zp * h.dim(k) + hk) *
                                zh.dim(qd + md) +
                            dst_2 + zq * h.dim(md) + hm;
                  out(row, col) = coeff;
                }
        }
      }
    }
    swap_comps.push_back(std::move(out));
  }
  GradedMap swap(src, dst, std::move(swap_comps));

  GradedMap ev = cauchy_hom_evaluation(zc, vc);
  GradedMap big = compose(
      assemble_mult(v),
      compose(cauchy(ev, ev),
              compose(swap, cauchy(assemble_comult(z),
                                   graded_identity(hh)))));
  GradedMap mult = curry(ProductKind::Cauchy, zc, hh, big);

  GradedObject j = cauchy_unit(N);
  GradedMap unit_big = compose(
      assemble_unit(v),
      compose(cauchy_lunitor(j), cauchy(assemble_counit(z),
                                        graded_identity(j))));
  GradedMap unit_map = curry(ProductKind::Cauchy, zc, j, unit_big);
  return structure_from_maps(StructureKind::GradedMonoid, h, mult, unit_map);
}

MeasuringCandidate compose_measurings(const MeasuringCandidate& psi,
                                      const MeasuringCandidate& phi) {
  if (psi.pair != phi.pair) throw Error("pair mismatch");
  validate_candidate(psi);
  validate_candidate(phi);
  if (!structured_equal(psi.mon_a, phi.mon_b)) throw Error("middle mismatch");
  ProductKind outer = pair_outer(psi.pair), inner = pair_inner(psi.pair);
  const GradedObject &d = psi.comonoid.carrier, &c = phi.comonoid.carrier;
  const GradedObject& a = phi.mon_a.carrier;
  GradedObject dc = product(outer, d, c);

  GradedMap zeta = interchange(psi.pair, d, d, c, c);
  GradedMap comult = compose(
      zeta, product(outer, assemble_comult(psi.comonoid),
                    assemble_comult(phi.comonoid)));
  StructureMaps sm = structure_maps(psi.pair, dc);
  GradedMap counit = compose(
      sm.mu_j, product(outer, assemble_counit(psi.comonoid),
                       assemble_counit(phi.comonoid)));
  Structured dc_comonoid =
      structure_from_maps(kind_dual(monoid_kind(inner)), dc, comult, counit);

  GradedMap assoc = product_associator(outer, d, c, a);
  GradedMap phi_new = compose(
      psi.phi,
      compose(product(outer, graded_identity(d), phi.phi), assoc));
  return {psi.pair, std::move(dc_comonoid), phi.mon_a, psi.mon_b,
          std::move(phi_new)};
}

bool grouplike_check(const GrouplikeCandidate& g) {
  const Structured& s = g.comonoid;
  if (!kind_is_comonoid(s.kind) || kind_is_species(s.kind))
    throw Error("comonoid kind required");
  int n = g.degree;
  std::vector<int> key;
  const Matrix* eps = nullptr;
  switch (kind_product(s.kind)) {
    case ProductKind::Cauchy:
      if (n != 0) throw Error("wrong component");
      key = {0, 0};
      eps = &s.unit[0];
      break;
    case ProductKind::Hadamard:
      key = {n};
      eps = &s.unit[n];
      break;
    case ProductKind::Substitution:
      if (n != 1) throw Error("wrong component");
      key = {1, 1};
      eps = &s.unit[0];
      break;
  }
  if (g.x.cols() != 1 || g.x.rows() != s.carrier.dim(n))
    throw Error("wrong component");
  return s.at(key) * g.x == kron(g.x, g.x) &&
         *eps * g.x == Matrix::scalar(1);
}

GradedMap induced_map(const GrouplikeCandidate& g,
                      const MeasuringCandidate& m) {
  validate_candidate(m);
  if (!structured_equal(g.comonoid, m.comonoid))
    throw Error("comonoid mismatch");
  ProductKind outer = pair_outer(m.pair);
  const GradedObject &c = m.comonoid.carrier, &a = m.mon_a.carrier;
  int N = c.truncation;
  GradedObject ca = product(outer, c, a);
  std::vector<Matrix> comps;
  for (int n = 0; n <= N; ++n) {
    Matrix out(ca.dim(n), a.dim(n));
    switch (outer) {
      case ProductKind::Cauchy:
        // x lands in the degree-0 block c_0 (x) a_n at offset 0.
        if (g.degree != 0) throw Error("wrong component");
        for (int s = 0; s < c.dim(0); ++s)
          for (int j = 0; j < a.dim(n); ++j)
            out(s * a.dim(n) + j, j) = g.x(s, 0);
        break;
      case ProductKind::Hadamard:
        if (g.degree != 0) throw Error("wrong component");
        if (n == 0)
          for (int s = 0; s < c.dim(0); ++s)
            for (int j = 0; j < a.dim(0); ++j)
              out(s * a.dim(0) + j, j) = g.x(s, 0);
        break;
      case ProductKind::Substitution: {
        if (g.degree != 1) throw Error("wrong component");
        int off = 0;
        for (const auto& blk : substitution_blocks(N, n, false)) {
          int w = c.dim(blk.m);
          for (int part : blk.comp) w *= a.dim(part);
          if (blk.m == 1 && blk.comp == std::vector<int>{n}) {
            for (int s = 0; s < c.dim(1); ++s)
              for (int j = 0; j < a.dim(n); ++j)
                out(off + s * a.dim(n) + j, j) = g.x(s, 0);
          }
          off += w;
        }
        break;
      }
    }
    comps.push_back(std::move(out));
  }
  return compose(m.phi, GradedMap(a, ca, std::move(comps)));
}

Structured sweedler_dual_findim(const Structured& a) {
  if (kind_is_comonoid(a.kind) || kind_is_species(a.kind))
    throw Error("monoid kind required");
  for (int n = 1; n <= a.carrier.truncation; ++n)
    if (a.carrier.dim(n) != 0) throw Error("non-concentrated input");
  return structure_dual(a);
}

DualityResult duality_check(const Structured& c, const Structured& a,
                            const Matrix& f) {
  if (c.kind != StructureKind::GradedComonoid ||
      a.kind != StructureKind::GradedMonoid)
    throw Error("graded comonoid and monoid required");
  for (int n = 1; n <= c.carrier.truncation; ++n)
    if (c.carrier.dim(n) != 0) throw Error("non-concentrated input");
  Structured adual = sweedler_dual_findim(a);
  if (f.rows() != adual.carrier.dim(0) || f.cols() != c.carrier.dim(0))
    throw Error("shape mismatch");
  DualityResult r;
  r.comonoid_map = adual.at({0, 0}) * f == kron(f, f) * c.at({0, 0}) &&
                   adual.unit[0] * f == c.unit[0];
  Structured cdual = structure_dual(c);
  Matrix ft = f.transpose();
  r.monoid_map =
      ft * a.at({0, 0}) == cdual.at({0, 0}) * kron(ft, ft) &&
      ft * a.unit[0] == cdual.unit[0];
  return r;
}

FactorizationResult universal_factorization_check(
    const MeasuringCandidate& univ, const MeasuringCandidate& psi,
    const GradedMap& g, const std::optional<GradedMap>& g2) {
  if (univ.pair != psi.pair) throw Error("pair mismatch");
  validate_candidate(univ);
  validate_candidate(psi);
  if (g.source != psi.comonoid.carrier ||
      g.target != univ.comonoid.carrier)
    throw Error("shape mismatch");
  ProductKind outer = pair_outer(univ.pair), inner = pair_inner(univ.pair);

  auto comonoid_map = [&](const GradedMap& cand, std::string& why) {
    bool square =
        maps_equal(compose(assemble_comult(univ.comonoid), cand),
                   compose(product(inner, cand, cand),
                           assemble_comult(psi.comonoid)));
    bool counit = maps_equal(compose(assemble_counit(univ.comonoid), cand),
                             assemble_counit(psi.comonoid));
    if (!square) why = "comultiplication square fails";
    else if (!counit) why = "counit triangle fails";
    return square && counit;
  };
  auto factors_through = [&](const GradedMap& cand) {
    return maps_equal(
        compose(univ.phi,
                product(outer, cand,
                        graded_identity(psi.mon_a.carrier))),
        psi.phi);
  };

  FactorizationResult r;
  r.comonoid_map = comonoid_map(g, r.detail);
  r.factors = factors_through(g);
  if (!r.factors && r.detail.empty()) r.detail = "factorization fails";
  if (g2) {
    std::string why2;
    if (r.factors && r.comonoid_map && comonoid_map(*g2, why2) &&
        factors_through(*g2))
      r.unique = maps_equal(g, *g2);
  }
  return r;
}

}  // namespace duocat
