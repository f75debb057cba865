#pragma once

#include <optional>

#include "duocat/duoidal.hpp"
#include "duocat/structures.hpp"

namespace duocat {

/// A candidate measuring morphism for one interchange pair: a comonoid c
/// and monoids a, b for the pair's inner product, plus
/// phi : c o a -> b over the pair's outer product.
struct MeasuringCandidate {
  PairTag pair = PairTag::CauchyOverHadamard;
  Structured comonoid;
  Structured mon_a, mon_b;
  GradedMap phi;
};

/// A would-be group-like element: a column vector in one degree component
/// of a comonoid carrier.
struct GrouplikeCandidate {
  Structured comonoid;
  int degree = 0;
  Matrix x;
};

/// Verifies the two measuring squares: multiplicativity
///   mu_b . (phi * phi) . zeta . (delta o id)  ==  phi . (id o mu_a)
/// and unitality
///   eta_b . mu_j . (eps o id_j)  ==  phi . (id o eta_a),
/// both as exact componentwise equalities.
Report check_measuring(const MeasuringCandidate& m);

/// phi reshaped as a map a -> [c,b] over the pair's outer product; a pure
/// index permutation under the global Kronecker convention. Not available
/// when the outer product is substitution (no substitution hom here).
GradedMap measuring_transpose(const MeasuringCandidate& m);

/// Monoid-morphism equations for f between two monoid-kind structures of
/// the same kind: f . mu_a == mu_b . (f * f) and f . eta_a == eta_b.
Report check_monoid_map(const GradedMap& f, const Structured& a,
                        const Structured& b);

/// The hom object [z,v] over the pair's outer product carrying the
/// convolution structure for the inner product: a pointwise monoid on the
/// Cauchy hom (CauchyOverHadamard), a graded monoid on the pointwise hom
/// (HadamardOverCauchy), or an operad on the pointwise hom
/// (HadamardOverSubPositive; positive carriers required). SubOverHadamard
/// has no hom here and is rejected.
Structured convolution_monoid(PairTag t, const Structured& z,
                              const Structured& v);

/// The braided Cauchy convolution monoid on [z,v]: multiplication moves a
/// degree-k comonoid factor past a degree-m hom factor at cost q^{k*m}.
Structured cauchy_convolution_monoid(const Structured& z, const Structured& v,
                                     const Rational& q = 1);

/// psi . (id o phi) . associator on the product comonoid d o c; the middle
/// monoid of psi must equal the target monoid of phi.
MeasuringCandidate compose_measurings(const MeasuringCandidate& psi,
                                      const MeasuringCandidate& phi);

/// delta(x) == x (x) x and eps(x) == 1, exactly. The element must sit in
/// degree 0 for Cauchy-kind comonoids and degree 1 for cooperads; pointwise
/// comonoids accept any degree.
bool grouplike_check(const GrouplikeCandidate& g);

/// phi(x o -) : a -> b; pair it with check_monoid_map against the
/// candidate's monoids.
GradedMap induced_map(const GrouplikeCandidate& g,
                      const MeasuringCandidate& m);

/// Finite-dimensional dual comonoid of a degree-0-concentrated monoid
/// (plain transposition). Rejects non-concentrated input.
Structured sweedler_dual_findim(const Structured& a);

/// For f : c -> dual(a) on degree-0-concentrated structures: whether f
/// satisfies the comonoid-morphism equations, and whether its transpose
/// satisfies the monoid-morphism equations into the dual of c. The two
/// always agree; both are computed independently.
struct DualityResult {
  bool comonoid_map = false;
  bool monoid_map = false;
};
DualityResult duality_check(const Structured& c, const Structured& a,
                            const Matrix& f);

/// Whether g is a comonoid morphism and whether the universal candidate
/// factors psi through g. When a second candidate also factors, `unique`
/// reports whether the two agree.
struct FactorizationResult {
  bool comonoid_map = false;
  bool factors = false;
  std::optional<bool> unique;
  std::string detail;
};
FactorizationResult universal_factorization_check(
    const MeasuringCandidate& univ, const MeasuringCandidate& psi,
    const GradedMap& g, const std::optional<GradedMap>& g2 = std::nullopt);

}  // namespace duocat
