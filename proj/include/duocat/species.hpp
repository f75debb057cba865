#pragma once

#include <vector>

#include "duocat/combinat.hpp"
#include "duocat/graded.hpp"
#include "duocat/group.hpp"

namespace duocat {

/// A symmetric sequence: graded object plus, per degree n, the action of the
/// adjacent transpositions s_0..s_{n-2} on the degree-n component. Arbitrary
/// permutations are evaluated through reduced words; the Coxeter relations
/// are an invariant, not an input guarantee — see coxeter_check.
struct SymmetricSequence {
  GradedObject ob;
  std::vector<std::vector<Matrix>> gens;  // gens[n] has max(n-1, 0) entries

  SymmetricSequence() = default;
  SymmetricSequence(GradedObject o, std::vector<std::vector<Matrix>> g);
  int truncation() const { return ob.truncation; }
  int dim(int n) const { return ob.dim(n); }
  bool operator==(const SymmetricSequence&) const = default;
};

/// Equips a graded object with identity (trivial) actions.
SymmetricSequence trivial_species(const GradedObject& v);

/// Evaluates the action of an arbitrary permutation p in S_n.
Matrix species_action(const SymmetricSequence& a, int n, const Perm& p);

bool coxeter_check(const SymmetricSequence& a);

/// Componentwise intertwining f_n ρ_a(s_i) = ρ_b(s_i) f_n for all generators.
bool equivariance_check(const GradedMap& f, const SymmetricSequence& a,
                        const SymmetricSequence& b);

SymmetricSequence species_hadamard_unit(int truncation);
SymmetricSequence species_cauchy_unit(int truncation);
SymmetricSequence species_substitution_unit(int truncation);

// ---- Hadamard (degreewise, diagonal action) ----

SymmetricSequence species_hadamard(const SymmetricSequence& a,
                                   const SymmetricSequence& b);

// ---- Cauchy with shuffles ----

/// Degree-n blocks of A•B: ascending k, then shuffles of (k, n-k) in
/// lexicographic order; inside a block the basis is A_k (x) B_{n-k}.
struct SpCauchyBlock {
  int k;
  Shuffle sh;
  int offset;
  int dim;
};
std::vector<SpCauchyBlock> species_cauchy_blocks(const GradedObject& a,
                                                 const GradedObject& b, int n);

SymmetricSequence species_cauchy(const SymmetricSequence& a,
                                 const SymmetricSequence& b);
/// The Cauchy product of equivariant maps (block diagonal, one copy of
/// kron(f_k, g_{n-k}) per shuffle).
GradedMap species_cauchy_map(const GradedMap& f, const GradedMap& g);

GradedMap species_cauchy_lunitor(const SymmetricSequence& a);
GradedMap species_cauchy_runitor(const SymmetricSequence& a);
GradedMap species_cauchy_associator(const SymmetricSequence& a,
                                    const SymmetricSequence& b,
                                    const SymmetricSequence& c);

// ---- m-fold Cauchy power with the outer block-permutation action ----

struct SpFoldBlock {
  std::vector<int> comp;
  Shuffle sh;
  int offset;
  int dim;
};
/// Blocks of (A^{.m})_n: compositions of n into m parts (lexicographic),
/// then shuffles of the composition (lexicographic).
std::vector<SpFoldBlock> species_m_fold_blocks(const GradedObject& a, int m,
                                               int n);

struct SpeciesPower {
  SymmetricSequence seq;  // inner S_n actions
  /// outer[n][j]: action on degree n of the adjacent transposition t_j of
  /// the m tensor factors (j < m-1): swaps composition entries, shuffle
  /// parts, and the two Kronecker factors.
  std::vector<std::vector<Matrix>> outer;
};
SpeciesPower species_m_fold(const SymmetricSequence& a, int m);

// ---- Substitution via P_m-coinvariants ----

struct SpeciesSubstitution {
  SymmetricSequence result;
  /// Per degree n and per m = 0..N: the coinvariant inclusion (pre-space
  /// dim x quotient dim) and quotient (the reverse) for the P_m action on
  /// A_m (x) (B^{.m})_n; quotient * inclusion = id.
  std::vector<std::vector<Matrix>> inclusion;
  std::vector<std::vector<Matrix>> quotient;
};
SpeciesSubstitution species_substitution(const SymmetricSequence& a,
                                         const SymmetricSequence& b,
                                         bool a_finitely_supported = false,
                                         size_t group_bound = kDefaultGroupBound);

GradedObject forget_to_graded(const SymmetricSequence& a);
std::vector<Rational> egf(const SymmetricSequence& a);
std::vector<Rational> egf(const GradedObject& v);

}  // namespace duocat
