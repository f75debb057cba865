#pragma once

#include <vector>

#include "duocat/combinat.hpp"
#include "duocat/core.hpp"

namespace duocat {

/// Truncated N-graded object: dims[n] for n = 0..N. Degrees above N are
/// outside the representation.
struct GradedObject {
  int truncation = 0;
  std::vector<int> dims;  // size truncation+1

  GradedObject() : dims{0} {}
  GradedObject(int n, std::vector<int> d) : truncation(n), dims(std::move(d)) {
    if (static_cast<int>(dims.size()) != truncation + 1)
      throw Error("graded object dims count must be truncation+1");
    for (int x : dims)
      if (x < 0) throw Error("negative dimension");
  }
  int dim(int n) const { return (n >= 0 && n <= truncation) ? dims[n] : 0; }
  bool operator==(const GradedObject&) const = default;
};

struct GradedMap {
  GradedObject source, target;
  std::vector<Matrix> components;  // one per degree 0..N

  GradedMap() = default;
  GradedMap(GradedObject src, GradedObject dst, std::vector<Matrix> comps);
  const Matrix& at(int n) const { return components[n]; }
  bool operator==(const GradedMap&) const = default;
};

GradedMap graded_identity(const GradedObject& v);
GradedMap graded_zero_map(const GradedObject& src, const GradedObject& dst);
GradedMap compose(const GradedMap& f, const GradedMap& g);  // f after g
bool maps_equal(const GradedMap& f, const GradedMap& g);

/// The three unit objects at a given truncation.
GradedObject hadamard_unit(int truncation);      // I: all dims 1
GradedObject cauchy_unit(int truncation);        // 1: dim 1 at degree 0
GradedObject substitution_unit(int truncation);  // X: dim 1 at degree 1

// ---- Hadamard (pointwise) product ----

GradedObject hadamard(const GradedObject& v, const GradedObject& w);
GradedMap hadamard(const GradedMap& f, const GradedMap& g);
GradedMap hadamard_swap(const GradedObject& v, const GradedObject& w);  // V(x)W -> W(x)V
GradedMap hadamard_lunitor(const GradedObject& v);  // I(x)V -> V (identity matrices)
GradedMap hadamard_runitor(const GradedObject& v);  // V(x)I -> V
// (V(x)W)(x)U and V(x)(W(x)U) coincide strictly under the row-major
// convention, so the Hadamard associator is an identity map.
GradedMap hadamard_associator(const GradedObject& v, const GradedObject& w,
                              const GradedObject& u);

// ---- Cauchy product ----

// Basis blocks of (V.W)_n ordered by ascending k (k+m=n), Kronecker inside.
int cauchy_block_offset(const GradedObject& v, const GradedObject& w, int n,
                        int k);
GradedObject cauchy(const GradedObject& v, const GradedObject& w);
GradedMap cauchy(const GradedMap& f, const GradedMap& g);
/// q-braiding V.W -> W.V: block (k,m) routed to block (m,k) with the
/// Kronecker swap, scaled by q^{k*m}. q must be nonzero.
GradedMap cauchy_braiding(const GradedObject& v, const GradedObject& w,
                          const Rational& q);
GradedMap cauchy_lunitor(const GradedObject& v);  // 1.V -> V
GradedMap cauchy_runitor(const GradedObject& v);  // V.1 -> V
GradedMap cauchy_associator(const GradedObject& v, const GradedObject& w,
                            const GradedObject& u);  // (V.W).U -> V.(W.U)

// ---- m-fold Cauchy power ----

/// Blocks of (V^{.m})_n: compositions of n into m parts, lexicographic.
GradedObject m_fold_cauchy(const GradedObject& v, int m);
GradedMap m_fold_cauchy(const GradedMap& f, int m);
int m_fold_block_offset(const GradedObject& v, int m, int n,
                        const std::vector<int>& comp);

// ---- Substitution product ----

/// Block table for (V o W)_n at truncation N: pairs (m, composition of n
/// into m parts), m ascending then compositions lexicographic. In the
/// positive convention m ranges over 1..n and parts are >= 1; otherwise
/// m ranges over 0..N.
struct SubBlock {
  int m;
  std::vector<int> comp;
};
std::vector<SubBlock> substitution_blocks(int truncation, int degree,
                                          bool positive);

bool positive_check(const GradedObject& v);
GradedObject positive_truncate(const GradedObject& v);

/// Substitution with the precondition of the product: w positive, or the
/// caller asserts v is finitely supported below truncation (then m ranges
/// over 0..N). Throws Error("infinite m-sum at truncation") otherwise.
GradedObject substitution(const GradedObject& v, const GradedObject& w,
                          bool v_finitely_supported = false);
GradedMap substitution(const GradedMap& f, const GradedMap& g,
                       bool v_finitely_supported = false);

/// Truncated representation regardless of positivity (m <= N blocks).
/// Used for structure maps whose codomain is a genuinely infinite sum;
/// exact on every represented block.
GradedObject substitution_truncated(const GradedObject& v,
                                    const GradedObject& w);
GradedMap substitution_truncated(const GradedMap& f, const GradedMap& g);

GradedMap substitution_lunitor(const GradedObject& v);  // X o V -> V
GradedMap substitution_runitor(const GradedObject& v);  // V o X -> V

/// Associator (V o W) o U -> V o (W o U) as a 0/1 block-routing matrix:
/// each source basis vector is routed to the target basis vector obtained by
/// regrouping compositions. On positive objects it is a permutation; on
/// truncated representations it is injective but may miss target blocks
/// whose regrouped outer degree exceeds the truncation.
GradedMap substitution_associator(const GradedObject& v, const GradedObject& w,
                                  const GradedObject& u);

// ---- Internal homs (dimensions; evaluation lives with the blocks) ----

enum class ProductKind { Hadamard, Cauchy, Substitution };

/// Hom-object dimensions. Hadamard: [V_n,W_n] per degree. Cauchy:
/// blocks [V_i, W_{i+n}] for i = 0..N-n, ascending i. Substitution:
/// blocks [V^{.n}_m, W_m] for m = 0..N, ascending m. Hom-space basis is
/// indexed (source, target) with source-major order.
GradedObject internal_hom(ProductKind kind, const GradedObject& v,
                          const GradedObject& w);

/// Evaluation map V (x) [V,W]^(x) -> W for the Hadamard hom.
GradedMap hadamard_hom_evaluation(const GradedObject& v,
                                  const GradedObject& w);
/// Evaluation map V . [V,W]^. -> W for the Cauchy hom: block (k, i) of
/// degree n pairs V_k with [V_i, W_{i+m}] and evaluates when i = k.
GradedMap cauchy_hom_evaluation(const GradedObject& v, const GradedObject& w);

// Dispatch over the three monoidal structures; handy when the product
// is a runtime parameter.
GradedObject product(ProductKind kind, const GradedObject& v,
                     const GradedObject& w);
GradedMap product(ProductKind kind, const GradedMap& f, const GradedMap& g);
GradedObject product_unit_object(ProductKind kind, int truncation);
GradedMap product_lunitor(ProductKind kind, const GradedObject& v);
GradedMap product_runitor(ProductKind kind, const GradedObject& v);
GradedMap product_associator(ProductKind kind, const GradedObject& v,
                             const GradedObject& w, const GradedObject& u);

/// Hilbert series: dims as coefficients.
std::vector<Rational> hilbert(const GradedObject& v);

}  // namespace duocat
