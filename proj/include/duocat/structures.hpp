#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "duocat/report.hpp"
#include "duocat/species.hpp"

namespace duocat {

/// Monoid-like and comonoid-like structures for each monoidal product.
/// "Graded" means the Cauchy product, "Hadamard" the pointwise product,
/// operads/cooperads the substitution product; "Twisted" and "Symmetric"
/// are the species (equivariant) versions of graded monoids and operads.
enum class StructureKind {
  GradedMonoid,
  GradedComonoid,
  HadamardMonoid,
  HadamardComonoid,
  Operad,
  Cooperad,
  TwistedMonoid,
  TwistedComonoid,
  SymmetricOperad,
  SymmetricCooperad,
};

bool kind_is_comonoid(StructureKind k);
bool kind_is_species(StructureKind k);
ProductKind kind_product(StructureKind k);
StructureKind kind_dual(StructureKind k);
std::string kind_name(StructureKind k);
StructureKind kind_from_name(const std::string& s);

/// A structured object. Component keys:
///   Cauchy kinds:    {k, m}        mu_{k,m}: V_k (x) V_m -> V_{k+m}
///   Hadamard kinds:  {n}           mu_n: V_n (x) V_n -> V_n
///   operad kinds:    {m, n_1..n_m} mu: V_m (x) V_{n_1} (x)...-> V_{sum}
/// with comonoid kinds storing the reversed-shape components under the same
/// keys (finite-biproduct form). `unit` holds eta: 1 -> V_0 (Cauchy),
/// eta_1: 1 -> V_1 (operad) as a single entry, or one eta_n per degree for
/// Hadamard kinds; counits are the reversed shapes.
struct Structured {
  StructureKind kind = StructureKind::GradedMonoid;
  GradedObject carrier;
  std::optional<SymmetricSequence> sym;
  std::map<std::vector<int>, Matrix> comps;
  std::vector<Matrix> unit;

  const Matrix& at(const std::vector<int>& key) const;
};

/// All component keys a structure of this kind must carry at truncation N.
std::vector<std::vector<int>> structure_keys(StructureKind k, int N);

Report check_structure(const Structured& s);

/// Assembles the componentwise structure as one graded map on the product:
/// mult: (V*V) -> V for monoid kinds, comult: V -> (V*V) for comonoid kinds
/// (substitution kinds use the truncated block table). unit/counit become
/// maps from/to the product's unit object.
GradedMap assemble_mult(const Structured& s);
GradedMap assemble_comult(const Structured& s);
GradedMap assemble_unit(const Structured& s);
GradedMap assemble_counit(const Structured& s);

/// Inverse of assembly: slices an assembled (co)multiplication and
/// (co)unit map back into componentwise form for the given kind.
Structured structure_from_maps(StructureKind kind, const GradedObject& carrier,
                               const GradedMap& op, const GradedMap& unit_map);

/// Transposes every component (monoid <-> comonoid, operad <-> cooperad).
Structured structure_dual(const Structured& s);
/// structure_dual restricted to substitution kinds; requires a positive
/// carrier ("non-positive carrier" error).
Structured operad_dual(const Structured& s);

/// The lifted pointwise product of two monoid-like structures of the same
/// kind: carrier = Hadamard product, components = (mu_a (x) mu_b) composed
/// with the middle-factor interchange.
Structured hadamard_of_monoids(const Structured& a, const Structured& b);

/// The monoidal unit object with its canonical (co)monoid structure for the
/// given product (all structure components induced by unitors).
Structured unit_monoid(ProductKind p, int truncation);
Structured unit_comonoid(ProductKind p, int truncation);

/// Named standard examples: "poly", "divided-power", "poly3-deg0",
/// "grouplike2", "com", "ass", "end2", "had-unit".
Structured example_library(const std::string& name, int truncation);
std::vector<std::string> example_library_names();

}  // namespace duocat
