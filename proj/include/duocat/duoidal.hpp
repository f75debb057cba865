#pragma once

#include <optional>
#include <string>
#include <vector>

#include "duocat/graded.hpp"
#include "duocat/report.hpp"
#include "duocat/species.hpp"

namespace duocat {

/// The four interchange pairs. The tag lists (outer product, its unit |
/// inner product, its unit); the interchange law is
///   zeta : (a*b) o (c*d) -> (a o c) * (b o d)
/// where o is the outer product and * the inner one.
enum class PairTag {
  CauchyOverHadamard,       // (Cauchy, 1 | pointwise, I)
  HadamardOverCauchy,       // (pointwise, I | Cauchy, 1)
  SubOverHadamard,          // (substitution, X | pointwise, I)
  HadamardOverSubPositive,  // (pointwise, I | substitution, X), positives
};

ProductKind pair_outer(PairTag t);
ProductKind pair_inner(PairTag t);
std::string pair_name(PairTag t);
PairTag pair_from_name(const std::string& s);

/// zeta as a 0/1 block-routing map: an inclusion (diagonal blocks) for
/// CauchyOverHadamard / SubOverHadamard, the transposed projection for the
/// other two. HadamardOverSubPositive rejects non-positive arguments.
GradedMap interchange(PairTag t, const GradedObject& a, const GradedObject& b,
                      const GradedObject& c, const GradedObject& d);

/// The species variant: same routing with matching shuffles. The
/// substitution pairs are transported through the coinvariant
/// inclusion/quotient maps retained by species_substitution.
GradedMap species_interchange(PairTag t, const SymmetricSequence& a,
                              const SymmetricSequence& b,
                              const SymmetricSequence& c,
                              const SymmetricSequence& d);

/// delta_i : i -> i*i, mu_j : j o j -> j, iota : i -> j for the pair's two
/// units. For HadamardOverSubPositive the pointwise unit is its positive
/// truncation (dim 1 in degrees >= 1), the unit of the positive category.
struct StructureMaps {
  GradedMap delta_i;
  GradedMap mu_j;
  GradedMap iota;
};

StructureMaps structure_maps(PairTag t, int truncation);
/// Validating variant: rejects HadamardOverSubPositive when the supplied
/// context object is not positive ("requires positive objects").
StructureMaps structure_maps(PairTag t, const GradedObject& context);
/// Species unit structure maps (shuffle multiplicities) for the Cauchy /
/// pointwise pairs.
StructureMaps species_structure_maps(PairTag t, int truncation);

/// One verification sample: four objects, optionally with maps out of them
/// (f: a -> f.target etc.) for the naturality square.
struct DuoidalSample {
  GradedObject a, b, c, d;
  std::optional<GradedMap> f, g, h, l;
};

/// Checks, per sample: zeta is a 0/1 routing with orthonormal
/// inclusion/projection columns, naturality in all four arguments (when
/// maps are given), the two associativity hexagons, and the four unit
/// squares; plus, once, the unit-object identities (i a *-comonoid, j an
/// o-monoid via iota, and their interchange compatibility).
Report check_duoidal(PairTag t, const std::vector<DuoidalSample>& samples);

struct SpeciesDuoidalSample {
  SymmetricSequence a, b, c, d;
};

/// The species counterpart for the Cauchy / pointwise pairs; additionally
/// checks equivariance of zeta.
Report check_duoidal_species(PairTag t,
                             const std::vector<SpeciesDuoidalSample>& samples);

}  // namespace duocat
