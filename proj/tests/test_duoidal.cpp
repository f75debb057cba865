#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "duocat/duoidal.hpp"

using namespace duocat;

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(
                                   hi - lo + 1));
}

GradedObject random_object(std::mt19937_64& rng, int N, int max_dim,
                           bool positive) {
  std::vector<int> dims(N + 1);
  for (int n = 0; n <= N; ++n)
    dims[n] = (positive && n == 0) ? 0 : draw(rng, 0, max_dim);
  return GradedObject(N, std::move(dims));
}

GradedMap random_map(std::mt19937_64& rng, const GradedObject& src,
                     const GradedObject& dst) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= src.truncation; ++n) {
    Matrix m(dst.dim(n), src.dim(n));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = draw(rng, -2, 2);
    comps.push_back(std::move(m));
  }
  return GradedMap(src, dst, std::move(comps));
}

std::vector<DuoidalSample> make_samples(PairTag t, std::mt19937_64& rng,
                                        int count) {
  bool sub = pair_outer(t) == ProductKind::Substitution ||
             pair_inner(t) == ProductKind::Substitution;
  int N = sub ? 3 : 4;
  int inner_max = sub ? 1 : 2;
  std::vector<DuoidalSample> out;
  for (int i = 0; i < count; ++i) {
    DuoidalSample s;
    s.a = random_object(rng, N, 2, sub);
    s.b = random_object(rng, N, 2, sub);
    s.c = random_object(rng, N, inner_max, sub);
    s.d = random_object(rng, N, inner_max, sub);
    s.f = random_map(rng, s.a, random_object(rng, N, 2, sub));
    s.g = random_map(rng, s.b, random_object(rng, N, 2, sub));
    s.h = random_map(rng, s.c, random_object(rng, N, inner_max, sub));
    s.l = random_map(rng, s.d, random_object(rng, N, inner_max, sub));
    out.push_back(std::move(s));
  }
  return out;
}

SymmetricSequence random_species(std::mt19937_64& rng, int N, int max_dim,
                                 bool positive) {
  return trivial_species(random_object(rng, N, max_dim, positive));
}

}  // namespace

TEST_CASE("pair names round-trip") {
  for (PairTag t :
       {PairTag::CauchyOverHadamard, PairTag::HadamardOverCauchy,
        PairTag::SubOverHadamard, PairTag::HadamardOverSubPositive}) {
    CHECK(pair_from_name(pair_name(t)) == t);
    CHECK(pair_outer(t) != pair_inner(t));
  }
  CHECK_THROWS_AS(pair_from_name("nope"), Error);
}

TEST_CASE("all four graded pairs pass the axiom suite") {
  for (PairTag t :
       {PairTag::CauchyOverHadamard, PairTag::HadamardOverCauchy,
        PairTag::SubOverHadamard, PairTag::HadamardOverSubPositive}) {
    std::mt19937_64 rng(7);
    Report r = check_duoidal(t, make_samples(t, rng, 3));
    INFO(pair_name(t), ": ", r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("species pairs pass the axiom suite with equivariance") {
  for (PairTag t :
       {PairTag::CauchyOverHadamard, PairTag::HadamardOverCauchy}) {
    std::mt19937_64 rng(11);
    std::vector<SpeciesDuoidalSample> samples;
    for (int i = 0; i < 2; ++i)
      samples.push_back({random_species(rng, 3, 2, false),
                         random_species(rng, 3, 2, false),
                         random_species(rng, 3, 2, false),
                         random_species(rng, 3, 2, false)});
    Report r = check_duoidal_species(t, samples);
    INFO(pair_name(t), ": ", r.summary());
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(check_duoidal_species(PairTag::SubOverHadamard, {}), Error);
}

TEST_CASE("the two pointwise/Cauchy interchanges are a section pair") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    GradedObject a = random_object(rng, 3, 2, false);
    GradedObject b = random_object(rng, 3, 2, false);
    GradedObject c = random_object(rng, 3, 2, false);
    GradedObject d = random_object(rng, 3, 2, false);
    GradedMap in1 = interchange(PairTag::CauchyOverHadamard, a, b, c, d);
    GradedMap in2 = interchange(PairTag::HadamardOverCauchy, a, c, b, d);
    GradedMap comp = compose(in2, in1);
    for (int n = 0; n <= 3; ++n) CHECK(comp.at(n).is_identity());
  }
  // species version
  for (int i = 0; i < 3; ++i) {
    SymmetricSequence a = random_species(rng, 3, 2, false);
    SymmetricSequence b = random_species(rng, 3, 2, false);
    SymmetricSequence c = random_species(rng, 3, 2, false);
    SymmetricSequence d = random_species(rng, 3, 2, false);
    GradedMap in1 = species_interchange(PairTag::CauchyOverHadamard, a, b, c, d);
    GradedMap in2 = species_interchange(PairTag::HadamardOverCauchy, a, c, b, d);
    GradedMap comp = compose(in2, in1);
    for (int n = 0; n <= 3; ++n) CHECK(comp.at(n).is_identity());
  }
}

TEST_CASE("interchange is a 0/1 routing") {
  std::mt19937_64 rng(5);
  GradedObject a = random_object(rng, 3, 2, true);
  GradedObject b = random_object(rng, 3, 2, true);
  GradedObject c = random_object(rng, 3, 1, true);
  GradedObject d = random_object(rng, 3, 1, true);
  for (PairTag t :
       {PairTag::CauchyOverHadamard, PairTag::HadamardOverCauchy,
        PairTag::SubOverHadamard, PairTag::HadamardOverSubPositive}) {
    GradedMap z = interchange(t, a, b, c, d);
    for (int n = 0; n <= 3; ++n)
      for (int i = 0; i < z.at(n).rows(); ++i)
        for (int j = 0; j < z.at(n).cols(); ++j)
          CHECK((z.at(n)(i, j) == 0 || z.at(n)(i, j) == 1));
  }
}

TEST_CASE("positivity is enforced for the fourth pair") {
  GradedObject ok(2, {0, 1, 1});
  GradedObject bad(2, {1, 1, 1});
  CHECK_THROWS_WITH_AS(
      interchange(PairTag::HadamardOverSubPositive, ok, ok, ok, bad),
      "requires positive objects", Error);
  CHECK_THROWS_WITH_AS(structure_maps(PairTag::HadamardOverSubPositive, bad),
                       "requires positive objects", Error);
  CHECK_NOTHROW(structure_maps(PairTag::HadamardOverSubPositive, ok));
  CHECK_NOTHROW(interchange(PairTag::HadamardOverSubPositive, ok, ok, ok, ok));
  // the other pairs accept arbitrary objects
  CHECK_NOTHROW(structure_maps(PairTag::CauchyOverHadamard, bad));
  CHECK_NOTHROW(interchange(PairTag::SubOverHadamard, bad, bad, ok, ok));
}

TEST_CASE("unit structure maps have the documented shapes") {
  int N = 3;
  StructureMaps sm = structure_maps(PairTag::CauchyOverHadamard, N);
  // delta_i : 1 -> 1 (x) 1, mu_j : I.I -> I, iota : 1 -> I
  CHECK(sm.delta_i.source == cauchy_unit(N));
  CHECK(sm.delta_i.target == hadamard(cauchy_unit(N), cauchy_unit(N)));
  CHECK(sm.mu_j.target == hadamard_unit(N));
  CHECK(sm.iota.source == cauchy_unit(N));
  CHECK(sm.iota.target == hadamard_unit(N));

  StructureMaps s4 = structure_maps(PairTag::HadamardOverSubPositive, N);
  CHECK(s4.delta_i.source == positive_truncate(hadamard_unit(N)));
  CHECK(s4.mu_j.target == substitution_unit(N));
}
