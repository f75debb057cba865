#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duocat/species.hpp"

using namespace duocat;

namespace {

GradedObject obj(std::vector<int> dims) {
  int n = static_cast<int>(dims.size()) - 1;
  return GradedObject(n, std::move(dims));
}

// the one-dimensional species with trivial actions in every positive degree
SymmetricSequence com_species(int N) {
  std::vector<int> dims(N + 1, 1);
  dims[0] = 0;
  return trivial_species(obj(std::move(dims)));
}

// regular representations: dims n!, generators acting by right translation
SymmetricSequence ass_species(int N) {
  std::vector<int> dims(N + 1, 0);
  for (int n = 1; n <= N; ++n)
    dims[n] = static_cast<int>(factorial(n).convert_to<long long>());
  GradedObject ob = obj(std::move(dims));
  std::vector<std::vector<Matrix>> gens(N + 1);
  for (int n = 1; n <= N; ++n) {
    auto sn = symmetric_group(n);
    auto index = [&](const Perm& p) {
      for (size_t i = 0; i < sn.size(); ++i)
        if (sn[i] == p) return static_cast<int>(i);
      throw Error("permutation not found");
    };
    for (int i = 0; i + 2 <= n; ++i) {
      Perm s = adjacent_transposition(n, i);
      std::vector<int> route(sn.size());
      for (size_t a = 0; a < sn.size(); ++a)
        route[a] = index(perm_compose(sn[a], s));
      gens[n].push_back(Matrix::permutation(route));
    }
  }
  return SymmetricSequence(std::move(ob), std::move(gens));
}

}  // namespace

TEST_CASE("trivial species passes coxeter relations") {
  SymmetricSequence a = com_species(4);
  CHECK(coxeter_check(a));
  CHECK(coxeter_check(ass_species(4)));
}

TEST_CASE("species action evaluates reduced words consistently") {
  SymmetricSequence a = ass_species(3);
  Perm p{2, 0, 1};
  Matrix m = species_action(a, 3, p);
  Perm q{1, 2, 0};
  CHECK(species_action(a, 3, perm_compose(p, q)) ==
        species_action(a, 3, p) * species_action(a, 3, q));
  CHECK(species_action(a, 3, perm_identity(3)).is_identity());
  CHECK((m * species_action(a, 3, perm_inverse(p))).is_identity());
}

TEST_CASE("species cauchy dims carry shuffle multiplicity") {
  SymmetricSequence a = com_species(4);
  SymmetricSequence b = com_species(4);
  SymmetricSequence c = species_cauchy(a, b);
  // (A.B)_n = sum_k C(n,k) a_k b_{n-k}; with a_0 = b_0 = 0:
  // n=2: C(2,1) = 2; n=3: C(3,1)+C(3,2) = 6; n=4: 4+6+4 = 14
  CHECK(c.ob.dims == std::vector<int>{0, 0, 2, 6, 14});
  CHECK(coxeter_check(c));

  auto blocks = species_cauchy_blocks(a.ob, b.ob, 3);
  int total = 0;
  for (const auto& blk : blocks) {
    CHECK(blk.offset == total);
    total += blk.dim;
  }
  CHECK(total == c.ob.dim(3));
}

TEST_CASE("hadamard species multiplies dims degreewise") {
  SymmetricSequence a = ass_species(3);
  SymmetricSequence h = species_hadamard(a, a);
  CHECK(h.ob.dims == std::vector<int>{0, 1, 4, 36});
  CHECK(coxeter_check(h));
}

TEST_CASE("substitution counts set partitions") {
  SymmetricSequence com = com_species(4);
  SpeciesSubstitution s = species_substitution(com, com);
  CHECK(s.result.ob.dims == std::vector<int>{0, 1, 2, 5, 15});
  for (int n = 0; n <= 4; ++n)
    for (size_t m = 0; m < s.inclusion[n].size(); ++m) {
      const Matrix& inc = s.inclusion[n][m];
      const Matrix& quo = s.quotient[n][m];
      if (inc.cols() == 0) continue;
      CHECK(quo * inc == Matrix::identity(inc.cols()));
    }
}

TEST_CASE("ass substitution dims follow ordered partitions") {
  SymmetricSequence ass = ass_species(3);
  SpeciesSubstitution s = species_substitution(ass, ass);
  // (Ass o Ass)_n has dim = number of pairs (ordered partition structure):
  // n=1: 1; n=2: 2!*1 + 1*(2 ways?) -- use the coinvariant count directly
  // via egf composition instead of a hand count:
  auto ea = egf(ass);
  auto er = egf(s.result);
  // compose ea with itself: coefficient arithmetic over rationals
  std::vector<Rational> comp(4, Rational(0));
  // f(x) = sum ea[m] x^m (egf coefficients are dims/n!)
  // g = f o f truncated at degree 3 via direct expansion
  for (int m = 0; m <= 3; ++m) {
    // term ea[m] * (f(x))^m, collect degrees <= 3
    std::vector<Rational> pw(4, Rational(0));
    pw[0] = 1;
    for (int rep = 0; rep < m; ++rep) {
      std::vector<Rational> nx(4, Rational(0));
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) nx[i + j] += pw[i] * ea[j];
      pw = nx;
    }
    Rational fm = ea[m] * factorial(m).convert_to<long long>();
    // ea[m] = dims_m/m!; the operadic composite uses dims, so multiply back
    for (int d = 0; d <= 3; ++d) comp[d] += fm / factorial(m).convert_to<long long>() * pw[d];
  }
  for (int d = 1; d <= 3; ++d) CHECK(er[d] == comp[d]);
}

TEST_CASE("egf identities") {
  SymmetricSequence com = com_species(4);
  auto e = egf(com);
  CHECK(e[0] == 0);
  CHECK(e[3] == Rational(1, 6));
  CHECK(egf(obj({1, 2, 4})) ==
        std::vector<Rational>{1, 2, 2});
}

TEST_CASE("equivariance of structural maps") {
  SymmetricSequence a = ass_species(3);
  SymmetricSequence b = com_species(3);
  SymmetricSequence ab = species_cauchy(a, b);
  CHECK(equivariance_check(species_cauchy_lunitor(a),
                           species_cauchy(species_cauchy_unit(3), a), a));
  CHECK(equivariance_check(species_cauchy_runitor(a),
                           species_cauchy(a, species_cauchy_unit(3)), a));
  CHECK(equivariance_check(species_cauchy_associator(a, b, b),
                           species_cauchy(species_cauchy(a, b), b),
                           species_cauchy(a, species_cauchy(b, b))));
}

TEST_CASE("m-fold blocks partition the power") {
  SymmetricSequence a = com_species(3);
  SpeciesPower p = species_m_fold(a, 2);
  for (int n = 0; n <= 3; ++n) {
    auto blocks = species_m_fold_blocks(a.ob, 2, n);
    int total = 0;
    for (const auto& blk : blocks) {
      CHECK(blk.offset == total);
      total += blk.dim;
    }
    CHECK(total == p.seq.ob.dim(n));
  }
  // outer transposition squares to the identity
  for (int n = 0; n <= 3; ++n)
    if (p.seq.ob.dim(n) > 0)
      CHECK((p.outer[n][0] * p.outer[n][0]).is_identity());
}

TEST_CASE("infinite sum rejection matches graded behaviour") {
  SymmetricSequence bad = trivial_species(obj({1, 1, 1}));
  CHECK_THROWS_WITH_AS(species_substitution(bad, bad),
                       "infinite m-sum at truncation", Error);
  CHECK_NOTHROW(species_substitution(bad, bad, true));
}
