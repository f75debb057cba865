#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duocat/combinat.hpp"
#include "duocat/core.hpp"
#include "duocat/group.hpp"

using namespace duocat;

TEST_CASE("rational canonical strings") {
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(parse_rational("22/7") == Rational(22, 7));
  CHECK(parse_rational("-5") == Rational(-5));
  Rational neg = Rational(1234) / Rational(-8);
  CHECK(to_string(neg) == "-617/4");
  CHECK(parse_rational(to_string(neg)) == neg);
  CHECK_THROWS_AS(parse_rational("2/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("matrix shape rules") {
  CHECK_THROWS_AS(Matrix(-1, 2), Error);
  Matrix z(0, 3);
  Matrix y(3, 0);
  CHECK((y * z).rows() == 3);
  CHECK((y * z).cols() == 3);
  CHECK((y * z).is_zero());
  CHECK(Matrix::identity(0).is_identity());
}

TEST_CASE("multiplication against hand-computed product") {
  // [[1,2],[3,4]] * [[0,1],[1,1]] = [[2,3],[4,7]]
  Matrix a(2, 2, {1, 2, 3, 4});
  Matrix b(2, 2, {0, 1, 1, 1});
  Matrix ab(2, 2, {2, 3, 4, 7});
  CHECK(a * b == ab);
  CHECK((a - a).is_zero());
  CHECK(a + b == Matrix(2, 2, {1, 3, 4, 5}));
  CHECK(a.scaled(Rational(1, 2)) ==
        Matrix(2, 2, {Rational(1, 2), 1, Rational(3, 2), 2}));
  CHECK(a.transpose() == Matrix(2, 2, {1, 3, 2, 4}));
}

TEST_CASE("kron follows the row-major convention") {
  Matrix a(1, 2, {2, 3});
  Matrix b(2, 1, {5, 7});
  Matrix k = kron(a, b);
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 2);
  // k[(i*rb+p),(j*cb+q)] = a(i,j) b(p,q)
  CHECK(k(0, 0) == 10);
  CHECK(k(1, 0) == 14);
  CHECK(k(0, 1) == 15);
  CHECK(k(1, 1) == 21);
  // strict associativity
  Matrix c(2, 2, {1, 0, 1, 1});
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  CHECK(kron({a, b, c}) == kron(a, kron(b, c)));
}

TEST_CASE("permutation matrices compose like maps") {
  // P * e_i = e_{p[i]}
  Perm p{2, 0, 1};
  Matrix P = Matrix::permutation(p);
  for (int i = 0; i < 3; ++i) {
    Matrix e(3, 1);
    e(i, 0) = 1;
    Matrix img = P * e;
    CHECK(img(p[i], 0) == 1);
  }
  Perm q{1, 2, 0};
  CHECK(Matrix::permutation(perm_compose(p, q)) ==
        Matrix::permutation(p) * Matrix::permutation(q));
  CHECK(Matrix::permutation(perm_inverse(p)) == P.transpose());
}

TEST_CASE("factor_reorder routes Kronecker factors") {
  // target slot t holds source factor tau[t]
  Matrix a(2, 1, {1, 2});
  Matrix b(3, 1, {3, 4, 5});
  Matrix c(2, 1, {6, 7});
  Matrix r = factor_reorder({2, 3, 2}, {2, 0, 1});
  CHECK(r * kron({a, b, c}) == kron({c, a, b}));
  CHECK(factor_reorder({2, 3}, {0, 1}).is_identity());
}

TEST_CASE("block concatenation") {
  Matrix a(2, 1, {1, 2}), b(2, 2, {3, 4, 5, 6});
  Matrix h = hcat({a, b});
  CHECK(h == Matrix(2, 3, {1, 3, 4, 2, 5, 6}));
  Matrix v = vcat({a.transpose(), b});
  CHECK(v.rows() == 3);
  CHECK(v(0, 1) == 2);
  CHECK(direct_sum({}).rows() == 0);
  Matrix d = direct_sum({a, b});
  CHECK(d.rows() == 4);
  CHECK(d(0, 0) == 1);
  CHECK(d(2, 1) == 3);
  CHECK(d(0, 1) == 0);
}

TEST_CASE("exact linear algebra") {
  Matrix a(2, 2, {1, 2, 3, 4});
  Matrix inv = inverse(a);
  CHECK((a * inv).is_identity());
  CHECK(inv == Matrix(2, 2, {-2, 1, Rational(3, 2), Rational(-1, 2)}));
  CHECK(rank(a) == 2);
  CHECK(rank(Matrix(3, 3)) == 0);
  Matrix sing(2, 2, {1, 2, 2, 4});
  CHECK(rank(sing) == 1);
  CHECK_THROWS_AS(inverse(sing), Error);

  Matrix b(2, 1, {5, 11});
  Matrix x = solve(a, b);
  CHECK(a * x == b);
  Matrix bad(2, 1, {1, 3});
  CHECK_THROWS_AS(solve(sing, bad), Error);

  Matrix basis = column_space_basis(sing);
  CHECK(basis.cols() == 1);
  CHECK(basis == Matrix(2, 1, {1, 2}));
}

TEST_CASE("combinatorics oracles") {
  CHECK(symmetric_group(3).size() == 6);
  CHECK(factorial(5) == 120);
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(compositions(3, 2).size() == 4);
  CHECK(positive_compositions(3, 2).size() == 2);
  CHECK(shuffles({2, 1}).size() == 3);
  // adjacent word reconstructs the permutation
  Perm p{2, 0, 3, 1};
  Perm acc = perm_identity(4);
  for (int i : adjacent_word(p))
    acc = perm_compose(acc, adjacent_transposition(4, i));
  CHECK(acc == p);
  // block permutation on sizes (1,2): swapping blocks of a 3-element set
  CHECK(block_permutation({1, 0}, {1, 2}) == Perm{2, 0, 1});
}

TEST_CASE("group closure and coinvariants") {
  // S_2 acting on k^2 by swap: coinvariants are 1-dimensional
  Matrix swap = Matrix::permutation({1, 0});
  auto grp = group_closure({swap});
  CHECK(grp.size() == 2);
  Coinvariants co = coinvariants({swap});
  CHECK(co.quotient * co.inclusion == Matrix::identity(1));
  CHECK(co.inclusion * co.quotient == co.projector);
  CHECK(co.projector * co.projector == co.projector);
  CHECK(co.projector == Matrix(2, 2, {Rational(1, 2), Rational(1, 2),
                                      Rational(1, 2), Rational(1, 2)}));
  CHECK_THROWS_AS(group_closure({Matrix(2, 2)}), Error);
}
