#include <doctest.h>

#include "mdv/errors.hpp"
#include "mdv/matrix.hpp"
#include "mdv/multipoly.hpp"
#include "mdv/rational.hpp"
#include "mdv/truncpoly.hpp"

using namespace mdv;

TEST_CASE("rationals stay canonical") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(rat(2, -4) == rat(-1, 2));
  CHECK(rat_str(rat(3)) == "3/1");
  CHECK(rat_str(rat(-1, 2)) == "-1/2");
  CHECK(rat_str(Rat(0)) == "0/1");
  CHECK_THROWS_AS(rat(1, 0), Error);
}

TEST_CASE("rational parsing round-trips") {
  CHECK(rat_parse("7/3") == rat(7, 3));
  CHECK(rat_parse("-4") == rat(-4));
  CHECK(rat_parse("6/4") == rat(3, 2));
  CHECK(rat_parse(rat_str(rat(-22, 7))) == rat(-22, 7));
  CHECK_THROWS_AS(rat_parse("x"), Error);
  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse(""), Error);
  CHECK_THROWS_AS(rat_parse("1/2/3"), Error);
}

TEST_CASE("factorials and binomials") {
  CHECK(rat_factorial(0) == Rat(1));
  CHECK(rat_factorial(5) == Rat(120));
  CHECK(rat_binomial(5, 2) == Rat(10));
  CHECK(rat_binomial(3, 5) == Rat(0));
}

TEST_CASE("matrix arithmetic oracle") {
  RatMatrix a(2, 2), b(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 3; a.at(1, 1) = 4;
  b.at(0, 0) = 5; b.at(0, 1) = 6; b.at(1, 0) = 7; b.at(1, 1) = 8;
  RatMatrix p = a * b;
  CHECK(p.at(0, 0) == Rat(19));
  CHECK(p.at(0, 1) == Rat(22));
  CHECK(p.at(1, 0) == Rat(43));
  CHECK(p.at(1, 1) == Rat(50));
  CHECK(a.trace() == Rat(5));
  CHECK((a - a).is_zero());
  CHECK(a * RatMatrix::identity(2) == a);
  RatMatrix d(2, 2);
  d.at(0, 0) = rat(1, 2); d.at(1, 1) = Rat(-1);
  CHECK(d.str() == "[[1/2, 0/1], [0/1, -1/1]]");
}

TEST_CASE("rank, kernel, solve") {
  RatMatrix m(2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(1, 0) = 2; m.at(1, 1) = 4;
  CHECK(mat_rank(m) == 1);
  auto ker = mat_kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Rat(-2));
  CHECK(ker[0][1] == Rat(1));

  RatMatrix diag(2, 2);
  diag.at(0, 0) = 2; diag.at(1, 1) = 3;
  std::vector<Rat> x;
  CHECK(mat_solve(diag, {Rat(4), Rat(9)}, x) == SolveStatus::unique);
  CHECK(x == std::vector<Rat>{Rat(2), Rat(3)});

  RatMatrix ones(2, 2);
  ones.at(0, 0) = 1; ones.at(0, 1) = 1; ones.at(1, 0) = 1; ones.at(1, 1) = 1;
  CHECK(mat_solve(ones, {Rat(1), Rat(2)}, x) == SolveStatus::inconsistent);
  RatMatrix wide(1, 2);
  wide.at(0, 0) = 1; wide.at(0, 1) = 1;
  CHECK(mat_solve(wide, {Rat(3)}, x) == SolveStatus::underdetermined);
}

TEST_CASE("rref normalizes kernels of bracket-power shape") {
  // Nilpotent single Jordan block N: kernel of N^2 on column vectors.
  RatMatrix n2(3, 3);
  n2.at(0, 2) = 1;  // N^2 for the 3x3 shift
  auto ker = mat_kernel(n2);
  REQUIRE(ker.size() == 2);
  // Canonical: unit in each free coordinate.
  CHECK(ker[0][0] == Rat(1));
  CHECK(ker[1][1] == Rat(1));
}

TEST_CASE("multivariate polynomials") {
  std::vector<std::string> vars = {"x0", "x1"};
  MultiPoly x0 = MultiPoly::var(vars, 0);
  MultiPoly x1 = MultiPoly::var(vars, 1);
  MultiPoly s = x0 + x1;
  MultiPoly sq = s * s;
  CHECK(sq.terms().size() == 3);
  CHECK(sq.terms().at({1, 1}) == Rat(2));
  CHECK(sq.total_degree() == 2);
  CHECK(MultiPoly(vars).total_degree() == -1);
  CHECK((x0 * x1 * Rat(2)).str() == "2/1*x0^1*x1^1");
  CHECK((sq - sq).is_zero());
  MultiPoly c = MultiPoly::constant(vars, rat(1, 3));
  CHECK(c.terms().at({0, 0}) == rat(1, 3));
}

TEST_CASE("truncated polynomials") {
  TruncPoly x = TruncPoly::monomial(3, 1);
  TruncPoly x2 = x * x;
  CHECK(x2 == TruncPoly::monomial(3, 2));
  CHECK((x2 * x2).is_zero());  // x^4 = 0 in k[x]/(x^4)
  CHECK(TruncPoly::monomial(3, 5).is_zero());
  TruncPoly f = TruncPoly::constant(3, Rat(1)) + x * Rat(2);
  CHECK(f.str() == "1/1*x^0 + 2/1*x^1");
  CHECK((x + x2).valuation() == 1);
  CHECK_THROWS_AS(TruncPoly(3).valuation(), Error);
  CHECK(f.coeff(1) == Rat(2));
}
