#include <doctest.h>

#include "mdv/endo.hpp"
#include "mdv/errors.hpp"
#include "mdv/pbw.hpp"

using namespace mdv;

TEST_CASE("ordered-basis straightening") {
  PBWOp e = PBWOp::e(), h = PBWOp::h(), f = PBWOp::f();
  CHECK(f * e == e * f - h);
  CHECK(h * e == e * h + e * Rat(2));
  CHECK(f * h == h * f + f * Rat(2));
  CHECK((e * f).terms().size() == 1);
  auto c = [](const PBWOp& a, const PBWOp& b) { return a * b - b * a; };
  CHECK(c(e, c(e, f)) == e * Rat(-2));  // [e,[e,f]] = [e,h] = -2e
  CHECK(c(f, c(e, f)) == f * Rat(2));
  CHECK((e * Rat(2)).str() == "2/1*e^1*h^0*f^0");
}

TEST_CASE("central element in normal form") {
  PBWOp C = casimir();
  CHECK(C.terms().size() == 3);
  CHECK(C.terms().at({0, 2, 0}) == Rat(1));
  CHECK(C.terms().at({1, 0, 1}) == Rat(4));
  CHECK(C.terms().at({0, 1, 0}) == Rat(-2));
  for (const PBWOp& g : {PBWOp::e(), PBWOp::h(), PBWOp::f()})
    CHECK(C * g == g * C);
}

TEST_CASE("nonstandard degree") {
  CHECK(nonstd_degree(PBWOp::e()) == 0);
  CHECK(nonstd_degree(PBWOp::h()) == 1);
  CHECK(nonstd_degree(PBWOp::f()) == 2);
  CHECK(nonstd_degree(casimir()) == 2);
  CHECK(nonstd_degree(PBWOp::monomial(3, 1, 2)) == 5);
  CHECK_THROWS_AS(nonstd_degree(PBWOp()), Error);
}

TEST_CASE("evaluation guards the bracket relations") {
  PBWOp one = PBWOp::one();
  // Evaluating at the generators themselves is the identity.
  for (const PBWOp& u : {casimir(), PBWOp::monomial(2, 1, 1, rat(1, 3))})
    CHECK(evaluate(u, PBWOp::e(), PBWOp::h(), PBWOp::f(), one) == u);
  CHECK_THROWS_AS(
      evaluate(casimir(), PBWOp::e(), PBWOp::h(), PBWOp::e(), one),
      RelationViolation);
}

TEST_CASE("evaluation at the distinguished triple") {
  for (int n = 1; n <= 3; ++n) {
    Distinguished d = distinguished(n);
    CHECK(distinguished_hom(n, PBWOp::e()) == d.delta0);
    CHECK(distinguished_hom(n, PBWOp::h()) == d.delta1 * Rat(-2));
    CHECK(distinguished_hom(n, PBWOp::f()) == d.delta2 * Rat(-1));
    CHECK(distinguished_hom(n, casimir()) ==
          Endo::identity(n) * Rat(n * (n + 2)));
    // The (n+1)-st power of the first generator acts by zero.
    CHECK(distinguished_hom(n, PBWOp::monomial(n + 1, 0, 0)).is_zero());
  }
}

TEST_CASE("spanning family and filtration compatibility") {
  for (int n = 0; n <= 3; ++n) {
    SurjectivityResult s = surjectivity_check(n);
    CHECK(s.surjective);
    CHECK(s.rank == (n + 1) * (n + 1));
  }
  std::vector<PBWOp> samples = {PBWOp::e(),      PBWOp::h(),
                                PBWOp::f(),      casimir(),
                                PBWOp::h() * PBWOp::f(),
                                PBWOp::e() * PBWOp::h()};
  CHECK(filtration_compat_check(2, samples));
  CHECK(filtration_compat_check(4, samples));
}
