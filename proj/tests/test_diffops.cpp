#include <doctest.h>

#include "mdv/endo.hpp"
#include "mdv/errors.hpp"
#include "mdv/pbw.hpp"
#include "mdv/rng.hpp"

using namespace mdv;

namespace {
Endo rand_endo(int n, Rng& rng) {
  Endo d(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) d.at(i, j) = Rat(rng.next_int(-3, 3));
  if (d.is_zero()) d.at(0, 0) = 1;
  return d;
}
TruncPoly rand_poly(int n, Rng& rng) {
  TruncPoly f(n);
  for (int i = 0; i <= n; ++i) f.set_coeff(i, Rat(rng.next_int(-3, 3)));
  return f;
}
}  // namespace

TEST_CASE("multiplication and derivative operators") {
  Endo d = deriv_op(2);
  CHECK(d.apply(TruncPoly::monomial(2, 2)) ==
        TruncPoly::monomial(2, 1, Rat(2)));
  CHECK(d.at(1, 2) == Rat(2));
  Endo mx = mult_op(TruncPoly::monomial(2, 1));
  CHECK(mx.apply(TruncPoly::monomial(2, 2)).is_zero());  // x * x^2 -> x^3 = 0
  CHECK(mx.at(1, 0) == Rat(1));
}

TEST_CASE("bracket shortcuts agree with the commutator definition") {
  Rng rng(42);
  for (int t = 0; t < 10; ++t) {
    Endo d = rand_endo(3, rng);
    TruncPoly f = rand_poly(3, rng);
    Endo lhs = ad_f(f, d);
    Endo rhs = mult_op(f) * d - d * mult_op(f);
    CHECK(lhs == rhs);
    CHECK(ad_x(d) == ad_f(TruncPoly::monomial(3, 1), d));
    CHECK(ad_x_pow(d, 2) == ad_x(ad_x(d)));
  }
}

TEST_CASE("order and symbol of basic operators") {
  // Multiplication operators have order 0 and are their own symbol.
  TruncPoly f = TruncPoly::constant(2, Rat(3)) + TruncPoly::monomial(2, 1);
  SymbolValue s = symbol_of(mult_op(f));
  CHECK(s.order == 0);
  CHECK(s.value == f);
  CHECK_THROWS_AS(order_of(Endo(2)), Error);

  // The bare derivative does not preserve the ideal, so on the
  // quotient it is a high-order operator: order n+1, symbol ~ x^n.
  CHECK(order_of(deriv_op(2)) == 3);
  CHECK(symbol_of(deriv_op(2)).value.valuation() == 2);

  // Corner matrix unit x^n <- 1 has the top order 2n.
  Endo corner(2);
  corner.at(0, 2) = 1;
  SymbolValue cs = symbol_of(corner);
  CHECK(cs.order == 4);
  CHECK(cs.value == TruncPoly::monomial(2, 2, rat(1, 4)));
}

TEST_CASE("filtration dimensions frozen for small n") {
  // n = 2: cumulative kernel dimensions 3 5 7 8 9.
  std::vector<int> want = {3, 5, 7, 8, 9};
  for (int p = 0; p <= 4; ++p)
    CHECK(static_cast<int>(filtration_basis(2, p).size()) == want[p]);
  // Every basis element of step p is killed by p+1 brackets.
  for (int p = 0; p <= 4; ++p)
    for (const Endo& d : filtration_basis(2, p))
      CHECK(ad_x_pow(d, p + 1).is_zero());
  CHECK(v_of(2, 1) == 1);
  CHECK(v_of(2, 2) == 1);
  CHECK(v_of(2, 3) == 2);
  CHECK(v_of(2, 4) == 2);
}

TEST_CASE("distinguished operators and their relations") {
  for (int n = 1; n <= 4; ++n) {
    Distinguished d = distinguished(n);
    auto c = [](const Endo& a, const Endo& b) { return a * b - b * a; };
    CHECK(c(d.delta0, d.delta1) == d.delta0);
    CHECK(c(d.delta0, d.delta2) == d.delta1 * Rat(2));
    CHECK(c(d.delta1, d.delta2) == d.delta2);
    CHECK(symbol_of(d.delta0).order == 0);
    CHECK(symbol_of(d.delta1).order == 1);
    CHECK(symbol_of(d.delta2).order == 2);
    CHECK(symbol_of(d.delta2).value == TruncPoly::monomial(n, 1));
  }
  CHECK(casimir_scalar(2) == Rat(2));
  CHECK(casimir_scalar(3) == rat(3, 2) * rat(5, 2));
  CHECK(distinguished_hom(2, casimir()) == Endo::identity(2) * Rat(8));
}

TEST_CASE("nested bracket vanishing matches the order") {
  Distinguished d = distinguished(2);
  TruncPoly x = TruncPoly::monomial(2, 1);
  CHECK(grothendieck_check(d.delta2, 2, {x, x, x}));
  CHECK_FALSE(grothendieck_check(d.delta2, 1, {x, x}));
  // Arbitrary tuples vanish at the order, not only powers of x.
  TruncPoly g = TruncPoly::constant(2, Rat(2)) + TruncPoly::monomial(2, 2);
  CHECK(grothendieck_check(d.delta2, 2, {g, x, g}));
}

TEST_CASE("symbol multiplicativity on a fixed pair") {
  Distinguished d = distinguished(2);
  Endo prod = d.delta1 * d.delta2;
  SymbolValue s = symbol_of(prod);
  CHECK(s.order == 3);
  CHECK(s.value == TruncPoly::monomial(2, 2));  // x * x
}
