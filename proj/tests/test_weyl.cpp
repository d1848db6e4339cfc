#include <doctest.h>

#include "mdv/endo.hpp"
#include "mdv/errors.hpp"
#include "mdv/weyl.hpp"

using namespace mdv;

TEST_CASE("normal form straightening") {
  Side s = Side::line;
  WeylOp x = WeylOp::x_gen(s), d = WeylOp::d_gen(s);
  WeylOp dx = d * x;
  CHECK(dx.terms().size() == 2);
  CHECK(dx.terms().at({0, 0}) == Rat(1));
  CHECK(dx.terms().at({1, 1}) == Rat(1));
  WeylOp ddx = d * d * x;
  CHECK(ddx.terms().at({1, 2}) == Rat(1));
  CHECK(ddx.terms().at({0, 1}) == Rat(2));
  CHECK((x * d).terms().size() == 1);
  CHECK((dx - x * d - WeylOp::one(s)).is_zero());
  CHECK(WeylOp::monomial(s, 1, 2, Rat(-1)).str() == "-1/1*x^1*D^2");
  CHECK(WeylOp::monomial(Side::dual_line, 2, 1).str() == "1/1*xh^2*Dh^1");
}

TEST_CASE("sides never mix") {
  CHECK_THROWS_AS(WeylOp::x_gen(Side::line) * WeylOp::x_gen(Side::dual_line),
                  Error);
}

TEST_CASE("orders and symbols") {
  Side s = Side::line;
  WeylOp u = WeylOp::monomial(s, 1, 2) + WeylOp::monomial(s, 3, 0);
  CHECK(weyl_order(u) == 2);
  CHECK(coeff_degree(u) == 3);
  CHECK_THROWS_AS(weyl_order(WeylOp(s)), Error);
  MultiPoly os = order_symbol(u);  // top D-slice: x*D^2
  CHECK(os.terms().size() == 1);
  CHECK(os.terms().at({1, 2}) == Rat(1));
  MultiPoly cs = coeff_symbol(u);  // top x-slice: x^3
  CHECK(cs.terms().size() == 1);
  CHECK(cs.terms().at({3, 0}) == Rat(1));
  CHECK(os.variables() == std::vector<std::string>{"x0", "x1"});
  CHECK(coeff_symbol(WeylOp::monomial(Side::dual_line, 1, 1)).variables() ==
        std::vector<std::string>{"xh0", "xh1"});
}

TEST_CASE("descent to the truncated ring") {
  Side s = Side::line;
  try {
    descend_to_On(WeylOp::d_gen(s), 1);
    FAIL("expected NotDescendable");
  } catch (const NotDescendable& e) {
    CHECK(e.witness_power == 2);
  }
  try {
    descend_to_On(WeylOp::monomial(s, 0, 2), 2);  // D^2 at n = 2
    FAIL("expected NotDescendable");
  } catch (const NotDescendable& e) {
    CHECK(e.witness_power == 3);
  }
  // x*D and x^2*D^2 stabilize every ideal power.
  CHECK(descend_to_On(WeylOp::monomial(s, 1, 1), 3) ==
        mult_op(TruncPoly::monomial(3, 1)) * deriv_op(3));
  CHECK(descend_to_On(WeylOp::monomial(s, 2, 2), 2) ==
        mult_op(TruncPoly::monomial(2, 2)) * deriv_op(2) * deriv_op(2));
}

TEST_CASE("operator transform is a homomorphism with the stated images") {
  WeylOp xh = WeylOp::x_gen(Side::dual_line);
  WeylOp dh = WeylOp::d_gen(Side::dual_line);
  CHECK(quantum_fourier(xh) == WeylOp::d_gen(Side::line));
  CHECK(quantum_fourier(dh) == WeylOp::x_gen(Side::line) * Rat(-1));
  WeylOp prod = quantum_fourier(xh * dh);
  CHECK(prod.terms().at({1, 1}) == Rat(-1));
  CHECK(prod.terms().at({0, 0}) == Rat(-1));
  CHECK(quantum_fourier(dh * xh) ==
        quantum_fourier(dh) * quantum_fourier(xh));
}

TEST_CASE("operator triple images") {
  Sl2Triple dual = sl2_birational_images();
  CHECK(dual.e == WeylOp::monomial(Side::dual_line, 0, 1, Rat(-1)));
  CHECK(dual.h == WeylOp::monomial(Side::dual_line, 1, 1, Rat(-2)));
  CHECK(dual.f == WeylOp::monomial(Side::dual_line, 2, 1));
  auto c = [](const WeylOp& a, const WeylOp& b) { return a * b - b * a; };
  CHECK(c(dual.h, dual.e) == dual.e * Rat(2));
  CHECK(c(dual.h, dual.f) == dual.f * Rat(-2));
  CHECK(c(dual.e, dual.f) == dual.h);

  Sl2Triple line = sl2_line_images();
  CHECK(line.e == WeylOp::x_gen(Side::line));
  WeylOp h_want = WeylOp::monomial(Side::line, 1, 1, Rat(2));
  h_want.add_term(0, 0, Rat(2));
  CHECK(line.h == h_want);
  WeylOp f_want = WeylOp::monomial(Side::line, 1, 2, Rat(-1));
  f_want.add_term(0, 1, Rat(-2));
  CHECK(line.f == f_want);
  CHECK((line.h * line.h + (line.e * line.f + line.f * line.e) * Rat(2))
            .is_zero());
}
