#ifndef MDV_WEYL_HPP
#define MDV_WEYL_HPP

#include <map>
#include <string>
#include <utility>

#include "mdv/endo.hpp"
#include "mdv/multipoly.hpp"
#include "mdv/rational.hpp"

namespace mdv {

// Two tagged copies of the first Weyl algebra. The line side is
// generated by x and D = d/dx; the dual side by xh and Dh. Elements
// of different sides never mix.
enum class Side { line, dual_line };

// Element in normal form: sum of c * x^a * D^b with x-powers to the
// left of D-powers. All products are re-normalized immediately, so
// the term map is always canonical.
class WeylOp {
 public:
  explicit WeylOp(Side s);
  static WeylOp one(Side s);
  static WeylOp x_gen(Side s);
  static WeylOp d_gen(Side s);
  static WeylOp monomial(Side s, int a, int b, const Rat& c = Rat(1));

  Side side() const { return side_; }
  const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
  void add_term(int a, int b, const Rat& c);

  WeylOp operator+(const WeylOp& o) const;
  WeylOp operator-(const WeylOp& o) const;
  WeylOp operator*(const WeylOp& o) const;
  WeylOp operator*(const Rat& c) const;
  bool operator==(const WeylOp& o) const;
  bool operator!=(const WeylOp& o) const { return !(*this == o); }
  bool is_zero() const { return terms_.empty(); }

  // Sum of "c*x^a*D^b" ("xh", "Dh" on the dual side), terms ascending
  // by (a, b); "0" when zero.
  std::string str() const;

 private:
  void check_same_side(const WeylOp& o) const;

  Side side_;
  std::map<std::pair<int, int>, Rat> terms_;
};

// Highest D-power (differential order). Throws on zero.
int weyl_order(const WeylOp& u);

// Highest x-power (degree of the coefficients). Throws on zero. This
// is the order of the mirrored filtration the Fourier swap exchanges
// with the differential one.
int coeff_degree(const WeylOp& u);

// Top slice by D-degree as a commutative polynomial in (x0, x1) on
// the line side, (xh0, xh1) on the dual side; x1 and Dh-symbol
// conventions match the symplectic plane presentations.
MultiPoly order_symbol(const WeylOp& u);

// Top slice by x-degree, same variable conventions.
MultiPoly coeff_symbol(const WeylOp& u);

// Action on k[x]/(x^{n+1}). Defined exactly when every term maps the
// ideal (x^{n+1}) into itself; otherwise throws NotDescendable with
// the smallest ideal power m whose image escapes.
Endo descend_to_On(const WeylOp& u, int n);

// Algebra isomorphism from the dual side to the line side sending
// xh -> D and Dh -> -x.
WeylOp quantum_fourier(const WeylOp& u);

struct Sl2Triple {
  WeylOp e, h, f;
};

// (-Dh, -2*xh*Dh, xh^2*Dh) on the dual side.
Sl2Triple sl2_birational_images();

// Image of the triple above under quantum_fourier; asserts the sl2
// bracket relations and that h^2 + 2(ef + fe) vanishes.
Sl2Triple sl2_line_images();

}  // namespace mdv

#endif
