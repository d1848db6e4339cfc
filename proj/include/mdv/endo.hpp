#ifndef MDV_ENDO_HPP
#define MDV_ENDO_HPP

#include <string>
#include <vector>

#include "mdv/matrix.hpp"
#include "mdv/truncpoly.hpp"

namespace mdv {

// k-linear endomorphism of k[x]/(x^{n+1}), as its matrix on the
// monomial basis: column j holds the image of x^j. Every linear map
// of the quotient is a differential operator here, so this class is
// the whole operator algebra; the filtration below grades it by how
// many nested brackets with x it survives.
class Endo {
 public:
  explicit Endo(int n);
  static Endo identity(int n);
  static Endo from_matrix(int n, RatMatrix m);

  int n() const { return n_; }
  const RatMatrix& matrix() const { return mat_; }
  Rat& at(int i, int j) { return mat_.at(i, j); }
  const Rat& at(int i, int j) const { return mat_.at(i, j); }

  TruncPoly apply(const TruncPoly& f) const;

  Endo operator+(const Endo& o) const;
  Endo operator-(const Endo& o) const;
  Endo operator*(const Endo& o) const;  // composition
  Endo operator*(const Rat& c) const;
  bool operator==(const Endo& o) const;
  bool operator!=(const Endo& o) const { return !(*this == o); }
  bool is_zero() const { return mat_.is_zero(); }

 private:
  int n_;
  RatMatrix mat_;
};

// Multiplication operator g -> f*g.
Endo mult_op(const TruncPoly& f);

// d/dx on the quotient.
Endo deriv_op(int n);

// Commutator [mult_op(f), d].
Endo ad_f(const TruncPoly& f, const Endo& d);

// Bracketing with x shifts the matrix along its diagonals:
// entry (i, j) of the result is d(i-1, j) - d(i, j+1). One pass,
// no matrix products.
Endo ad_x(const Endo& d);
Endo ad_x_pow(const Endo& d, int k);

// Least p with ad_x^{p+1}(d) = 0; always <= 2n. Throws on d = 0.
int order_of(const Endo& d);

struct SymbolValue {
  int order;        // p
  TruncPoly value;  // (1/p!) ad_x^p(d), pulled back to the ring
};

// Principal symbol. The top bracket power of an order-p operator is a
// multiplication operator; the returned value is its multiplier, which
// is a nonzero element of x^{v} * k[x]/(x^{n+1}) with v >= 1 for p >= 1.
SymbolValue symbol_of(const Endo& d);

// Basis of the space of operators killed by ad_x^{p+1}, computed as
// the kernel of the bracket power on the (n+1)^2-dimensional matrix
// space, row-major vectorization. Canonical order via RREF.
std::vector<Endo> filtration_basis(int n, int p);

// Minimal valuation of the symbols appearing in order p. Requires
// 1 <= p <= 2n; equals ceil(p/2) (verified exhaustively by the suite).
int v_of(int n, int p);

struct Distinguished {
  Endo delta0;  // multiplication by x
  Endo delta1;  // -x d/dx + n/2
  Endo delta2;  // x d^2/dx^2 - n d/dx
};

Distinguished distinguished(int n);

// Scalar c with delta1^2 - (delta0 delta2 + delta2 delta0)/2 = c * id;
// equals (n/2)(n/2 + 1).
Rat casimir_scalar(int n);

// True iff ad_{f_0}(ad_{f_1}(... ad_{f_p}(d))) = 0. fs must have
// length p + 1; fs[p] is applied first.
bool grothendieck_check(const Endo& d, int p,
                        const std::vector<TruncPoly>& fs);

}  // namespace mdv

#endif
