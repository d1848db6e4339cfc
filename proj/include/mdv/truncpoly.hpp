#ifndef MDV_TRUNCPOLY_HPP
#define MDV_TRUNCPOLY_HPP

#include <string>
#include <vector>

#include "mdv/rational.hpp"

namespace mdv {

// Element of k[x]/(x^{n+1}), stored as the coefficient vector on the
// monomial basis 1, x, ..., x^n. Products truncate silently.
class TruncPoly {
 public:
  explicit TruncPoly(int n);
  static TruncPoly constant(int n, const Rat& c);
  // c * x^power; the zero element when power > n.
  static TruncPoly monomial(int n, int power, const Rat& c = Rat(1));

  int n() const { return n_; }
  const Rat& coeff(int i) const { return c_[i]; }
  void set_coeff(int i, const Rat& v) { c_[i] = v; }

  TruncPoly operator+(const TruncPoly& o) const;
  TruncPoly operator-(const TruncPoly& o) const;
  TruncPoly operator*(const TruncPoly& o) const;
  TruncPoly operator*(const Rat& c) const;
  bool operator==(const TruncPoly& o) const;
  bool operator!=(const TruncPoly& o) const { return !(*this == o); }

  bool is_zero() const;
  // Least i with a nonzero coefficient. Throws on the zero element.
  int valuation() const;

  // Sum of "c*x^k", ascending k, "0" when zero.
  std::string str() const;

 private:
  void check_same_ring(const TruncPoly& o) const;

  int n_;
  std::vector<Rat> c_;
};

}  // namespace mdv

#endif
