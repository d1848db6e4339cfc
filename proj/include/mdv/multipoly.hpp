#ifndef MDV_MULTIPOLY_HPP
#define MDV_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "mdv/rational.hpp"

namespace mdv {

// Sparse polynomial in a fixed ordered variable list, rational
// coefficients, no relations. Terms are keyed by exponent vector;
// map order (exponent-lexicographic) doubles as the canonical print
// order, so equal polynomials always print identically.
class MultiPoly {
 public:
  explicit MultiPoly(std::vector<std::string> vars);
  static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
  static MultiPoly var(std::vector<std::string> vars, int index);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  // Accumulates; zero coefficients are dropped.
  void add_term(const std::vector<int>& exps, const Rat& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // max over terms; -1 for the zero polynomial

  // Sum of "c*v1^a1*...*vk^ak" with every variable listed, "0" when
  // empty, terms joined by " + ".
  std::string str() const;

 private:
  void check_same_vars(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<std::vector<int>, Rat> terms_;
};

}  // namespace mdv

#endif
