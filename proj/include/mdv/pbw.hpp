#ifndef MDV_PBW_HPP
#define MDV_PBW_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mdv/endo.hpp"
#include "mdv/errors.hpp"
#include "mdv/rational.hpp"

namespace mdv {

// Element of the enveloping algebra of sl2 in the ordered basis
// e^a h^b f^c, with [h,e] = 2e, [h,f] = -2f, [e,f] = h. Products are
// straightened immediately, so the term map is always the normal form.
class PBWOp {
 public:
  PBWOp() = default;
  static PBWOp one();
  static PBWOp e();
  static PBWOp h();
  static PBWOp f();
  static PBWOp monomial(int a, int b, int c, const Rat& coeff = Rat(1));

  const std::map<std::array<int, 3>, Rat>& terms() const { return terms_; }
  void add_term(int a, int b, int c, const Rat& coeff);

  PBWOp operator+(const PBWOp& o) const;
  PBWOp operator-(const PBWOp& o) const;
  PBWOp operator*(const PBWOp& o) const;
  PBWOp operator*(const Rat& c) const;
  bool operator==(const PBWOp& o) const;
  bool operator!=(const PBWOp& o) const { return !(*this == o); }
  bool is_zero() const { return terms_.empty(); }

  // Sum of "c*e^a*h^b*f^c", ascending (a, b, c); "0" when zero.
  std::string str() const;

 private:
  std::map<std::array<int, 3>, Rat> terms_;
};

// h^2 + 2(ef + fe), normal form e h^0 ... = h^2 + 4ef - 2h.
PBWOp casimir();

// Filtration degree with weights e -> 0, h -> 1, f -> 2: the maximum
// of b + 2c over the terms. Throws on zero.
int nonstd_degree(const PBWOp& u);

// Evaluates u at candidate images E, H, F in any associative algebra
// with rational scalars (needs +, -, * and scaling by Rat). Verifies
// the bracket relations first and throws RelationViolation with the
// failing relation when they do not hold.
template <typename T>
T evaluate(const PBWOp& u, const T& E, const T& H, const T& F, const T& one) {
  auto bracket = [](const T& p, const T& q) { return p * q - q * p; };
  if (!(bracket(H, E) == E * Rat(2)))
    throw RelationViolation("evaluate: [H,E] != 2E");
  if (!(bracket(H, F) == F * Rat(-2)))
    throw RelationViolation("evaluate: [H,F] != -2F");
  if (!(bracket(E, F) == H))
    throw RelationViolation("evaluate: [E,F] != H");
  T acc = one * Rat(0);
  for (const auto& [abc, coeff] : u.terms()) {
    T t = one * coeff;
    for (int i = 0; i < abc[0]; ++i) t = t * E;
    for (int i = 0; i < abc[1]; ++i) t = t * H;
    for (int i = 0; i < abc[2]; ++i) t = t * F;
    acc = acc + t;
  }
  return acc;
}

// Evaluation at the distinguished operator triple on k[x]/(x^{n+1}):
// e -> delta0, h -> -2 delta1, f -> -delta2.
Endo distinguished_hom(int n, const PBWOp& u);

struct SurjectivityResult {
  bool surjective;
  int rank;  // of the spanning family below, inside End(O_n)
};

// Spans End(O_n) by the images of e^i f^l (i + l <= n) and
// e^i h f^l (i + 1 + l <= n) under distinguished_hom and checks the
// family has full rank (n+1)^2.
SurjectivityResult surjectivity_check(int n);

// True iff distinguished_hom maps every sample into bracket order at
// most its weighted degree (zero images pass vacuously).
bool filtration_compat_check(int n, const std::vector<PBWOp>& samples);

}  // namespace mdv

#endif
