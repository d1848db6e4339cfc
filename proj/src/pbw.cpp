#include "mdv/pbw.hpp"

#include <algorithm>

#include "mdv/matrix.hpp"

namespace mdv {

namespace {

using Key = std::array<int, 3>;
using Terms = std::map<Key, Rat>;

void accumulate(Terms& m, const Key& k, const Rat& c) {
  if (c == 0) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

Rat pow2(int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) r *= 2;
  return r;
}

// Right multiplication by e. Uses h^b e = e (h+2)^b and
// f^c e = e f^c - c (h + c - 1) f^{c-1}.
Terms mul_e(const Terms& in) {
  Terms out;
  for (const auto& [k, coeff] : in) {
    int a = k[0], b = k[1], c = k[2];
    for (int j = 0; j <= b; ++j)
      accumulate(out, {a + 1, j, c},
                 coeff * rat_binomial(static_cast<unsigned long>(b), j) *
                     pow2(b - j));
    if (c > 0) {
      accumulate(out, {a, b + 1, c - 1}, -coeff * c);
      accumulate(out, {a, b, c - 1}, -coeff * c * (c - 1));
    }
  }
  return out;
}

// Right multiplication by h, via f^c h = (h + 2c) f^c.
Terms mul_h(const Terms& in) {
  Terms out;
  for (const auto& [k, coeff] : in) {
    accumulate(out, {k[0], k[1] + 1, k[2]}, coeff);
    accumulate(out, {k[0], k[1], k[2]}, coeff * 2 * k[2]);
  }
  return out;
}

Terms mul_f(const Terms& in) {
  Terms out;
  for (const auto& [k, coeff] : in) accumulate(out, {k[0], k[1], k[2] + 1}, coeff);
  return out;
}

}  // namespace

PBWOp PBWOp::one() { return monomial(0, 0, 0); }
PBWOp PBWOp::e() { return monomial(1, 0, 0); }
PBWOp PBWOp::h() { return monomial(0, 1, 0); }
PBWOp PBWOp::f() { return monomial(0, 0, 1); }

PBWOp PBWOp::monomial(int a, int b, int c, const Rat& coeff) {
  PBWOp u;
  u.add_term(a, b, c, coeff);
  return u;
}

void PBWOp::add_term(int a, int b, int c, const Rat& coeff) {
  if (a < 0 || b < 0 || c < 0) throw Error("PBWOp::add_term: negative exponent");
  accumulate(terms_, {a, b, c}, coeff);
}

PBWOp PBWOp::operator+(const PBWOp& o) const {
  PBWOp r = *this;
  for (const auto& [k, c] : o.terms_) accumulate(r.terms_, k, c);
  return r;
}

PBWOp PBWOp::operator-(const PBWOp& o) const {
  PBWOp r = *this;
  for (const auto& [k, c] : o.terms_) accumulate(r.terms_, k, -c);
  return r;
}

PBWOp PBWOp::operator*(const PBWOp& o) const {
  PBWOp r;
  for (const auto& [k, c] : o.terms_) {
    Terms t = terms_;
    for (int i = 0; i < k[0]; ++i) t = mul_e(t);
    for (int i = 0; i < k[1]; ++i) t = mul_h(t);
    for (int i = 0; i < k[2]; ++i) t = mul_f(t);
    for (const auto& [tk, tc] : t) accumulate(r.terms_, tk, tc * c);
  }
  return r;
}

PBWOp PBWOp::operator*(const Rat& c) const {
  PBWOp r;
  if (c == 0) return r;
  for (const auto& [k, k2] : terms_) r.terms_.emplace(k, k2 * c);
  return r;
}

bool PBWOp::operator==(const PBWOp& o) const { return terms_ == o.terms_; }

std::string PBWOp::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*e^" + std::to_string(k[0]) + "*h^" +
         std::to_string(k[1]) + "*f^" + std::to_string(k[2]);
  }
  return s;
}

PBWOp casimir() {
  PBWOp c;
  c.add_term(0, 2, 0, Rat(1));
  c.add_term(1, 0, 1, Rat(4));
  c.add_term(0, 1, 0, Rat(-2));
  return c;
}

int nonstd_degree(const PBWOp& u) {
  if (u.is_zero()) throw Error("nonstd_degree: zero element");
  int d = 0;
  for (const auto& [k, c] : u.terms()) d = std::max(d, k[1] + 2 * k[2]);
  return d;
}

Endo distinguished_hom(int n, const PBWOp& u) {
  Distinguished d = distinguished(n);
  return evaluate(u, d.delta0, d.delta1 * Rat(-2), d.delta2 * Rat(-1),
                  Endo::identity(n));
}

SurjectivityResult surjectivity_check(int n) {
  std::vector<PBWOp> family;
  for (int i = 0; i + 0 <= n; ++i)
    for (int l = 0; i + l <= n; ++l) family.push_back(PBWOp::monomial(i, 0, l));
  for (int i = 0; i + 1 <= n; ++i)
    for (int l = 0; i + 1 + l <= n; ++l)
      family.push_back(PBWOp::monomial(i, 1, l));

  int dim = (n + 1) * (n + 1);
  RatMatrix rows(static_cast<int>(family.size()), dim);
  for (std::size_t k = 0; k < family.size(); ++k) {
    Endo img = distinguished_hom(n, family[k]);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        rows.at(static_cast<int>(k), i * (n + 1) + j) = img.at(i, j);
  }
  int r = mat_rank(rows);
  return SurjectivityResult{r == dim, r};
}

bool filtration_compat_check(int n, const std::vector<PBWOp>& samples) {
  for (const PBWOp& u : samples) {
    if (u.is_zero()) continue;
    Endo img = distinguished_hom(n, u);
    if (img.is_zero()) continue;
    if (order_of(img) > nonstd_degree(u)) return false;
  }
  return true;
}

}  // namespace mdv
