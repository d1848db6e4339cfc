#include "mdv/truncpoly.hpp"

#include "mdv/errors.hpp"

namespace mdv {

TruncPoly::TruncPoly(int n) : n_(n) {
  if (n < 0) throw Error("TruncPoly: negative truncation order");
  c_.assign(static_cast<std::size_t>(n) + 1, Rat(0));
}

TruncPoly TruncPoly::constant(int n, const Rat& c) {
  TruncPoly p(n);
  p.c_[0] = c;
  return p;
}

TruncPoly TruncPoly::monomial(int n, int power, const Rat& c) {
  if (power < 0) throw Error("TruncPoly::monomial: negative power");
  TruncPoly p(n);
  if (power <= n) p.c_[power] = c;
  return p;
}

void TruncPoly::check_same_ring(const TruncPoly& o) const {
  if (n_ != o.n_) throw Error("TruncPoly: truncation order mismatch");
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
  check_same_ring(o);
  TruncPoly r(n_);
  for (int i = 0; i <= n_; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const {
  check_same_ring(o);
  TruncPoly r(n_);
  for (int i = 0; i <= n_; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
  check_same_ring(o);
  TruncPoly r(n_);
  for (int i = 0; i <= n_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= n_; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

TruncPoly TruncPoly::operator*(const Rat& c) const {
  TruncPoly r(n_);
  for (int i = 0; i <= n_; ++i) r.c_[i] = c_[i] * c;
  return r;
}

bool TruncPoly::operator==(const TruncPoly& o) const {
  return n_ == o.n_ && c_ == o.c_;
}

bool TruncPoly::is_zero() const {
  for (const Rat& v : c_)
    if (v != 0) return false;
  return true;
}

int TruncPoly::valuation() const {
  for (int i = 0; i <= n_; ++i)
    if (c_[i] != 0) return i;
  throw Error("TruncPoly::valuation: zero element");
}

std::string TruncPoly::str() const {
  std::string s;
  for (int i = 0; i <= n_; ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += rat_str(c_[i]) + "*x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace mdv
