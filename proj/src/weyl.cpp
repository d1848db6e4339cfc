#include "mdv/weyl.hpp"

#include <algorithm>

#include "mdv/errors.hpp"

namespace mdv {

WeylOp::WeylOp(Side s) : side_(s) {}

WeylOp WeylOp::one(Side s) { return monomial(s, 0, 0); }
WeylOp WeylOp::x_gen(Side s) { return monomial(s, 1, 0); }
WeylOp WeylOp::d_gen(Side s) { return monomial(s, 0, 1); }

WeylOp WeylOp::monomial(Side s, int a, int b, const Rat& c) {
  WeylOp u(s);
  u.add_term(a, b, c);
  return u;
}

void WeylOp::add_term(int a, int b, const Rat& c) {
  if (a < 0 || b < 0) throw Error("WeylOp::add_term: negative exponent");
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void WeylOp::check_same_side(const WeylOp& o) const {
  if (side_ != o.side_) throw Error("WeylOp: side mismatch");
}

WeylOp WeylOp::operator+(const WeylOp& o) const {
  check_same_side(o);
  WeylOp r = *this;
  for (const auto& [ab, c] : o.terms_) r.add_term(ab.first, ab.second, c);
  return r;
}

WeylOp WeylOp::operator-(const WeylOp& o) const {
  check_same_side(o);
  WeylOp r = *this;
  for (const auto& [ab, c] : o.terms_) r.add_term(ab.first, ab.second, -c);
  return r;
}

WeylOp WeylOp::operator*(const WeylOp& o) const {
  check_same_side(o);
  // x^a1 D^b1 * x^a2 D^b2: commute D^b1 past x^a2,
  // D^b x^a = sum_k k! C(b,k) C(a,k) x^{a-k} D^{b-k}.
  WeylOp r(side_);
  for (const auto& [ab1, c1] : terms_)
    for (const auto& [ab2, c2] : o.terms_) {
      int a1 = ab1.first, b1 = ab1.second;
      int a2 = ab2.first, b2 = ab2.second;
      int kmax = std::min(b1, a2);
      for (int k = 0; k <= kmax; ++k) {
        Rat c = c1 * c2 * rat_factorial(k) *
                rat_binomial(static_cast<unsigned long>(b1), k) *
                rat_binomial(static_cast<unsigned long>(a2), k);
        r.add_term(a1 + a2 - k, b1 + b2 - k, c);
      }
    }
  return r;
}

WeylOp WeylOp::operator*(const Rat& c) const {
  WeylOp r(side_);
  if (c == 0) return r;
  for (const auto& [ab, k] : terms_) r.terms_.emplace(ab, k * c);
  return r;
}

bool WeylOp::operator==(const WeylOp& o) const {
  return side_ == o.side_ && terms_ == o.terms_;
}

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  const char* xs = side_ == Side::line ? "x" : "xh";
  const char* ds = side_ == Side::line ? "D" : "Dh";
  std::string s;
  for (const auto& [ab, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*" + xs + "^" + std::to_string(ab.first) + "*" + ds +
         "^" + std::to_string(ab.second);
  }
  return s;
}

int weyl_order(const WeylOp& u) {
  if (u.is_zero()) throw Error("weyl_order: zero element");
  int b = 0;
  for (const auto& [ab, c] : u.terms()) b = std::max(b, ab.second);
  return b;
}

int coeff_degree(const WeylOp& u) {
  if (u.is_zero()) throw Error("coeff_degree: zero element");
  int a = 0;
  for (const auto& [ab, c] : u.terms()) a = std::max(a, ab.first);
  return a;
}

namespace {

std::vector<std::string> symbol_vars(Side s) {
  if (s == Side::line) return {"x0", "x1"};
  return {"xh0", "xh1"};
}

}  // namespace

MultiPoly order_symbol(const WeylOp& u) {
  int b = weyl_order(u);
  MultiPoly p(symbol_vars(u.side()));
  for (const auto& [ab, c] : u.terms())
    if (ab.second == b) p.add_term({ab.first, ab.second}, c);
  return p;
}

MultiPoly coeff_symbol(const WeylOp& u) {
  int a = coeff_degree(u);
  MultiPoly p(symbol_vars(u.side()));
  for (const auto& [ab, c] : u.terms())
    if (ab.first == a) p.add_term({ab.first, ab.second}, c);
  return p;
}

namespace {

// x^a D^b applied to x^m: falling factorial m (m-1) ... (m-b+1) times
// x^{m-b+a}; zero when b > m.
Rat falling(int m, int b) {
  Rat r(1);
  for (int i = 0; i < b; ++i) r *= (m - i);
  return r;
}

}  // namespace

Endo descend_to_On(const WeylOp& u, int n) {
  if (u.side() != Side::line) throw Error("descend_to_On: dual-side element");
  if (n < 0) throw Error("descend_to_On: negative truncation order");
  // The ideal (x^{n+1}) is spanned by x^m, m > n. Terms can lower the
  // exponent by at most max b, so only finitely many m need checking.
  int bmax = 0;
  for (const auto& [ab, c] : u.terms()) bmax = std::max(bmax, ab.second);
  for (int m = n + 1; m <= n + bmax; ++m) {
    std::vector<Rat> image(n + 1, Rat(0));
    for (const auto& [ab, c] : u.terms()) {
      if (ab.second > m) continue;
      int e = m - ab.second + ab.first;
      if (e <= n) image[e] += c * falling(m, ab.second);
    }
    for (const Rat& v : image)
      if (v != 0)
        throw NotDescendable(
            "operator does not preserve the ideal (x^" +
                std::to_string(n + 1) + "): image of x^" + std::to_string(m) +
                " has a component below degree " + std::to_string(n + 1),
            m);
  }
  Endo e(n);
  for (int j = 0; j <= n; ++j)
    for (const auto& [ab, c] : u.terms()) {
      if (ab.second > j) continue;
      int i = j - ab.second + ab.first;
      if (i <= n) e.at(i, j) += c * falling(j, ab.second);
    }
  return e;
}

WeylOp quantum_fourier(const WeylOp& u) {
  if (u.side() != Side::dual_line)
    throw Error("quantum_fourier: element is not on the dual side");
  // xh^a Dh^b -> D^a (-x)^b; normalize D^a x^b in one pass.
  WeylOp r(Side::line);
  for (const auto& [ab, c] : u.terms()) {
    int a = ab.first, b = ab.second;
    Rat sign = (b % 2 == 0) ? Rat(1) : Rat(-1);
    int kmax = std::min(a, b);
    for (int k = 0; k <= kmax; ++k) {
      Rat coeff = c * sign * rat_factorial(k) *
                  rat_binomial(static_cast<unsigned long>(a), k) *
                  rat_binomial(static_cast<unsigned long>(b), k);
      r.add_term(b - k, a - k, coeff);
    }
  }
  return r;
}

Sl2Triple sl2_birational_images() {
  return Sl2Triple{WeylOp::monomial(Side::dual_line, 0, 1, Rat(-1)),
                   WeylOp::monomial(Side::dual_line, 1, 1, Rat(-2)),
                   WeylOp::monomial(Side::dual_line, 2, 1, Rat(1))};
}

Sl2Triple sl2_line_images() {
  Sl2Triple d = sl2_birational_images();
  Sl2Triple t{quantum_fourier(d.e), quantum_fourier(d.h), quantum_fourier(d.f)};
  WeylOp he = t.h * t.e - t.e * t.h;
  WeylOp hf = t.h * t.f - t.f * t.h;
  WeylOp ef = t.e * t.f - t.f * t.e;
  if (he != t.e * Rat(2) || hf != t.f * Rat(-2) || ef != t.h)
    throw Error("sl2_line_images: bracket relations fail");
  WeylOp cas = t.h * t.h + (t.e * t.f + t.f * t.e) * Rat(2);
  if (!cas.is_zero()) throw Error("sl2_line_images: Casimir does not vanish");
  return t;
}

}  // namespace mdv
