#include "mdv/endo.hpp"

#include <algorithm>

#include "mdv/errors.hpp"

namespace mdv {

Endo::Endo(int n) : n_(n), mat_(n + 1, n + 1) {
  if (n < 0) throw Error("Endo: negative truncation order");
}

Endo Endo::identity(int n) {
  Endo e(n);
  e.mat_ = RatMatrix::identity(n + 1);
  return e;
}

Endo Endo::from_matrix(int n, RatMatrix m) {
  if (m.rows() != n + 1 || m.cols() != n + 1)
    throw Error("Endo::from_matrix: size mismatch");
  Endo e(n);
  e.mat_ = std::move(m);
  return e;
}

TruncPoly Endo::apply(const TruncPoly& f) const {
  if (f.n() != n_) throw Error("Endo::apply: ring mismatch");
  TruncPoly r(n_);
  for (int j = 0; j <= n_; ++j) {
    if (f.coeff(j) == 0) continue;
    for (int i = 0; i <= n_; ++i) {
      if (mat_.at(i, j) == 0) continue;
      r.set_coeff(i, r.coeff(i) + mat_.at(i, j) * f.coeff(j));
    }
  }
  return r;
}

Endo Endo::operator+(const Endo& o) const {
  if (n_ != o.n_) throw Error("Endo add: ring mismatch");
  Endo r(n_);
  r.mat_ = mat_ + o.mat_;
  return r;
}

Endo Endo::operator-(const Endo& o) const {
  if (n_ != o.n_) throw Error("Endo sub: ring mismatch");
  Endo r(n_);
  r.mat_ = mat_ - o.mat_;
  return r;
}

Endo Endo::operator*(const Endo& o) const {
  if (n_ != o.n_) throw Error("Endo mul: ring mismatch");
  Endo r(n_);
  r.mat_ = mat_ * o.mat_;
  return r;
}

Endo Endo::operator*(const Rat& c) const {
  Endo r(n_);
  r.mat_ = mat_ * c;
  return r;
}

bool Endo::operator==(const Endo& o) const {
  return n_ == o.n_ && mat_ == o.mat_;
}

Endo mult_op(const TruncPoly& f) {
  int n = f.n();
  Endo e(n);
  for (int j = 0; j <= n; ++j)
    for (int i = j; i <= n; ++i) e.at(i, j) = f.coeff(i - j);
  return e;
}

Endo deriv_op(int n) {
  Endo e(n);
  for (int j = 1; j <= n; ++j) e.at(j - 1, j) = j;
  return e;
}

Endo ad_f(const TruncPoly& f, const Endo& d) {
  if (f.n() != d.n()) throw Error("ad_f: ring mismatch");
  // [mult_op(f), d](i, j) = sum_e c_e (d(i-e, j) - d(i, j+e)): the
  // multiplication matrix only shifts indices, so no matrix product
  // is needed. Nested-bracket batteries rely on this being O(n^2).
  int n = d.n();
  Endo r(n);
  for (int e = 0; e <= n; ++e) {
    const Rat& c = f.coeff(e);
    if (c == 0) continue;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        Rat v(0);
        if (i - e >= 0) v += d.at(i - e, j);
        if (j + e <= n) v -= d.at(i, j + e);
        if (v != 0) r.at(i, j) += c * v;
      }
  }
  return r;
}

Endo ad_x(const Endo& d) {
  int n = d.n();
  Endo r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Rat v(0);
      if (i > 0) v += d.at(i - 1, j);
      if (j < n) v -= d.at(i, j + 1);
      if (v != 0) r.at(i, j) = v;
    }
  return r;
}

Endo ad_x_pow(const Endo& d, int k) {
  if (k < 0) throw Error("ad_x_pow: negative power");
  Endo r = d;
  for (int i = 0; i < k; ++i) r = ad_x(r);
  return r;
}

int order_of(const Endo& d) {
  if (d.is_zero()) throw Error("order_of: zero operator");
  int p = 0;
  Endo cur = d;
  for (;;) {
    Endo next = ad_x(cur);
    if (next.is_zero()) return p;
    cur = std::move(next);
    ++p;
  }
}

SymbolValue symbol_of(const Endo& d) {
  int p = order_of(d);
  Endo top = ad_x_pow(d, p) * (1 / rat_factorial(static_cast<unsigned long>(p)));
  // An operator commuting with x is multiplication by its value at 1.
  TruncPoly g(d.n());
  for (int i = 0; i <= d.n(); ++i) g.set_coeff(i, top.at(i, 0));
  if (mult_op(g) != top)
    throw Error("symbol_of: top bracket power is not a multiplication operator");
  return SymbolValue{p, g};
}

std::vector<Endo> filtration_basis(int n, int p) {
  if (n < 0 || p < 0) throw Error("filtration_basis: negative parameter");
  int dim = (n + 1) * (n + 1);
  RatMatrix big(dim, dim);
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c) {
      Endo unit(n);
      unit.at(r, c) = 1;
      Endo img = ad_x_pow(unit, p + 1);
      int col = r * (n + 1) + c;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (img.at(i, j) != 0) big.at(i * (n + 1) + j, col) = img.at(i, j);
    }
  std::vector<Endo> basis;
  for (const std::vector<Rat>& v : mat_kernel(big)) {
    Endo e(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) e.at(i, j) = v[i * (n + 1) + j];
    basis.push_back(std::move(e));
  }
  return basis;
}

int v_of(int n, int p) {
  if (p < 1 || p > 2 * n) throw Error("v_of: p out of range");
  std::vector<Endo> basis = filtration_basis(n, p);
  // Stack the top bracket powers as coefficient rows; the minimal
  // valuation over the span is the least pivot column of the RREF.
  RatMatrix rows(static_cast<int>(basis.size()), n + 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Endo top = ad_x_pow(basis[k], p);
    for (int i = 0; i <= n; ++i) rows.at(static_cast<int>(k), i) = top.at(i, 0);
  }
  std::vector<int> pivots = rref_in_place(rows);
  if (pivots.empty()) throw Error("v_of: symbol space is zero");
  int v = pivots.front();
  for (int c : pivots) v = std::min(v, c);
  return v;
}

Distinguished distinguished(int n) {
  TruncPoly x = TruncPoly::monomial(n, 1);
  Endo dx = deriv_op(n);
  Endo d0 = mult_op(x);
  Endo d1 = (mult_op(x) * dx) * Rat(-1) + Endo::identity(n) * rat(n, 2);
  Endo d2 = mult_op(x) * dx * dx - dx * rat(n, 1);
  return Distinguished{d0, d1, d2};
}

Rat casimir_scalar(int n) {
  Distinguished d = distinguished(n);
  Endo m = d.delta1 * d.delta1 -
           (d.delta0 * d.delta2 + d.delta2 * d.delta0) * rat(1, 2);
  Rat c = m.at(0, 0);
  if (m != Endo::identity(n) * c)
    throw Error("casimir_scalar: operator is not scalar");
  return c;
}

bool grothendieck_check(const Endo& d, int p,
                        const std::vector<TruncPoly>& fs) {
  if (p < 0) throw Error("grothendieck_check: negative order");
  if (static_cast<int>(fs.size()) != p + 1)
    throw Error("grothendieck_check: tuple length must be p + 1");
  Endo cur = d;
  for (int i = p; i >= 0; --i) cur = ad_f(fs[i], cur);
  return cur.is_zero();
}

}  // namespace mdv
