#include "mdv/matrix.hpp"

#include <cstddef>

#include "mdv/errors.hpp"

namespace mdv {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("RatMatrix: negative dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

RatMatrix RatMatrix::identity(int k) {
  RatMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix add: size mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix sub: size mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix mul: size mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& m = at(i, k);
      if (m == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& n = o.at(k, j);
        if (n == 0) continue;
        r.at(i, j) += m * n;
      }
    }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool RatMatrix::is_zero() const {
  for (const Rat& v : a_)
    if (v != 0) return false;
  return true;
}

Rat RatMatrix::trace() const {
  if (rows_ != cols_) throw Error("trace: matrix not square");
  Rat t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::string RatMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += rat_str(at(i, j));
    }
    s += "]";
  }
  s += "]";
  return s;
}

namespace {

// Pivot cost: total bit length of numerator and denominator. Small
// pivots keep intermediate fractions short during elimination.
std::size_t digit_cost(const Rat& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace

std::vector<int> rref_in_place(RatMatrix& m) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    std::size_t best_cost = 0;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      std::size_t c = digit_cost(m.at(i, col));
      if (best < 0 || c < best_cost) {
        best = i;
        best_cost = c;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = col; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(best, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

int mat_rank(RatMatrix m) {
  return static_cast<int>(rref_in_place(m).size());
}

std::vector<std::vector<Rat>> mat_kernel(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -r.at(static_cast<int>(pr), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveStatus mat_solve(const RatMatrix& m, const std::vector<Rat>& b,
                      std::vector<Rat>& x) {
  if (static_cast<int>(b.size()) != m.rows())
    throw Error("mat_solve: rhs size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  // Eliminate over the coefficient columns only, so a pivot never
  // lands in the rhs column.
  std::vector<int> pivots;
  {
    int row = 0;
    for (int col = 0; col < m.cols() && row < aug.rows(); ++col) {
      int best = -1;
      std::size_t best_cost = 0;
      for (int i = row; i < aug.rows(); ++i) {
        if (aug.at(i, col) == 0) continue;
        std::size_t c = digit_cost(aug.at(i, col));
        if (best < 0 || c < best_cost) {
          best = i;
          best_cost = c;
        }
      }
      if (best < 0) continue;
      if (best != row)
        for (int j = 0; j <= m.cols(); ++j)
          std::swap(aug.at(row, j), aug.at(best, j));
      Rat inv = 1 / aug.at(row, col);
      for (int j = col; j <= m.cols(); ++j) aug.at(row, j) *= inv;
      for (int i = 0; i < aug.rows(); ++i) {
        if (i == row || aug.at(i, col) == 0) continue;
        Rat f = aug.at(i, col);
        for (int j = col; j <= m.cols(); ++j) aug.at(i, j) -= f * aug.at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
  }
  int rank = static_cast<int>(pivots.size());
  for (int i = rank; i < aug.rows(); ++i)
    if (aug.at(i, m.cols()) != 0) return SolveStatus::inconsistent;
  if (rank < m.cols()) return SolveStatus::underdetermined;
  x.assign(m.cols(), Rat(0));
  for (int pr = 0; pr < rank; ++pr) x[pivots[pr]] = aug.at(pr, m.cols());
  return SolveStatus::unique;
}

}  // namespace mdv
