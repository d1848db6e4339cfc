#ifndef MDV_MATRIX_HPP
#define MDV_MATRIX_HPP

#include <string>
#include <vector>

#include "mdv/rational.hpp"

namespace mdv {

// Dense matrix over the rationals. Everything downstream (operator
// algebras, filtration kernels, linear solves) reduces to this class,
// so it stays deliberately small: exact arithmetic, no decompositions
// beyond Gauss elimination.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int k);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& c) const;
  bool operator==(const RatMatrix& o) const;
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  Rat trace() const;

  // "[[a, b], [c, d]]" with rat_str entries; used in witnesses.
  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// In-place reduced row echelon form. Returns the pivot column of each
// pivot row in order. Pivot choice (shortest numerator/denominator,
// then lowest row) is deterministic, so the RREF and every basis
// derived from it are reproducible byte for byte.
std::vector<int> rref_in_place(RatMatrix& m);

int mat_rank(RatMatrix m);

// Basis of the right kernel {v : m v = 0}, one vector per free column
// of the RREF, in ascending free-column order with a unit in the free
// coordinate. Canonical because the RREF is.
std::vector<std::vector<Rat>> mat_kernel(const RatMatrix& m);

enum class SolveStatus { unique, inconsistent, underdetermined };

// Exact solve of m x = b. Fills x only in the unique case.
SolveStatus mat_solve(const RatMatrix& m, const std::vector<Rat>& b,
                      std::vector<Rat>& x);

}  // namespace mdv

#endif
