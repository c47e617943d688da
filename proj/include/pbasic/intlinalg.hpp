#pragma once

#include <optional>
#include <vector>

#include "pbasic/exactnum.hpp"

namespace pbasic {

// Dense row-major matrices.  Sizes here are desk scale (a few hundred rows),
// so everything below is plain exact elimination with no modular tricks.
class IntMat {
public:
  IntMat() = default;
  IntMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}
  static IntMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Integer& at(int r, int c) { return a_[size_t(r) * c_ + c]; }
  const Integer& at(int r, int c) const { return a_[size_t(r) * c_ + c]; }

  IntMat mul(const IntMat& o) const;
  IntMat transposed() const;

  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

private:
  int r_ = 0, c_ = 0;
  std::vector<Integer> a_;
};

class RatMat {
public:
  RatMat() = default;
  RatMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}
  static RatMat from_int(const IntMat& m);
  static RatMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& at(int r, int c) { return a_[size_t(r) * c_ + c]; }
  const Rational& at(int r, int c) const { return a_[size_t(r) * c_ + c]; }

  RatMat mul(const RatMat& o) const;

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

// Row-style Hermite normal form: H = U*M with U unimodular; pivots positive,
// entries below a pivot zero, entries above reduced into [0, pivot); zero
// rows collected at the bottom.  H is the canonical form of the row lattice.
struct HnfResult {
  IntMat H;
  IntMat U;
  std::vector<int> pivot_cols;  // one per non-zero row of H
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};
HnfResult hnf(const IntMat& M);

// Clear a rational matrix to integers column by column (lcm of the
// denominators in each column).  Scales preserve Z-linear relations among
// rows because every row sees the same column scaling.
IntMat clear_columns(const RatMat& A, std::vector<Integer>* scales = nullptr);

// Answers "is b in the Z-row-span of A, and with which coefficients"
// for many b against a fixed A.  x * A = b with x integral.
class LatticeSolver {
public:
  explicit LatticeSolver(const RatMat& A);
  std::optional<std::vector<Integer>> solve(const std::vector<Rational>& b) const;
  int rank() const { return hnf_.rank(); }
  // A non-zero integer row vector x with x*A = 0, if the rows are dependent.
  std::optional<std::vector<Integer>> dependence() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Integer> scales_;
  HnfResult hnf_;
};

// One-shot solve of x*A = b over the integers.
std::optional<std::vector<Integer>> solve_integral(const RatMat& A,
                                                   const std::vector<Rational>& b);

// Equality of the Z-spans of the row sets of A and B (same column count).
bool z_span_equal(const RatMat& A, const RatMat& B);

int rank(const RatMat& A);

// Solve A*X = B exactly over Q for square invertible A; nullopt if singular.
std::optional<RatMat> solve_matrix(const RatMat& A, const RatMat& B);

// perm[r] = the column holding the unique 1 of row r, if Q is a permutation
// matrix (entries 0/1, exactly one 1 per row and per column).
std::optional<std::vector<int>> as_permutation(const RatMat& Q);
bool is_permutation_matrix(const RatMat& Q);

}  // namespace pbasic
