#include "pbasic/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbasic {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::mul(const IntMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix size mismatch");
  IntMat out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Integer& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.c_; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

IntMat IntMat::transposed() const {
  IntMat out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
  return out;
}

RatMat RatMat::from_int(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Rational(m.at(i, j));
  return out;
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::mul(const RatMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix size mismatch");
  RatMat out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.c_; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

namespace {

void add_multiple_of_row(IntMat& m, int target, int source, const Integer& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m.at(target, j) -= q * m.at(source, j);
}

void swap_rows(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMat& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMat& M) {
  HnfResult res;
  res.H = M;
  res.U = IntMat::identity(M.rows());
  IntMat& H = res.H;
  IntMat& U = res.U;
  int r = 0;
  for (int col = 0; col < M.cols() && r < M.rows(); ++col) {
    // Euclid on the column below r until a single non-zero entry remains.
    for (;;) {
      int best = -1;
      for (int i = r; i < M.rows(); ++i) {
        if (H.at(i, col) == 0) continue;
        if (best < 0 ||
            mpz_cmpabs(H.at(i, col).get_mpz_t(), H.at(best, col).get_mpz_t()) < 0)
          best = i;
      }
      if (best < 0) break;  // column is zero below r
      swap_rows(H, r, best);
      swap_rows(U, r, best);
      if (H.at(r, col) < 0) {
        negate_row(H, r);
        negate_row(U, r);
      }
      bool clean = true;
      for (int i = r + 1; i < M.rows(); ++i) {
        if (H.at(i, col) == 0) continue;
        Integer q = floor_div(H.at(i, col), H.at(r, col));
        add_multiple_of_row(H, i, r, q);
        add_multiple_of_row(U, i, r, q);
        if (H.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(r, col) == 0) continue;
    // Reduce the entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Integer q = floor_div(H.at(i, col), H.at(r, col));
      add_multiple_of_row(H, i, r, q);
      add_multiple_of_row(U, i, r, q);
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  return res;
}

IntMat clear_columns(const RatMat& A, std::vector<Integer>* scales) {
  IntMat out(A.rows(), A.cols());
  if (scales) scales->assign(A.cols(), Integer(1));
  for (int j = 0; j < A.cols(); ++j) {
    Integer l = 1;
    for (int i = 0; i < A.rows(); ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A.at(i, j).get_den().get_mpz_t());
    for (int i = 0; i < A.rows(); ++i) {
      Rational v = A.at(i, j) * Rational(l);
      out.at(i, j) = v.get_num();  // denominator is 1 by construction
    }
    if (scales) (*scales)[j] = l;
  }
  return out;
}

LatticeSolver::LatticeSolver(const RatMat& A) : rows_(A.rows()), cols_(A.cols()) {
  IntMat cleared = clear_columns(A, &scales_);
  hnf_ = hnf(cleared);
}

std::optional<std::vector<Integer>> LatticeSolver::solve(
    const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != cols_)
    throw std::invalid_argument("vector length mismatch");
  // Apply the column scaling fixed by A; a non-integral scaled entry already
  // rules out an integral combination of integer rows.
  std::vector<Integer> v(cols_);
  for (int j = 0; j < cols_; ++j) {
    Rational s = b[j] * Rational(scales_[j]);
    if (s.get_den() != 1) return std::nullopt;
    v[j] = s.get_num();
  }
  std::vector<Integer> coef(rows_, Integer(0));
  for (int i = 0; i < hnf_.rank(); ++i) {
    int c = hnf_.pivot_cols[i];
    const Integer& pivot = hnf_.H.at(i, c);
    if (v[c] % pivot != 0) return std::nullopt;
    Integer q = v[c] / pivot;
    coef[i] = q;
    if (q != 0)
      for (int j = 0; j < cols_; ++j) v[j] -= q * hnf_.H.at(i, j);
  }
  for (int j = 0; j < cols_; ++j)
    if (v[j] != 0) return std::nullopt;
  // x = coef * U reproduces b over the original rows.
  std::vector<Integer> x(rows_, Integer(0));
  for (int i = 0; i < rows_; ++i) {
    if (coef[i] == 0) continue;
    for (int j = 0; j < rows_; ++j) x[j] += coef[i] * hnf_.U.at(i, j);
  }
  return x;
}

std::optional<std::vector<Integer>> LatticeSolver::dependence() const {
  if (hnf_.rank() == rows_) return std::nullopt;
  // Any U-row beyond the rank maps the original rows to a zero row of H.
  std::vector<Integer> x(rows_);
  for (int j = 0; j < rows_; ++j) x[j] = hnf_.U.at(hnf_.rank(), j);
  return x;
}

std::optional<std::vector<Integer>> solve_integral(const RatMat& A,
                                                   const std::vector<Rational>& b) {
  return LatticeSolver(A).solve(b);
}

bool z_span_equal(const RatMat& A, const RatMat& B) {
  if (A.cols() != B.cols())
    throw std::invalid_argument("span comparison needs equal column counts");
  // One joint scaling for both operands, column by column.
  RatMat stacked(A.rows() + B.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) stacked.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) stacked.at(A.rows() + i, j) = B.at(i, j);
  IntMat cleared = clear_columns(stacked);
  IntMat ia(A.rows(), A.cols()), ib(B.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) ia.at(i, j) = cleared.at(i, j);
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) ib.at(i, j) = cleared.at(A.rows() + i, j);
  HnfResult ha = hnf(ia), hb = hnf(ib);
  if (ha.rank() != hb.rank() || ha.pivot_cols != hb.pivot_cols) return false;
  for (int i = 0; i < ha.rank(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (ha.H.at(i, j) != hb.H.at(i, j)) return false;
  return true;
}

int rank(const RatMat& A) { return hnf(clear_columns(A)).rank(); }

std::optional<RatMat> solve_matrix(const RatMat& A, const RatMat& B) {
  if (A.rows() != A.cols() || A.rows() != B.rows())
    throw std::invalid_argument("solve_matrix needs square A matching B");
  int n = A.rows();
  RatMat work = A, rhs = B;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int i = row; i < n; ++i)
      if (work.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return std::nullopt;  // singular
    for (int j = 0; j < n; ++j) std::swap(work.at(row, j), work.at(pivot, j));
    for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs.at(row, j), rhs.at(pivot, j));
    Rational inv = 1 / work.at(row, col);
    for (int j = 0; j < n; ++j) work.at(row, j) *= inv;
    for (int j = 0; j < rhs.cols(); ++j) rhs.at(row, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || work.at(i, col) == 0) continue;
      Rational f = work.at(i, col);
      for (int j = 0; j < n; ++j) work.at(i, j) -= f * work.at(row, j);
      for (int j = 0; j < rhs.cols(); ++j) rhs.at(i, j) -= f * rhs.at(row, j);
    }
    ++row;
  }
  if (row < n) return std::nullopt;
  return rhs;
}

std::optional<std::vector<int>> as_permutation(const RatMat& Q) {
  if (Q.rows() != Q.cols()) return std::nullopt;
  std::vector<int> perm(Q.rows(), -1);
  std::vector<bool> used(Q.cols(), false);
  for (int i = 0; i < Q.rows(); ++i) {
    for (int j = 0; j < Q.cols(); ++j) {
      const Rational& v = Q.at(i, j);
      if (v == 0) continue;
      if (v != 1 || perm[i] >= 0) return std::nullopt;
      perm[i] = j;
    }
    if (perm[i] < 0 || used[perm[i]]) return std::nullopt;
    used[perm[i]] = true;
  }
  return perm;
}

bool is_permutation_matrix(const RatMat& Q) { return as_permutation(Q).has_value(); }

}  // namespace pbasic
