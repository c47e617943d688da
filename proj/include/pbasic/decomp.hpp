#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pbasic/basicsets.hpp"
#include "pbasic/intlinalg.hpp"

namespace pbasic {

// Decomposition-flavoured integer matrix with unique row/column labels.
// Row labels are partition strings (optionally tagged ":+" / ":-"); column
// labels are opaque Brauer identifiers.
struct LabeledIntMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  IntMat entries;

  int rows() const { return entries.rows(); }
  int cols() const { return entries.cols(); }
  const Integer& at(int r, int c) const { return entries.at(r, c); }
  Integer& at(int r, int c) { return entries.at(r, c); }
  int row_index(const std::string& label) const;
  int col_index(const std::string& label) const;
  void check_labels() const;  // unique, non-empty, whitespace-free
};

// File format (bit-exact, "#" starts a comment anywhere): first line
// "rows cols", then the row labels, the column labels, and the entries
// row-major, all whitespace-separated.
LabeledIntMatrix read_matrix(std::istream& in);
LabeledIntMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const LabeledIntMatrix& m);
std::string matrix_csv(const LabeledIntMatrix& m);

// An involution on {0..size-1}: map[i] == i marks a fixed point.
struct Pairing {
  std::vector<int> map;

  int size() const { return static_cast<int>(map.size()); }
  int trace() const;  // number of fixed points
  std::vector<int> fixed() const;
  std::vector<std::pair<int, int>> pairs() const;  // i < map[i] only
};

// Row involution lambda <-> lambda* from partition row labels; every label's
// conjugate partition must also be a label.
Pairing row_pairing_from_partition_labels(const std::vector<std::string>& labels);

// Expansion of every ordinary character over the claimed basic set on the
// p-regular classes: rows all partitions of n, columns the claim members,
// P_B integral with unit rows at the members.  The claim must have been
// verified; a non-integral expansion here is an internal failure.
LabeledIntMatrix expansion_matrix(Context& ctx, const BasicSetClaim& claim);

// The column involution Q induced by the row involution P through
// D_B * Q = P * D_B.  D_B must be square and invertible over Q, and the
// computed Q must come out a permutation (ties the columns into an
// epsilon-pairing); anything else rejects the input.
Pairing eps_column_action(const LabeledIntMatrix& db, const Pairing& row_pairing);

bool is_unimodular(const IntMat& m);

// Submatrix on the fixed rows x fixed columns of the two pairings.
LabeledIntMatrix extract_dnp(const LabeledIntMatrix& db, const Pairing& rows,
                             const Pairing& cols);

// Restricted decomposition matrix of A_n from the S_n data.  Conventions
// (shared with relations_check):
//  - a self-conjugate row lambda becomes two adjacent rows lambda:+ /
//    lambda:-, a conjugate row pair becomes one row at its first occurrence,
//    labelled by the pair's canonically first member;
//  - a fixed column c becomes two adjacent columns c:+ / c:-, a column pair
//    becomes one column at its first occurrence, keeping that label.
// dprime supplies the split-row x split-column data: one [[a,b],[b,a]] block
// per (self-conjugate row, fixed column) with a+b equal to the S_n entry;
// its labels must be the lambda:+/- and c:+/- sequences in matrix order.
LabeledIntMatrix transfer_to_alternating(const LabeledIntMatrix& db,
                                         const LabeledIntMatrix& dprime);

struct RelationsReport {
  // Violated identity instances, e.g. "ii.colsum.plus at (4,2 | phi3)".
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every transfer identity between the S_n matrix and a purported A_n
// matrix, given the column pairing of the S_n matrix.  Identity ids:
//   i               d_{lam,c} = d_{lam,c'} for split lam, paired columns
//   ii.colsum.plus  d'_{lam:+,c:+} + d'_{lam:-,c:+} = d_{lam,c}
//   ii.colsum.minus d'_{lam:+,c:-} + d'_{lam:-,c:-} = d_{lam,c}
//   ii.diag         d'_{lam:+,c:+} = d'_{lam:-,c:-}
//   ii.antidiag     d'_{lam:+,c:-} = d'_{lam:-,c:+}
//   ii.b.plus       d'_{lam:+,cbar} = d_{lam,c}   (paired column, merged)
//   ii.b.minus      d'_{lam:-,cbar} = d_{lam,c}
//   iii.c.plus      d'_{rho,c:+} = d_{rep,c}      (row pair, fixed column)
//   iii.c.minus     d'_{rho,c:-} = d_{other,c}
//   iii.de          d'_{rho,cbar} = d_{rep,c} + d_{rep,c'}
RelationsReport relations_check(const LabeledIntMatrix& sym,
                                const LabeledIntMatrix& alt,
                                const Pairing& col_pairing);

// Orderings exhibiting a lower-triangular unit-diagonal leading block
// (rows beyond the column count, if any, sit below it), or the submatrix the
// search got stuck on.  Greedy peeling of a single-entry unit row is known
// complete here; the memoized backtracking behind it is a safety net.
struct WedgeCertificate {
  bool found = false;
  std::vector<int> row_order;  // all rows; first cols() form the triangle
  std::vector<int> col_order;
  std::vector<int> stuck_rows, stuck_cols;  // refusal witness when !found
};

WedgeCertificate wedge_shape(const LabeledIntMatrix& m);

// Entrywise re-check of a certificate's triangularity claim.
bool validate_wedge(const LabeledIntMatrix& m, const WedgeCertificate& cert);

// Certificate for the paired matrix dprime from one for its block-sum
// matrix: pairs follow the given orders, and a row pair is swapped exactly
// when its diagonal 2x2 block is the anti-identity.
WedgeCertificate reorder_alt(const WedgeCertificate& dnp_cert,
                             const LabeledIntMatrix& dprime);

}  // namespace pbasic
