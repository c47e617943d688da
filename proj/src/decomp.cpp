#include "pbasic/decomp.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pbasic {

int LabeledIntMatrix::row_index(const std::string& label) const {
  for (size_t i = 0; i < row_labels.size(); ++i)
    if (row_labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("no row labelled '" + label + "'");
}

int LabeledIntMatrix::col_index(const std::string& label) const {
  for (size_t i = 0; i < col_labels.size(); ++i)
    if (col_labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("no column labelled '" + label + "'");
}

void LabeledIntMatrix::check_labels() const {
  if (static_cast<int>(row_labels.size()) != entries.rows() ||
      static_cast<int>(col_labels.size()) != entries.cols())
    throw std::invalid_argument("label counts do not match the matrix shape");
  auto check = [](const std::vector<std::string>& labels, const char* what) {
    std::set<std::string> seen;
    for (const std::string& l : labels) {
      if (l.empty())
        throw std::invalid_argument(std::string("empty ") + what + " label");
      for (char ch : l)
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '#')
          throw std::invalid_argument(std::string("bad character in ") + what +
                                      " label '" + l + "'");
      if (!seen.insert(l).second)
        throw std::invalid_argument(std::string("duplicate ") + what +
                                    " label '" + l + "'");
    }
  };
  check(row_labels, "row");
  check(col_labels, "column");
}

namespace {

std::vector<std::string> matrix_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

int parse_count(const std::string& tok) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad matrix dimension '" + tok + "'");
  }
}

Integer parse_entry(const std::string& tok) {
  try {
    return Integer(tok);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad matrix entry '" + tok + "'");
  }
}

}  // namespace

LabeledIntMatrix read_matrix(std::istream& in) {
  std::vector<std::string> tokens = matrix_tokens(in);
  size_t pos = 0;
  auto next = [&]() -> const std::string& {
    if (pos >= tokens.size())
      throw std::invalid_argument("matrix file ends prematurely");
    return tokens[pos++];
  };
  int rows = parse_count(next());
  int cols = parse_count(next());
  LabeledIntMatrix m;
  m.entries = IntMat(rows, cols);
  for (int r = 0; r < rows; ++r) m.row_labels.push_back(next());
  for (int c = 0; c < cols; ++c) m.col_labels.push_back(next());
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = parse_entry(next());
  if (pos != tokens.size())
    throw std::invalid_argument("trailing data in matrix file");
  m.check_labels();
  return m;
}

LabeledIntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const LabeledIntMatrix& m) {
  m.check_labels();
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 0; r < m.rows(); ++r)
    out << m.row_labels[r] << (r + 1 == m.rows() ? '\n' : ' ');
  for (int c = 0; c < m.cols(); ++c)
    out << m.col_labels[c] << (c + 1 == m.cols() ? '\n' : ' ');
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      out << m.at(r, c) << (c + 1 == m.cols() ? '\n' : ' ');
}

std::string matrix_csv(const LabeledIntMatrix& m) {
  std::ostringstream out;
  for (int c = 0; c < m.cols(); ++c) out << ",\"" << m.col_labels[c] << '"';
  out << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    out << '"' << m.row_labels[r] << '"';
    for (int c = 0; c < m.cols(); ++c) out << ',' << m.at(r, c);
    out << '\n';
  }
  return out.str();
}

int Pairing::trace() const {
  int t = 0;
  for (size_t i = 0; i < map.size(); ++i)
    if (map[i] == static_cast<int>(i)) ++t;
  return t;
}

std::vector<int> Pairing::fixed() const {
  std::vector<int> out;
  for (size_t i = 0; i < map.size(); ++i)
    if (map[i] == static_cast<int>(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < map.size(); ++i)
    if (map[i] > static_cast<int>(i)) out.emplace_back(static_cast<int>(i), map[i]);
  return out;
}

namespace {

void check_involution(const Pairing& pi, int size, const char* what) {
  if (pi.size() != size)
    throw std::invalid_argument(std::string(what) + " pairing has the wrong size");
  for (int i = 0; i < size; ++i) {
    int j = pi.map[i];
    if (j < 0 || j >= size || pi.map[j] != i)
      throw std::invalid_argument(std::string(what) + " pairing is not an involution");
  }
}

}  // namespace

Pairing row_pairing_from_partition_labels(const std::vector<std::string>& labels) {
  Pairing pi;
  pi.map.resize(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    std::string conj = Partition::parse(labels[i]).conjugate().str();
    int j = -1;
    for (size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == conj) j = static_cast<int>(k);
    if (j < 0)
      throw std::invalid_argument("rows are not conjugation-closed: missing " + conj);
    pi.map[i] = j;
  }
  check_involution(pi, static_cast<int>(labels.size()), "row");
  return pi;
}

LabeledIntMatrix expansion_matrix(Context& ctx, const BasicSetClaim& claim) {
  if (claim.kind != BasicSetClaim::Kind::Sym)
    throw std::invalid_argument("expansion matrices are for symmetric-group claims");
  ValueLattice lat = sym_value_lattice(ctx.sym(claim.n), claim.p);

  RatMat basis(static_cast<int>(claim.members.size()), lat.values.cols());
  for (size_t i = 0; i < claim.members.size(); ++i) {
    int row = lat.index_of(claim.members[i]);
    for (int c = 0; c < lat.values.cols(); ++c)
      basis.at(static_cast<int>(i), c) = lat.values.at(row, c);
  }
  LatticeSolver solver(basis);

  LabeledIntMatrix out;
  out.row_labels = lat.row_labels;
  out.col_labels = claim.members;
  out.entries = IntMat(static_cast<int>(lat.row_labels.size()),
                       static_cast<int>(claim.members.size()));
  for (int r = 0; r < out.rows(); ++r) {
    std::vector<Rational> b(lat.values.cols());
    for (int c = 0; c < lat.values.cols(); ++c) b[c] = lat.values.at(r, c);
    auto coeffs = solver.solve(b);
    if (!coeffs)
      throw std::logic_error("no integral expansion over a verified basic set");
    for (int c = 0; c < out.cols(); ++c) out.at(r, c) = (*coeffs)[c];
  }
  return out;
}

Pairing eps_column_action(const LabeledIntMatrix& db, const Pairing& row_pairing) {
  if (db.rows() != db.cols())
    throw std::invalid_argument("epsilon action needs a square matrix");
  check_involution(row_pairing, db.rows(), "row");

  RatMat a = RatMat::from_int(db.entries);
  RatMat pdb(db.rows(), db.cols());
  for (int r = 0; r < db.rows(); ++r)
    for (int c = 0; c < db.cols(); ++c)
      pdb.at(r, c) = Rational(db.at(row_pairing.map[r], c));

  auto q = solve_matrix(a, pdb);
  if (!q) throw std::invalid_argument("matrix is singular over the rationals");
  auto perm = as_permutation(*q);
  if (!perm)
    throw std::invalid_argument(
        "epsilon action does not induce a column permutation");
  Pairing cols;
  cols.map = *perm;
  check_involution(cols, db.cols(), "column");
  return cols;
}

bool is_unimodular(const IntMat& m) {
  if (m.rows() != m.cols()) return false;
  return hnf(m).H == IntMat::identity(m.rows());
}

LabeledIntMatrix extract_dnp(const LabeledIntMatrix& db, const Pairing& rows,
                             const Pairing& cols) {
  check_involution(rows, db.rows(), "row");
  check_involution(cols, db.cols(), "column");
  std::vector<int> fr = rows.fixed(), fc = cols.fixed();
  LabeledIntMatrix out;
  out.entries = IntMat(static_cast<int>(fr.size()), static_cast<int>(fc.size()));
  for (size_t i = 0; i < fr.size(); ++i) out.row_labels.push_back(db.row_labels[fr[i]]);
  for (size_t j = 0; j < fc.size(); ++j) out.col_labels.push_back(db.col_labels[fc[j]]);
  for (size_t i = 0; i < fr.size(); ++i)
    for (size_t j = 0; j < fc.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) = db.at(fr[i], fc[j]);
  return out;
}

namespace {

// Shared row/column bookkeeping of the transfer conventions, replayed by
// both transfer_to_alternating and relations_check.
struct TransferLayout {
  Pairing row_pairing, col_pairing;
  std::vector<int> fixed_rows, fixed_cols;   // in matrix order
  std::vector<std::string> alt_row_labels, alt_col_labels;
  // split row i (= fixed_rows[i]) -> its ":+" row in the alternating matrix
  std::vector<int> split_row_base;
  // conjugate row pair k (first occurrence order) -> (rep row, other row,
  // alternating row); rep is the canonically first member
  struct RowPair {
    int rep = 0, other = 0, alt_row = 0;
  };
  std::vector<RowPair> row_pairs;
  std::vector<int> fixed_col_base;  // fixed col j -> its ":+" column
  struct ColPair {
    int rep = 0, partner = 0, alt_col = 0;
  };
  std::vector<ColPair> col_pairs;
};

TransferLayout transfer_layout(const LabeledIntMatrix& db,
                               const Pairing& col_pairing) {
  TransferLayout lay;
  lay.row_pairing = row_pairing_from_partition_labels(db.row_labels);
  lay.col_pairing = col_pairing;
  check_involution(col_pairing, db.cols(), "column");

  for (int r = 0; r < db.rows(); ++r) {
    int partner = lay.row_pairing.map[r];
    if (partner == r) {
      lay.fixed_rows.push_back(r);
      lay.split_row_base.push_back(static_cast<int>(lay.alt_row_labels.size()));
      lay.alt_row_labels.push_back(db.row_labels[r] + ":+");
      lay.alt_row_labels.push_back(db.row_labels[r] + ":-");
    } else if (r < partner) {
      Partition a = Partition::parse(db.row_labels[r]);
      Partition b = Partition::parse(db.row_labels[partner]);
      TransferLayout::RowPair pr;
      pr.rep = a < b ? partner : r;
      pr.other = a < b ? r : partner;
      pr.alt_row = static_cast<int>(lay.alt_row_labels.size());
      lay.alt_row_labels.push_back(db.row_labels[pr.rep]);
      lay.row_pairs.push_back(pr);
    }
  }
  for (int c = 0; c < db.cols(); ++c) {
    int partner = col_pairing.map[c];
    if (partner == c) {
      lay.fixed_cols.push_back(c);
      lay.fixed_col_base.push_back(static_cast<int>(lay.alt_col_labels.size()));
      lay.alt_col_labels.push_back(db.col_labels[c] + ":+");
      lay.alt_col_labels.push_back(db.col_labels[c] + ":-");
    } else if (c < partner) {
      TransferLayout::ColPair pc;
      pc.rep = c;
      pc.partner = partner;
      pc.alt_col = static_cast<int>(lay.alt_col_labels.size());
      lay.alt_col_labels.push_back(db.col_labels[c]);
      lay.col_pairs.push_back(pc);
    }
  }
  return lay;
}

void check_nonnegative(const LabeledIntMatrix& m, const char* what) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) < 0)
        throw std::invalid_argument(std::string("negative entry in ") + what);
}

}  // namespace

LabeledIntMatrix transfer_to_alternating(const LabeledIntMatrix& db,
                                         const LabeledIntMatrix& dprime) {
  db.check_labels();
  dprime.check_labels();
  check_nonnegative(db, "the source matrix");
  check_nonnegative(dprime, "the split data");

  Pairing rows = row_pairing_from_partition_labels(db.row_labels);
  Pairing cols = eps_column_action(db, rows);
  TransferLayout lay = transfer_layout(db, cols);
  int f = static_cast<int>(lay.fixed_rows.size());
  if (static_cast<int>(lay.fixed_cols.size()) != f)
    throw std::logic_error("fixed row and column counts differ");
  if (dprime.rows() != 2 * f || dprime.cols() != 2 * f)
    throw std::invalid_argument("split data must be twice the fixed size");

  // Label correspondence: the split data must use the lambda:+/- rows and
  // c:+/- columns of the fixed rows/columns, in matrix order.
  for (int i = 0; i < f; ++i) {
    const std::string& lam = db.row_labels[lay.fixed_rows[i]];
    if (dprime.row_labels[2 * i] != lam + ":+" ||
        dprime.row_labels[2 * i + 1] != lam + ":-")
      throw std::invalid_argument("split data row labels do not match row " + lam);
  }
  for (int j = 0; j < f; ++j) {
    const std::string& cid = db.col_labels[lay.fixed_cols[j]];
    if (dprime.col_labels[2 * j] != cid + ":+" ||
        dprime.col_labels[2 * j + 1] != cid + ":-")
      throw std::invalid_argument("split data column labels do not match column " +
                                  cid);
  }
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) {
      const Integer& a = dprime.at(2 * i, 2 * j);
      const Integer& b = dprime.at(2 * i, 2 * j + 1);
      if (dprime.at(2 * i + 1, 2 * j + 1) != a || dprime.at(2 * i + 1, 2 * j) != b)
        throw std::invalid_argument("split block at (" + db.row_labels[lay.fixed_rows[i]] +
                                    " | " + db.col_labels[lay.fixed_cols[j]] +
                                    ") is not of the [[a,b],[b,a]] form");
      if (a + b != db.at(lay.fixed_rows[i], lay.fixed_cols[j]))
        throw std::invalid_argument("split block at (" + db.row_labels[lay.fixed_rows[i]] +
                                    " | " + db.col_labels[lay.fixed_cols[j]] +
                                    ") does not sum to the source entry");
    }

  LabeledIntMatrix out;
  out.row_labels = lay.alt_row_labels;
  out.col_labels = lay.alt_col_labels;
  out.entries = IntMat(static_cast<int>(out.row_labels.size()),
                       static_cast<int>(out.col_labels.size()));

  for (int i = 0; i < f; ++i) {
    int base = lay.split_row_base[i];
    for (int j = 0; j < f; ++j) {
      int cbase = lay.fixed_col_base[j];
      out.at(base, cbase) = dprime.at(2 * i, 2 * j);
      out.at(base, cbase + 1) = dprime.at(2 * i, 2 * j + 1);
      out.at(base + 1, cbase) = dprime.at(2 * i + 1, 2 * j);
      out.at(base + 1, cbase + 1) = dprime.at(2 * i + 1, 2 * j + 1);
    }
    for (const auto& pc : lay.col_pairs) {
      const Integer& v = db.at(lay.fixed_rows[i], pc.rep);
      out.at(base, pc.alt_col) = v;
      out.at(base + 1, pc.alt_col) = v;
    }
  }
  for (const auto& pr : lay.row_pairs) {
    for (int j = 0; j < f; ++j) {
      int cbase = lay.fixed_col_base[j];
      out.at(pr.alt_row, cbase) = db.at(pr.rep, lay.fixed_cols[j]);
      out.at(pr.alt_row, cbase + 1) = db.at(pr.other, lay.fixed_cols[j]);
    }
    for (const auto& pc : lay.col_pairs)
      out.at(pr.alt_row, pc.alt_col) = db.at(pr.rep, pc.rep) + db.at(pr.rep, pc.partner);
  }
  return out;
}

RelationsReport relations_check(const LabeledIntMatrix& sym,
                                const LabeledIntMatrix& alt,
                                const Pairing& col_pairing) {
  RelationsReport rep;
  TransferLayout lay = transfer_layout(sym, col_pairing);
  if (alt.row_labels != lay.alt_row_labels || alt.col_labels != lay.alt_col_labels) {
    rep.violations.push_back("labels: alternating matrix does not follow the transfer conventions");
    return rep;
  }

  auto flag = [&](const std::string& id, const std::string& row,
                  const std::string& col) {
    rep.violations.push_back(id + " at (" + row + " | " + col + ")");
  };

  int f = static_cast<int>(lay.fixed_rows.size());
  for (int i = 0; i < f; ++i) {
    int r = lay.fixed_rows[i];
    int base = lay.split_row_base[i];
    const std::string& rl = sym.row_labels[r];
    for (size_t j = 0; j < lay.fixed_cols.size(); ++j) {
      int c = lay.fixed_cols[j];
      int cbase = lay.fixed_col_base[j];
      const std::string& cl = sym.col_labels[c];
      if (alt.at(base, cbase) + alt.at(base + 1, cbase) != sym.at(r, c))
        flag("ii.colsum.plus", rl, cl);
      if (alt.at(base, cbase + 1) + alt.at(base + 1, cbase + 1) != sym.at(r, c))
        flag("ii.colsum.minus", rl, cl);
      if (alt.at(base, cbase) != alt.at(base + 1, cbase + 1))
        flag("ii.diag", rl, cl);
      if (alt.at(base, cbase + 1) != alt.at(base + 1, cbase))
        flag("ii.antidiag", rl, cl);
    }
    for (const auto& pc : lay.col_pairs) {
      const std::string& cl = sym.col_labels[pc.rep];
      if (sym.at(r, pc.rep) != sym.at(r, pc.partner)) flag("i", rl, cl);
      if (alt.at(base, pc.alt_col) != sym.at(r, pc.rep)) flag("ii.b.plus", rl, cl);
      if (alt.at(base + 1, pc.alt_col) != sym.at(r, pc.rep)) flag("ii.b.minus", rl, cl);
    }
  }
  for (const auto& pr : lay.row_pairs) {
    const std::string& rl = sym.row_labels[pr.rep];
    for (size_t j = 0; j < lay.fixed_cols.size(); ++j) {
      int c = lay.fixed_cols[j];
      int cbase = lay.fixed_col_base[j];
      const std::string& cl = sym.col_labels[c];
      if (alt.at(pr.alt_row, cbase) != sym.at(pr.rep, c)) flag("iii.c.plus", rl, cl);
      if (alt.at(pr.alt_row, cbase + 1) != sym.at(pr.other, c))
        flag("iii.c.minus", rl, cl);
    }
    for (const auto& pc : lay.col_pairs)
      if (alt.at(pr.alt_row, pc.alt_col) !=
          sym.at(pr.rep, pc.rep) + sym.at(pr.rep, pc.partner))
        flag("iii.de", rl, sym.col_labels[pc.rep]);
  }
  return rep;
}

namespace {

struct WedgeSearch {
  const LabeledIntMatrix& m;
  int rows, cols;
  std::vector<int> row_order, col_order;
  uint64_t used_rows = 0, used_cols = 0;
  std::set<std::pair<uint64_t, uint64_t>> dead;
  int best_depth = -1;
  std::vector<int> stuck_rows, stuck_cols;

  explicit WedgeSearch(const LabeledIntMatrix& mat)
      : m(mat), rows(mat.rows()), cols(mat.cols()) {}

  void record_stuck(int depth) {
    if (depth <= best_depth) return;
    best_depth = depth;
    stuck_rows.clear();
    stuck_cols.clear();
    for (int r = 0; r < rows; ++r)
      if (!(used_rows >> r & 1)) stuck_rows.push_back(r);
    for (int c = 0; c < cols; ++c)
      if (!(used_cols >> c & 1)) stuck_cols.push_back(c);
  }

  bool search(int depth) {
    if (depth == cols) return true;
    if (dead.count({used_rows, used_cols})) return false;
    bool candidate_seen = false;
    for (int r = 0; r < rows; ++r) {
      if (used_rows >> r & 1) continue;
      int nonzero_col = -1, nonzero_count = 0;
      for (int c = 0; c < cols && nonzero_count < 2; ++c) {
        if (used_cols >> c & 1) continue;
        if (m.at(r, c) != 0) {
          nonzero_col = c;
          ++nonzero_count;
        }
      }
      if (nonzero_count != 1 || m.at(r, nonzero_col) != 1) continue;
      candidate_seen = true;
      row_order.push_back(r);
      col_order.push_back(nonzero_col);
      used_rows |= uint64_t(1) << r;
      used_cols |= uint64_t(1) << nonzero_col;
      if (search(depth + 1)) return true;
      used_rows &= ~(uint64_t(1) << r);
      used_cols &= ~(uint64_t(1) << nonzero_col);
      row_order.pop_back();
      col_order.pop_back();
    }
    if (!candidate_seen) record_stuck(depth);
    dead.insert({used_rows, used_cols});
    return false;
  }
};

}  // namespace

WedgeCertificate wedge_shape(const LabeledIntMatrix& m) {
  if (m.rows() < m.cols())
    throw std::invalid_argument("wedge search needs at least as many rows as columns");
  if (m.rows() > 64)
    throw std::invalid_argument("wedge search supports at most 64 rows");
  WedgeSearch search(m);
  WedgeCertificate cert;
  if (search.search(0)) {
    cert.found = true;
    cert.row_order = search.row_order;
    cert.col_order = search.col_order;
    for (int r = 0; r < m.rows(); ++r)
      if (!(search.used_rows >> r & 1)) cert.row_order.push_back(r);
    if (!validate_wedge(m, cert))
      throw std::logic_error("wedge certificate failed its own validation");
  } else {
    cert.found = false;
    cert.stuck_rows = search.stuck_rows;
    cert.stuck_cols = search.stuck_cols;
  }
  return cert;
}

bool validate_wedge(const LabeledIntMatrix& m, const WedgeCertificate& cert) {
  if (!cert.found) return false;
  auto is_perm = [](const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int x : v) {
      if (x < 0 || x >= n || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (!is_perm(cert.row_order, m.rows()) || !is_perm(cert.col_order, m.cols()))
    return false;
  for (int i = 0; i < m.cols(); ++i) {
    if (m.at(cert.row_order[i], cert.col_order[i]) != 1) return false;
    for (int j = i + 1; j < m.cols(); ++j)
      if (m.at(cert.row_order[i], cert.col_order[j]) != 0) return false;
  }
  return true;
}

WedgeCertificate reorder_alt(const WedgeCertificate& dnp_cert,
                             const LabeledIntMatrix& dprime) {
  if (!dnp_cert.found)
    throw std::invalid_argument("reordering needs a certificate for the block sums");
  if (dprime.rows() != dprime.cols() || dprime.rows() % 2 != 0)
    throw std::invalid_argument("paired matrix must be square of even size");
  int f = dprime.rows() / 2;
  if (static_cast<int>(dnp_cert.row_order.size()) != f ||
      static_cast<int>(dnp_cert.col_order.size()) != f)
    throw std::invalid_argument("certificate size does not match the paired matrix");
  check_nonnegative(dprime, "the paired matrix");
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j)
      if (dprime.at(2 * i, 2 * j) != dprime.at(2 * i + 1, 2 * j + 1) ||
          dprime.at(2 * i, 2 * j + 1) != dprime.at(2 * i + 1, 2 * j))
        throw std::invalid_argument("block at (" + std::to_string(i) + "," +
                                    std::to_string(j) +
                                    ") is not of the [[a,b],[b,a]] form");

  WedgeCertificate cert;
  cert.found = true;
  for (int k = 0; k < f; ++k) {
    int i = dnp_cert.row_order[k];
    int j = dnp_cert.col_order[k];
    const Integer& a = dprime.at(2 * i, 2 * j);
    const Integer& b = dprime.at(2 * i, 2 * j + 1);
    if (a == 1 && b == 0) {
      cert.row_order.push_back(2 * i);
      cert.row_order.push_back(2 * i + 1);
    } else if (a == 0 && b == 1) {
      // Anti-identity diagonal block: swap the row pair.
      cert.row_order.push_back(2 * i + 1);
      cert.row_order.push_back(2 * i);
    } else {
      throw std::invalid_argument(
          "certificate does not put unit blocks on the diagonal");
    }
    cert.col_order.push_back(2 * j);
    cert.col_order.push_back(2 * j + 1);
  }
  if (!validate_wedge(dprime, cert))
    throw std::invalid_argument("certificate does not triangulate the block sums");
  return cert;
}

}  // namespace pbasic
