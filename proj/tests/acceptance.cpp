// Acceptance gate: every guaranteed behaviour of the workbench, each checked
// end to end with a wall-clock budget.  One line per criterion; the process
// exits non-zero if any criterion fails its check or its budget.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pbasic/basicsets.hpp"
#include "pbasic/decomp.hpp"

using namespace pbasic;

namespace {

Context ctx;  // tables are shared across criteria; first user pays the build

struct Result {
  bool ok = true;
  std::string detail;
};

Result fail(std::string why) { return {false, std::move(why)}; }

Partition P(const std::string& s) { return Partition::parse(s); }

// ---------------------------------------------------------------------------
// Independent oracles (deliberately different algorithms from the library).
// ---------------------------------------------------------------------------

// Every partition reachable by removing p-rim-hooks until none is left,
// over all removal orders.
void core_terminals(const Partition& lam, int p,
                    std::map<std::vector<int>, std::set<std::vector<int>>>& memo,
                    std::set<std::vector<int>>& out) {
  auto hit = memo.find(lam.parts());
  if (hit != memo.end()) {
    out.insert(hit->second.begin(), hit->second.end());
    return;
  }
  std::set<std::vector<int>> local;
  bool removable = false;
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam.part(r); ++c)
      if (hook_length(lam, r, c) == p) {
        removable = true;
        core_terminals(remove_rim_hook(lam, r, c, p).rest, p, memo, local);
      }
  if (!removable) local.insert(lam.parts());
  memo[lam.parts()] = local;
  out.insert(local.begin(), local.end());
}

// Every sign achievable by removing p-rim-hooks in any order.
void sign_terminals(const Partition& lam, int p, int acc, std::set<int>& out) {
  bool removable = false;
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam.part(r); ++c)
      if (hook_length(lam, r, c) == p) {
        removable = true;
        RimHookResult res = remove_rim_hook(lam, r, c, p);
        sign_terminals(res.rest, p, acc * (res.leg % 2 == 0 ? 1 : -1), out);
      }
  if (!removable) out.insert(acc);
}

// ---------------------------------------------------------------------------
// Randomized transfer inputs: conjugation-closed row labels, mirrored column
// involution, equivariant unit-lower-triangular matrix, random admissible
// split data.  (Same construction as the unit tests, kept local so this
// binary stays self-contained.)
// ---------------------------------------------------------------------------

struct RandomCase {
  LabeledIntMatrix db, dprime;
};

RandomCase random_case(std::mt19937& rng, int n, int max_size) {
  std::vector<std::vector<Partition>> orbits;
  for (const Partition& lam : all_partitions(n)) {
    Partition conj = lam.conjugate();
    if (conj < lam) continue;
    if (lam == conj)
      orbits.push_back({lam});
    else
      orbits.push_back({conj, lam});
  }
  std::shuffle(orbits.begin(), orbits.end(), rng);
  std::vector<std::string> labels;
  for (const auto& orbit : orbits) {
    if (static_cast<int>(labels.size() + orbit.size()) > max_size) continue;
    for (const Partition& lam : orbit) labels.push_back(lam.str());
  }

  RandomCase out;
  int k = static_cast<int>(labels.size());
  out.db.row_labels = labels;
  for (int i = 0; i < k; ++i) out.db.col_labels.push_back("c" + std::to_string(i));
  Pairing rows = row_pairing_from_partition_labels(labels);

  out.db.entries = IntMat::identity(k);
  std::uniform_int_distribution<int> entry(0, 2);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j) {
      int oi = rows.map[i], oj = rows.map[j];
      if (oi < oj) continue;
      if (std::make_pair(oi, oj) < std::make_pair(i, j)) continue;
      Integer v = entry(rng);
      out.db.at(i, j) = v;
      out.db.at(oi, oj) = v;
    }

  std::vector<int> rperm(k), cperm(k);
  for (int i = 0; i < k; ++i) rperm[i] = cperm[i] = i;
  std::shuffle(rperm.begin(), rperm.end(), rng);
  std::shuffle(cperm.begin(), cperm.end(), rng);
  LabeledIntMatrix shuffled;
  shuffled.entries = IntMat(k, k);
  for (int i = 0; i < k; ++i) {
    shuffled.row_labels.push_back(out.db.row_labels[rperm[i]]);
    shuffled.col_labels.push_back(out.db.col_labels[cperm[i]]);
    for (int j = 0; j < k; ++j) shuffled.at(i, j) = out.db.at(rperm[i], cperm[j]);
  }
  out.db = shuffled;

  Pairing prow = row_pairing_from_partition_labels(out.db.row_labels);
  Pairing pcol = eps_column_action(out.db, prow);
  std::vector<int> frows = prow.fixed(), fcols = pcol.fixed();
  int f = static_cast<int>(frows.size());
  out.dprime.entries = IntMat(2 * f, 2 * f);
  for (int i = 0; i < f; ++i) {
    out.dprime.row_labels.push_back(out.db.row_labels[frows[i]] + ":+");
    out.dprime.row_labels.push_back(out.db.row_labels[frows[i]] + ":-");
    out.dprime.col_labels.push_back(out.db.col_labels[fcols[i]] + ":+");
    out.dprime.col_labels.push_back(out.db.col_labels[fcols[i]] + ":-");
  }
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) {
      long d = out.db.at(frows[i], fcols[j]).get_si();
      std::uniform_int_distribution<long> split(0, d);
      long a = split(rng), b = d - a;
      out.dprime.at(2 * i, 2 * j) = a;
      out.dprime.at(2 * i, 2 * j + 1) = b;
      out.dprime.at(2 * i + 1, 2 * j) = b;
      out.dprime.at(2 * i + 1, 2 * j + 1) = a;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Criteria.
// ---------------------------------------------------------------------------

Result crit_quotient_fixture() {
  Partition lam = P("4,4,4,3,2");
  PQuotient q = p_quotient(lam, 3);
  PQuotient expected({P("1"), P("2"), P("1,1")});
  if (!(q == expected)) return fail("quotient is " + q.str());
  PQuotient qc = p_quotient(lam.conjugate(), 3);
  PQuotient expected_conj({P("2"), P("1,1"), P("1")});
  if (!(qc == expected_conj)) return fail("conjugate quotient is " + qc.str());
  return {true, "both tuples exact"};
}

Result crit_conjugation_law() {
  int checked = 0;
  for (int n = 1; n <= 15; ++n)
    for (const Partition& lam : all_partitions(n))
      for (int p : {3, 5, 7}) {
        if (!(p_quotient(lam.conjugate(), p) == p_quotient(lam, p).conjugated()))
          return fail("violated at " + lam.str() + ", p=" + std::to_string(p));
        ++checked;
      }
  return {true, std::to_string(checked) + " cases"};
}

Result crit_bar_criterion() {
  int checked = 0;
  for (int n = 1; n <= 15; ++n)
    for (const Partition& lam : all_partitions(n)) {
      if (!lam.is_self_conjugate()) continue;
      for (int p : {3, 5, 7}) {
        bool regular = is_p_regular(bar(lam), p);
        bool empty_mid = p_quotient(lam, p).comp((p + 1) / 2).empty();
        if (regular != empty_mid)
          return fail("mismatch at " + lam.str() + ", p=" + std::to_string(p));
        ++checked;
      }
    }
  return {true, std::to_string(checked) + " self-conjugate cases"};
}

Result crit_orthogonality() {
  for (int n = 1; n <= 10; ++n)
    if (!orthogonality_holds(ctx.sym(n)))
      return fail("S_" + std::to_string(n));
  for (int n = 2; n <= 9; ++n)
    if (!alt_orthogonality_holds(ctx.alt(n)))
      return fail("A_" + std::to_string(n));
  const std::pair<int, int> pw[] = {{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}};
  for (auto [p, w] : pw)
    if (!wreath_orthogonality_holds(ctx.wreath_semidirect(p, w)))
      return fail("G(" + std::to_string(p) + "," + std::to_string(w) + ")");
  return {true, "S_1..S_10, A_2..A_9, six wreath groups"};
}

Result crit_blocks_agree() {
  int groups = 0;
  for (int n = 2; n <= 8; ++n)
    for (int p : {3, 5}) {
      const SymTable& t = ctx.sym(n);
      std::set<std::set<std::string>> graph_blocks, core_blocks;
      for (const auto& comp : c_blocks(t, p_regular_class_indices(t, p))) {
        std::set<std::string> labels;
        for (int row : comp) labels.insert(t.labels[row].str());
        graph_blocks.insert(labels);
      }
      for (const BlockDescriptor& b : p_blocks(n, p)) {
        std::set<std::string> labels;
        for (const Partition& lam : b.members) labels.insert(lam.str());
        core_blocks.insert(labels);
      }
      if (graph_blocks != core_blocks)
        return fail("partition into blocks differs for n=" + std::to_string(n) +
                    ", p=" + std::to_string(p));
      ++groups;
    }
  return {true, std::to_string(groups) + " (n,p) pairs"};
}

Result crit_wreath_basic() {
  const std::pair<int, int> pw[] = {{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}};
  for (auto [p, w] : pw) {
    BasicSetClaim claim = construct_wreath_basic(p, w);
    VerifyOutcome outcome = verify_claim(ctx, claim);
    if (!outcome.ok)
      return fail("G(" + std::to_string(p) + "," + std::to_string(w) +
                  "): " + outcome.witness);
  }
  return {true, "six wreath groups verified"};
}

Result crit_isometry() {
  int verified = 0;
  for (int n = 2; n <= 10; ++n)
    for (int p : {3, 5})
      for (const BlockDescriptor& b : p_blocks(n, p)) {
        if (b.weight < 1) continue;
        IsometryReport twisted = verify_isometry(ctx, b);
        if (!twisted.ok || !twisted.candidate_ok)
          return fail("twisted step at n=" + std::to_string(n) +
                      ", p=" + std::to_string(p) + ", core " + b.core.str() +
                      ": " + twisted.witness);
        IsometryReport untwisted = verify_osima_step(ctx, b);
        if (!untwisted.ok || !untwisted.candidate_ok)
          return fail("untwisted step at n=" + std::to_string(n) +
                      ", p=" + std::to_string(p) + ", core " + b.core.str() +
                      ": " + untwisted.witness);
        ++verified;
      }
  return {true, std::to_string(verified) + " blocks, both variants"};
}

Result crit_sym_basic() {
  for (int n = 1; n <= 12; ++n)
    for (int p : {3, 5, 7}) {
      BasicSetClaim claim = construct_sym_basic(n, p);
      VerifyOutcome outcome = verify_claim(ctx, claim);
      if (!outcome.ok)
        return fail("S_" + std::to_string(n) + ", p=" + std::to_string(p) +
                    ": " + outcome.witness);
      std::set<std::string> members(claim.members.begin(), claim.members.end());
      for (const std::string& m : claim.members)
        if (!members.count(P(m).conjugate().str()))
          return fail("member set not conjugation-stable at " + m +
                      ", p=" + std::to_string(p));
      for (const Partition& lam : all_partitions(n)) {
        if (!lam.is_self_conjugate()) continue;
        bool in_set = members.count(lam.str()) != 0;
        if (in_set != is_p_regular(bar(lam), p))
          return fail("self-conjugate membership criterion fails at " +
                      lam.str() + ", p=" + std::to_string(p));
      }
    }
  return {true, "n <= 12, p in {3,5,7}, with stability and the bar criterion"};
}

Result crit_alt_basic() {
  for (int n = 2; n <= 10; ++n)
    for (int p : {3, 5}) {
      BasicSetClaim claim = construct_alt_basic(n, p);
      VerifyOutcome outcome = verify_claim(ctx, claim);
      if (!outcome.ok)
        return fail("A_" + std::to_string(n) + ", p=" + std::to_string(p) +
                    ": " + outcome.witness);
    }
  return {true, "n <= 10, p in {3,5}"};
}

Result crit_fixture_pipeline() {
  LabeledIntMatrix db = read_matrix_file(std::string(PBASIC_FIXTURE_DIR) +
                                         "/s6_p3_DB.mat");
  WedgeCertificate cert = wedge_shape(db);
  if (cert.found) return fail("expected a wedge refusal");
  if (cert.stuck_rows.empty() || cert.stuck_cols.empty())
    return fail("refusal carries no stuck submatrix");

  Pairing rows = row_pairing_from_partition_labels(db.row_labels);
  Pairing cols = eps_column_action(db, rows);  // throws if not a permutation
  if (cols.trace() != rows.trace())
    return fail("trace mismatch: rows " + std::to_string(rows.trace()) +
                ", cols " + std::to_string(cols.trace()));
  if (!is_unimodular(db.entries)) return fail("matrix is not unimodular");

  LabeledIntMatrix dnp = extract_dnp(db, rows, cols);
  if (dnp.rows() != rows.trace() || dnp.cols() != cols.trace())
    return fail("extracted block has the wrong shape");
  std::ostringstream note;
  note << "refusal on a " << cert.stuck_rows.size() << "x"
       << cert.stuck_cols.size() << " corner; traces " << rows.trace() << "="
       << cols.trace() << "; fixed part " << dnp.rows() << "x" << dnp.cols()
       << " with entry " << dnp.at(0, 0);
  return {true, note.str()};
}

Result crit_randomized_transfer() {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + trial % 5;
    RandomCase rc = random_case(rng, n, 12);
    Pairing rows = row_pairing_from_partition_labels(rc.db.row_labels);
    Pairing cols = eps_column_action(rc.db, rows);
    if (cols.trace() != rows.trace())
      return fail("trace mismatch in trial " + std::to_string(trial));
    LabeledIntMatrix alt = transfer_to_alternating(rc.db, rc.dprime);
    RelationsReport report = relations_check(rc.db, alt, cols);
    if (!report.ok())
      return fail("trial " + std::to_string(trial) + ": " + report.violations[0]);
    LabeledIntMatrix dnp = extract_dnp(rc.db, rows, cols);
    WedgeCertificate base = wedge_shape(dnp);
    if (!base.found || !validate_wedge(dnp, base))
      return fail("trial " + std::to_string(trial) + ": no wedge on the fixed part");
    WedgeCertificate paired = reorder_alt(base, rc.dprime);
    if (!paired.found || !validate_wedge(rc.dprime, paired))
      return fail("trial " + std::to_string(trial) + ": pair reordering failed");
  }
  return {true, "100 cases, zero violations"};
}

Result crit_oracles() {
  // core against all-orders rim-hook removal
  for (int n = 1; n <= 10; ++n)
    for (int p : {3, 5, 7}) {
      std::map<std::vector<int>, std::set<std::vector<int>>> memo;
      for (const Partition& lam : all_partitions(n)) {
        std::set<std::vector<int>> terminals;
        core_terminals(lam, p, memo, terminals);
        if (terminals.size() != 1)
          return fail("removal order changes the terminal at " + lam.str());
        if (*terminals.begin() != p_core(lam, p).parts())
          return fail("core disagrees with the oracle at " + lam.str());
      }
    }
  // degrees against the hook-length formula
  for (int n = 1; n <= 12; ++n) {
    Partition ones(std::vector<int>(n, 1));
    for (const Partition& lam : all_partitions(n))
      if (mn_value(lam, ones) != tableaux_count(lam))
        return fail("degree disagrees with hook lengths at " + lam.str());
  }
  // sign against all removal orders
  for (int n = 1; n <= 8; ++n)
    for (int p : {3, 5, 7})
      for (const Partition& lam : all_partitions(n)) {
        std::set<int> signs;
        sign_terminals(lam, p, 1, signs);
        if (signs.size() != 1 || *signs.begin() != p_sign(lam, p))
          return fail("sign disagrees with the oracle at " + lam.str() +
                      ", p=" + std::to_string(p));
      }
  return {true, "cores (n<=10), degrees (n<=12), signs (n<=8)"};
}

struct Criterion {
  const char* name;
  double budget_ms;
  std::function<Result()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"quotient of (4,4,4,3,2) at p=3, and of its conjugate", 1, crit_quotient_fixture},
      {"quotient of the conjugate = reversed conjugated quotient, n<=15", 10000,
       crit_conjugation_law},
      {"bar regularity <=> empty middle quotient coordinate, n<=15", 5000,
       crit_bar_criterion},
      {"exact orthogonality for all supported group families", 120000,
       crit_orthogonality},
      {"inner-product block graph = grouping by core, n<=8", 60000, crit_blocks_agree},
      {"wreath basic sets verify (p=3 w<=4, p=5 w<=2)", 120000, crit_wreath_basic},
      {"both isometry variants verify on every block of weight >= 1, n<=10", 180000,
       crit_isometry},
      {"symmetric basic sets verify with their structure, n<=12", 180000,
       crit_sym_basic},
      {"alternating basic sets verify, n<=10", 180000, crit_alt_basic},
      {"bundled 7x7 matrix: wedge refusal, traces, fixed part", 1000,
       crit_fixture_pipeline},
      {"randomized transfer/relations/reorder cases", 30000,
       crit_randomized_transfer},
      {"library against independent oracles (cores, degrees, signs)", 60000,
       crit_oracles},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    Result r;
    auto start = std::chrono::steady_clock::now();
    try {
      r = c.body();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    bool in_budget = ms <= c.budget_ms;
    bool ok = r.ok && in_budget;
    if (!ok) ++failures;

    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << (i + 1 < 10 ? "0" : "") << i + 1
         << " " << c.name << " (" << std::fixed;
    line.precision(ms < 10 ? 2 : 0);
    line << ms << " ms, budget " << c.budget_ms << " ms)";
    if (!r.ok)
      line << "\n       check failed: " << r.detail;
    else if (!in_budget)
      line << "\n       over budget";
    else if (!r.detail.empty())
      line << " -- " << r.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
