#include "pbasic/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pbasic {

namespace {

int least_multiple_at_least(int p, int lo) {
  return ((lo + p - 1) / p) * p;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  if (text == "-") return Partition();
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part: '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("bad partition part: '" + tok + "'");
    parts.push_back(v);
  }
  if (parts.empty())
    throw std::invalid_argument("empty partition must be written '-'");
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("partition rows are 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  if (empty()) return Partition();
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) conj[j]++;
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  if (empty()) return "-";
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

BetaSet BetaSet::of(const Partition& lam, int t) {
  if (t < lam.length())
    throw std::invalid_argument("bead count below partition length");
  BetaSet b;
  b.t = t;
  b.values.reserve(t);
  for (int i = 1; i <= t; ++i) b.values.push_back(lam.part(i) + t - i);
  return b;
}

Partition BetaSet::to_partition() const {
  std::vector<int> parts;
  for (int i = 1; i <= t; ++i) {
    int v = values[i - 1] - (t - i);
    if (v < 0) throw std::logic_error("beta-set does not describe a partition");
    if (v > 0) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

PQuotient::PQuotient(std::vector<Partition> comps) : comps_(std::move(comps)) {
  if (comps_.empty()) throw std::invalid_argument("quotient needs components");
}

PQuotient PQuotient::parse(const std::string& text, int p) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("quotient must be parenthesized");
  std::vector<Partition> comps;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string tok;
  while (std::getline(ss, tok, '|')) comps.push_back(Partition::parse(tok));
  if (static_cast<int>(comps.size()) != p)
    throw std::invalid_argument("quotient has wrong number of components");
  return PQuotient(std::move(comps));
}

const Partition& PQuotient::comp(int i) const {
  if (i < 1 || i > p()) throw std::invalid_argument("quotient components are 1-based");
  return comps_[i - 1];
}

int PQuotient::total_size() const {
  int s = 0;
  for (const auto& c : comps_) s += c.size();
  return s;
}

PQuotient PQuotient::conjugated() const {
  std::vector<Partition> out(comps_.size());
  for (size_t i = 0; i < comps_.size(); ++i)
    out[comps_.size() - 1 - i] = comps_[i].conjugate();
  return PQuotient(std::move(out));
}

std::string PQuotient::str() const {
  std::string out = "(";
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += '|';
    out += comps_[i].str();
  }
  return out + ")";
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int first = std::min(n, maxpart); first >= 1; --first) {
    cur.push_back(first);
    gen_partitions(n - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  if (n == 0) out.assign(1, Partition());
  return out;
}

int hook_length(const Partition& lam, int row, int col) {
  if (row < 1 || row > lam.length() || col < 1 || col > lam.part(row))
    throw std::invalid_argument("cell outside diagram");
  int arm = lam.part(row) - col;
  int leg = lam.conjugate().part(col) - row;
  return arm + leg + 1;
}

RimHookResult remove_rim_hook(const Partition& lam, int row, int col, int length) {
  if (hook_length(lam, row, col) != length)
    throw std::invalid_argument("cell does not carry a hook of that length");
  int t = lam.length();
  BetaSet beta = BetaSet::of(lam, t);
  int b = beta.values[row - 1];
  int nb = b - length;
  // The rim hook anchored at (row, col) moves the bead of row `row` down by
  // the hook length; validity of the cell guarantees the landing spot is free.
  RimHookResult res;
  res.leg = 0;
  for (int v : beta.values) {
    if (v == nb) throw std::logic_error("rim hook landing spot occupied");
    if (v > nb && v < b) res.leg++;
  }
  beta.values[row - 1] = nb;
  std::sort(beta.values.begin(), beta.values.end(), std::greater<int>());
  res.rest = beta.to_partition();
  return res;
}

bool is_p_regular(const Partition& lam, int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  for (int v : lam.parts())
    if (v % p == 0) return false;
  return true;
}

Partition p_core(const Partition& lam, int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  int t = least_multiple_at_least(p, lam.length());
  BetaSet beta = BetaSet::of(lam, t);
  std::vector<int> counts(p, 0);
  for (int v : beta.values) counts[v % p]++;
  BetaSet out;
  out.t = t;
  for (int r = 0; r < p; ++r)
    for (int j = 0; j < counts[r]; ++j) out.values.push_back(r + p * j);
  std::sort(out.values.begin(), out.values.end(), std::greater<int>());
  return out.to_partition();
}

PQuotient p_quotient(const Partition& lam, int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  int t = least_multiple_at_least(p, lam.length());
  BetaSet beta = BetaSet::of(lam, t);
  std::vector<std::vector<int>> runner(p);  // bead positions, ascending
  for (auto it = beta.values.rbegin(); it != beta.values.rend(); ++it)
    runner[*it % p].push_back((*it - (*it % p)) / p);
  std::vector<Partition> comps(p);
  for (int r = 0; r < p; ++r) {
    std::vector<int> parts;
    int c = static_cast<int>(runner[r].size());
    for (int j = c - 1; j >= 0; --j) {
      int v = runner[r][j] - j;  // bead j (from bottom, 0-based) moved down
      if (v > 0) parts.push_back(v);
    }
    comps[r] = Partition(std::move(parts));
  }
  return PQuotient(std::move(comps));
}

int p_weight(const Partition& lam, int p) {
  return (lam.size() - p_core(lam, p).size()) / p;
}

Partition from_core_quotient(const Partition& core, const PQuotient& q, int p) {
  if (q.p() != p) throw std::invalid_argument("quotient has wrong arity");
  if (!(p_core(core, p) == core))
    throw std::invalid_argument("core argument is not a p-core");
  int needed = 0;
  for (int i = 1; i <= p; ++i) needed = std::max(needed, q.comp(i).length());
  // Grow the bead count until every runner holds enough beads for its
  // quotient component; adding p beads adds one bead per runner.
  int t = least_multiple_at_least(p, std::max(1, core.length()));
  std::vector<int> counts;
  for (;; t += p) {
    BetaSet beta = BetaSet::of(core, t);
    counts.assign(p, 0);
    for (int v : beta.values) counts[v % p]++;
    if (*std::min_element(counts.begin(), counts.end()) >= needed) break;
  }
  BetaSet out;
  out.t = t;
  for (int r = 0; r < p; ++r) {
    const Partition& comp = q.comp(r + 1);
    int c = counts[r];
    // A p-core's beads sit at the bottom of each runner, so runner r holds
    // positions 0..c-1; the component's parts displace them upward.
    for (int j = 1; j <= c; ++j) out.values.push_back((comp.part(j) + c - j) * p + r);
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<int>());
  return out.to_partition();
}

Partition bar(const Partition& lam) {
  if (!lam.is_self_conjugate())
    throw std::invalid_argument("bar requires a self-conjugate partition");
  std::vector<int> parts;
  for (int j = 1; j <= lam.length() && lam.part(j) >= j; ++j)
    parts.push_back(2 * lam.part(j) - (2 * j - 1));
  return Partition(std::move(parts));
}

int p_sign(const Partition& lam, int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  int t = least_multiple_at_least(p, lam.length());
  std::vector<int> values = BetaSet::of(lam, t).values;
  int sign = 1;
  for (;;) {
    // Move the largest bead that can slide down by p; values stay sorted.
    bool moved = false;
    for (size_t i = 0; i < values.size() && !moved; ++i) {
      int v = values[i];
      if (v < p) break;
      int nb = v - p;
      bool occupied = false;
      int leg = 0;
      for (int u : values) {
        if (u == nb) occupied = true;
        if (u > nb && u < v) leg++;
      }
      if (occupied) continue;
      values[i] = nb;
      std::sort(values.begin(), values.end(), std::greater<int>());
      if (leg % 2) sign = -sign;
      moved = true;
    }
    if (!moved) return sign;
  }
}

}  // namespace pbasic
