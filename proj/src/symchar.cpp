#include "pbasic/symchar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pbasic {

int SymTable::index_of(const Partition& lam) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == lam) return static_cast<int>(i);
  throw std::invalid_argument("partition not of this table's size");
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer centralizer_order(const Partition& cycle_type) {
  Integer z = 1;
  int run = 0, prev = 0;
  for (int k : cycle_type.parts()) {
    z *= k;
    if (k == prev) {
      ++run;
    } else {
      prev = k;
      run = 1;
    }
    z *= run;  // accumulates m_k! one factor at a time
  }
  return z;
}

namespace {

// Rim hooks of a fixed length, enumerated through beta-numbers: a hook of
// length k is a bead that can drop by k into a free spot; the leg length is
// the number of beads strictly in between.
struct HookMove {
  Partition rest;
  int leg;
};

std::vector<HookMove> hook_moves(const Partition& lam, int k) {
  std::vector<HookMove> out;
  int t = lam.length();
  std::vector<int> beta;
  beta.reserve(t);
  for (int i = 1; i <= t; ++i) beta.push_back(lam.part(i) + t - i);
  for (int i = 0; i < t; ++i) {
    int nb = beta[i] - k;
    if (nb < 0) continue;
    bool occupied = false;
    int leg = 0;
    for (int v : beta) {
      if (v == nb) occupied = true;
      if (v > nb && v < beta[i]) ++leg;
    }
    if (occupied) continue;
    std::vector<int> moved = beta;
    moved[i] = nb;
    std::sort(moved.begin(), moved.end(), std::greater<int>());
    BetaSet bs;
    bs.t = t;
    bs.values = std::move(moved);
    out.push_back(HookMove{bs.to_partition(), leg});
  }
  return out;
}

using ColumnCache = std::map<std::pair<std::vector<int>, int>, Integer>;

Integer mn_rec(const Partition& lam, const std::vector<int>& mu, size_t idx,
               ColumnCache& cache) {
  if (lam.empty()) return 1;
  auto key = std::make_pair(lam.parts(), static_cast<int>(idx));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Integer total = 0;
  int k = mu[idx];
  for (const HookMove& h : hook_moves(lam, k)) {
    Integer sub = mn_rec(h.rest, mu, idx + 1, cache);
    if (h.leg % 2)
      total -= sub;
    else
      total += sub;
  }
  cache.emplace(std::move(key), total);
  return total;
}

std::vector<Integer> table_column(const std::vector<Partition>& labels,
                                  const Partition& mu) {
  ColumnCache cache;
  std::vector<Integer> col(labels.size());
  for (size_t r = 0; r < labels.size(); ++r)
    col[r] = mn_rec(labels[r], mu.parts(), 0, cache);
  return col;
}

SymTable build_table(int n, bool parallel) {
  SymTable t;
  t.n = n;
  t.group_order = factorial(n);
  t.labels = all_partitions(n);
  int m = static_cast<int>(t.labels.size());
  t.classes.resize(m);
  for (int c = 0; c < m; ++c) {
    t.classes[c].cycle_type = t.labels[c];
    t.classes[c].centralizer = centralizer_order(t.labels[c]);
    t.classes[c].size = t.group_order / t.classes[c].centralizer;
  }
  std::vector<std::vector<Integer>> cols(m);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int c = 0; c < m; ++c) cols[c] = table_column(t.labels, t.labels[c]);
  t.values.assign(m, std::vector<Integer>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) t.values[r][c] = cols[c][r];
  return t;
}

}  // namespace

Integer mn_value(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    throw std::invalid_argument("character and class sizes differ");
  ColumnCache cache;
  return mn_rec(lam, mu.parts(), 0, cache);
}

SymTable sym_table(int n) { return build_table(n, true); }
SymTable sym_table_serial(int n) { return build_table(n, false); }

Rational inner_product(const SymTable& t, int chi, int psi,
                       const std::vector<int>& class_indices) {
  Rational acc = 0;
  for (int c : class_indices)
    acc += Rational(t.values[chi][c] * t.values[psi][c]) /
           Rational(t.classes[c].centralizer);
  return acc;
}

std::vector<int> p_regular_class_indices(const SymTable& t, int p) {
  std::vector<int> out;
  for (size_t c = 0; c < t.classes.size(); ++c)
    if (is_p_regular(t.classes[c].cycle_type, p)) out.push_back(static_cast<int>(c));
  return out;
}

std::vector<int> p_singular_class_indices(const SymTable& t, int p) {
  std::vector<int> out;
  for (size_t c = 0; c < t.classes.size(); ++c)
    if (!is_p_regular(t.classes[c].cycle_type, p)) out.push_back(static_cast<int>(c));
  return out;
}

std::vector<std::vector<int>> c_blocks(const SymTable& t,
                                       const std::vector<int>& class_indices) {
  int m = static_cast<int>(t.labels.size());
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (inner_product(t, i, j, class_indices) != 0) parent[find(i)] = find(j);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<BlockDescriptor> p_blocks(int n, int p) {
  std::map<std::vector<int>, BlockDescriptor> by_core;
  for (const Partition& lam : all_partitions(n)) {
    Partition core = p_core(lam, p);
    auto& blk = by_core[core.parts()];
    if (blk.members.empty()) {
      blk.n = n;
      blk.p = p;
      blk.core = core;
      blk.weight = (n - core.size()) / p;
    }
    blk.members.push_back(lam);
  }
  std::vector<BlockDescriptor> out;
  out.reserve(by_core.size());
  for (auto& [key, blk] : by_core) out.push_back(std::move(blk));
  return out;
}

bool orthogonality_holds(const SymTable& t) {
  int m = static_cast<int>(t.labels.size());
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Rational got = inner_product(t, i, j, all);
      if (got != (i == j ? 1 : 0)) return false;
    }
  for (int c = 0; c < m; ++c)
    for (int d = c; d < m; ++d) {
      Integer got = 0;
      for (int r = 0; r < m; ++r) got += t.values[r][c] * t.values[r][d];
      if (got != (c == d ? t.classes[c].centralizer : 0)) return false;
    }
  return true;
}

}  // namespace pbasic
