#include "pbasic/wreath.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pbasic {

BaseGroup base_group_semidirect(int p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("semidirect base needs an odd prime");
  BaseGroup b;
  b.name = "Z" + std::to_string(p) + ":Z" + std::to_string(p - 1);
  b.order = p * (p - 1);
  b.nclasses = p;
  b.cyclo_order = p - 1;
  b.distinguished = p - 1;  // the p-cycle class g_p
  int m = p - 1;
  int r = (p + 1) / 2;  // 1-based index of the degree-(p-1) character
  b.class_names.resize(p);
  b.centralizer.resize(p);
  b.class_names[0] = "1";
  b.centralizer[0] = p * (p - 1);
  for (int j = 2; j <= p - 1; ++j) {
    b.class_names[j - 1] = "u^" + std::to_string(j - 1);
    b.centralizer[j - 1] = p - 1;
  }
  b.class_names[p - 1] = "w";
  b.centralizer[p - 1] = p;
  b.chars.assign(p, std::vector<Cyclotomic>(p, Cyclotomic(m)));
  // Linear characters, lifted from Z_{p-1} =~ quotient by the p-part, fill
  // the indices other than r in exponent order a = 0, 1, ...
  int a = 0;
  for (int i = 1; i <= p; ++i) {
    if (i == r) continue;
    b.chars[i - 1][0] = Cyclotomic(m, 1);
    for (int j = 2; j <= p - 1; ++j)
      b.chars[i - 1][j - 1] = Cyclotomic::root(m, long(a) * (j - 1));
    b.chars[i - 1][p - 1] = Cyclotomic(m, 1);  // p-cycles lie in the p-part
    ++a;
  }
  // The induced character of degree p-1.
  b.chars[r - 1][0] = Cyclotomic(m, p - 1);
  for (int j = 2; j <= p - 1; ++j) b.chars[r - 1][j - 1] = Cyclotomic(m);
  b.chars[r - 1][p - 1] = Cyclotomic(m, -1);
  return b;
}

BaseGroup base_group_cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic base needs positive order");
  BaseGroup b;
  b.name = "Z" + std::to_string(m);
  b.order = m;
  b.nclasses = m;
  b.cyclo_order = m;
  b.distinguished = 0;  // identity class
  b.class_names.resize(m);
  b.centralizer.assign(m, Integer(m));
  for (int i = 1; i <= m; ++i)
    b.class_names[i - 1] = i == 1 ? "1" : "w^" + std::to_string(i - 1);
  b.chars.assign(m, std::vector<Cyclotomic>(m, Cyclotomic(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      b.chars[i][j] = Cyclotomic::root(m, long(i) * j);
  return b;
}

std::string tuple_str(const PartitionTuple& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += '|';
    out += t[i].str();
  }
  return out + ")";
}

PartitionTuple parse_tuple(const std::string& text, int s) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("tuple must be parenthesized");
  PartitionTuple t;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string tok;
  while (std::getline(ss, tok, '|')) t.push_back(Partition::parse(tok));
  if (static_cast<int>(t.size()) != s)
    throw std::invalid_argument("tuple has wrong number of components");
  return t;
}

int tuple_size(const PartitionTuple& t) {
  int n = 0;
  for (const auto& p : t) n += p.size();
  return n;
}

namespace {

void gen_tuples(int s, int w, int coord, PartitionTuple& cur,
                std::vector<PartitionTuple>& out) {
  if (coord == s - 1) {
    for (const Partition& p : all_partitions(w)) {
      cur.push_back(p);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int take = w; take >= 0; --take)
    for (const Partition& p : all_partitions(take)) {
      cur.push_back(p);
      gen_tuples(s, w - take, coord + 1, cur, out);
      cur.pop_back();
    }
}

}  // namespace

std::vector<PartitionTuple> partition_tuples(int s, int w) {
  if (s < 1 || w < 0) throw std::invalid_argument("bad tuple parameters");
  std::vector<PartitionTuple> out;
  PartitionTuple cur;
  gen_tuples(s, w, 0, cur, out);
  return out;
}

int WreathTable::index_of_char(const PartitionTuple& alpha) const {
  for (size_t i = 0; i < char_labels.size(); ++i)
    if (char_labels[i] == alpha) return static_cast<int>(i);
  throw std::invalid_argument("tuple is not a character label of this table");
}

int WreathTable::index_of_class(const PartitionTuple& pi) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].tuple == pi) return static_cast<int>(i);
  throw std::invalid_argument("tuple is not a class label of this table");
}

Integer wreath_centralizer(const BaseGroup& b, const PartitionTuple& pi) {
  Integer z = 1;
  for (int i = 0; i < static_cast<int>(pi.size()); ++i) {
    const std::vector<int>& parts = pi[i].parts();
    int run = 0, prev = 0;
    for (int k : parts) {
      z *= Integer(k) * b.centralizer[i];
      if (k == prev) {
        ++run;
      } else {
        prev = k;
        run = 1;
      }
      z *= run;
    }
  }
  return z;
}

namespace {

// Rim hooks of length k of one partition, as (rest, leg) pairs.
struct Hook {
  Partition rest;
  int leg;
};

std::vector<Hook> hooks_of_length(const Partition& lam, int k) {
  std::vector<Hook> out;
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
    out.push_back(Hook{bs.to_partition(), leg});
  }
  return out;
}

std::string tuple_key(const PartitionTuple& t) {
  std::string key;
  for (const auto& p : t) {
    key += p.str();
    key += ';';
  }
  return key;
}

// One peel step: (cycle length, base class index), in a canonical order.
std::vector<std::pair<int, int>> peel_sequence(const PartitionTuple& pi) {
  std::vector<std::pair<int, int>> seq;
  for (int j = static_cast<int>(pi.size()) - 1; j >= 0; --j)
    for (int k : pi[j].parts()) seq.emplace_back(k, j);
  return seq;
}

struct ValueCache {
  std::map<std::pair<std::string, int>, Cyclotomic> memo;
};

Cyclotomic value_rec(const BaseGroup& b, const PartitionTuple& alpha,
                     const std::vector<std::pair<int, int>>& seq, size_t depth,
                     ValueCache& cache) {
  if (depth == seq.size()) return Cyclotomic(b.cyclo_order, 1);
  auto key = std::make_pair(tuple_key(alpha), static_cast<int>(depth));
  auto it = cache.memo.find(key);
  if (it != cache.memo.end()) return it->second;
  auto [k, j] = seq[depth];
  Cyclotomic total(b.cyclo_order);
  for (int t = 0; t < b.nclasses; ++t) {
    if (alpha[t].size() < k) continue;
    const Cyclotomic& factor = b.chars[t][j];
    if (factor.is_zero()) continue;
    for (const Hook& h : hooks_of_length(alpha[t], k)) {
      PartitionTuple rest = alpha;
      rest[t] = h.rest;
      Cyclotomic sub = value_rec(b, rest, seq, depth + 1, cache);
      if (h.leg % 2) sub = -sub;
      total += factor * sub;
    }
  }
  cache.memo.emplace(std::move(key), total);
  return total;
}

WreathTable build_wreath_table(const BaseGroup& b, int w, bool parallel) {
  WreathTable t;
  t.base = b;
  t.w = w;
  Integer bw = 1;
  for (int i = 0; i < w; ++i) bw *= b.order;
  Integer wf = 1;
  for (int i = 2; i <= w; ++i) wf *= i;
  t.group_order = bw * wf;
  t.char_labels = partition_tuples(b.nclasses, w);
  t.classes.resize(t.char_labels.size());
  for (size_t c = 0; c < t.char_labels.size(); ++c) {
    t.classes[c].tuple = t.char_labels[c];
    t.classes[c].centralizer = wreath_centralizer(b, t.char_labels[c]);
  }
  int m = static_cast<int>(t.char_labels.size());
  std::vector<std::vector<Cyclotomic>> cols(m);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int c = 0; c < m; ++c) {
    ValueCache cache;
    auto seq = peel_sequence(t.classes[c].tuple);
    std::vector<Cyclotomic> col;
    col.reserve(m);
    for (int r = 0; r < m; ++r)
      col.push_back(value_rec(b, t.char_labels[r], seq, 0, cache));
    cols[c] = std::move(col);
  }
  t.values.assign(m, std::vector<Cyclotomic>(m, Cyclotomic(b.cyclo_order)));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) t.values[r][c] = cols[c][r];
  return t;
}

}  // namespace

Cyclotomic wreath_char_value(const BaseGroup& b, const PartitionTuple& alpha,
                             const PartitionTuple& pi) {
  if (static_cast<int>(alpha.size()) != b.nclasses ||
      static_cast<int>(pi.size()) != b.nclasses)
    throw std::invalid_argument("tuple arity must match the base group");
  if (tuple_size(alpha) != tuple_size(pi))
    throw std::invalid_argument("character and class tuples have different sizes");
  ValueCache cache;
  return value_rec(b, alpha, peel_sequence(pi), 0, cache);
}

WreathTable wreath_table(const BaseGroup& b, int w) {
  return build_wreath_table(b, w, true);
}
WreathTable wreath_table_serial(const BaseGroup& b, int w) {
  return build_wreath_table(b, w, false);
}

Integer tableaux_count(const Partition& lam) {
  Integer f = 1, hooks = 1;
  for (int i = 2; i <= lam.size(); ++i) f *= i;
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam.part(r); ++c) hooks *= hook_length(lam, r, c);
  return f / hooks;
}

Integer wreath_char_degree(const BaseGroup& b, const PartitionTuple& alpha) {
  Integer num = 1, den = 1;
  int w = tuple_size(alpha);
  for (int i = 2; i <= w; ++i) num *= i;
  for (int t = 0; t < static_cast<int>(alpha.size()); ++t) {
    const Partition& a = alpha[t];
    Integer d = b.chars[t][0].rational_part().get_num();
    for (int i = 0; i < a.size(); ++i) num *= d;
    num *= tableaux_count(a);
    for (int i = 2; i <= a.size(); ++i) den *= i;
  }
  return num / den;
}

Cyclotomic wreath_inner_product(const WreathTable& t, int a, int b,
                                const std::vector<int>& class_indices) {
  Cyclotomic acc(t.base.cyclo_order);
  for (int c : class_indices) {
    Cyclotomic term = t.values[a][c] * t.values[b][c].conj();
    term /= Rational(t.classes[c].centralizer);
    acc += term;
  }
  return acc;
}

std::vector<int> c_empty_class_indices(const WreathTable& t) {
  std::vector<int> out;
  for (size_t c = 0; c < t.classes.size(); ++c)
    if (t.classes[c].tuple[t.base.distinguished].empty())
      out.push_back(static_cast<int>(c));
  return out;
}

PartitionTuple tilde(const PartitionTuple& alpha) {
  if (alpha.size() % 2 == 0)
    throw std::invalid_argument("tilde needs an odd number of coordinates");
  PartitionTuple out = alpha;
  size_t r = (alpha.size() + 1) / 2;  // 1-based middle coordinate
  out[r - 1] = out[r - 1].conjugate();
  return out;
}

bool kernel_contains_base_p_part(const WreathTable& t, int char_index) {
  // Classes meeting the base p-part: 1-cycles only, supported on the
  // identity coordinate and the distinguished coordinate.
  const Cyclotomic& at_identity = t.values[char_index][t.index_of_class(
      [&] {
        PartitionTuple id(t.base.nclasses);
        if (t.w > 0) id[0] = Partition(std::vector<int>(t.w, 1));
        return id;
      }())];
  for (size_t c = 0; c < t.classes.size(); ++c) {
    const PartitionTuple& pi = t.classes[c].tuple;
    bool meets = true;
    for (int j = 0; j < t.base.nclasses && meets; ++j) {
      if (pi[j].empty()) continue;
      if (j != 0 && j != t.base.distinguished) meets = false;
      for (int k : pi[j].parts())
        if (k != 1) meets = false;
    }
    if (!meets) continue;
    if (!(t.values[char_index][c] == at_identity)) return false;
  }
  return true;
}

bool wreath_orthogonality_holds(const WreathTable& t) {
  int m = static_cast<int>(t.char_labels.size());
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Cyclotomic got = wreath_inner_product(t, i, j, all);
      Cyclotomic want(t.base.cyclo_order, i == j ? 1 : 0);
      if (!(got == want)) return false;
    }
  for (int c = 0; c < m; ++c)
    for (int d = c; d < m; ++d) {
      Cyclotomic got(t.base.cyclo_order);
      for (int r = 0; r < m; ++r) got += t.values[r][c] * t.values[r][d].conj();
      Cyclotomic want(t.base.cyclo_order,
                      c == d ? Rational(t.classes[c].centralizer) : Rational(0));
      if (!(got == want)) return false;
    }
  return true;
}

}  // namespace pbasic
