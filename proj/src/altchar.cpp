#include "pbasic/altchar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pbasic {

std::string AltClass::str() const {
  std::string s = cycle_type.str();
  if (half > 0) s += ":+";
  if (half < 0) s += ":-";
  return s;
}

std::string AltCharId::str() const {
  std::string s = lam.str();
  if (half > 0) s += ":+";
  if (half < 0) s += ":-";
  return s;
}

int AltTable::index_of(const std::string& label) const {
  for (size_t i = 0; i < chars.size(); ++i)
    if (chars[i].str() == label) return static_cast<int>(i);
  throw std::invalid_argument("no alternating-group character '" + label + "'");
}

bool even_cycle_type(const Partition& mu) {
  return (mu.size() - mu.length()) % 2 == 0;
}

bool splits_in_alt(const Partition& mu) {
  int prev = 0;
  for (int k : mu.parts()) {
    if (k % 2 == 0 || k == prev) return false;
    prev = k;
  }
  return true;
}

namespace {

// Sum of quadratic values with mixed radicands; used to check cancellation
// in inner products and orthogonality sums.
struct QuadSum {
  Rational rat;
  std::map<long, Rational> irr;

  void add(const QuadValue& v, const Rational& scale) {
    rat += v.a() * scale;
    if (v.b() != 0) {
      Rational& c = irr[v.d()];
      c += v.b() * scale;
      if (c == 0) irr.erase(v.d());
    }
  }
  bool rational() const { return irr.empty(); }
};

}  // namespace

AltTable alt_table_from(const SymTable& s) {
  if (s.n < 2) throw std::invalid_argument("alternating groups need n >= 2");
  AltTable t;
  t.n = s.n;
  t.group_order = s.group_order / 2;

  // Classes: even cycle types in the S_n order, split ones twice.
  std::vector<int> sym_class_of;  // alt class -> S_n class index
  for (size_t c = 0; c < s.classes.size(); ++c) {
    const Partition& mu = s.classes[c].cycle_type;
    if (!even_cycle_type(mu)) continue;
    if (splits_in_alt(mu)) {
      for (int half : {+1, -1}) {
        AltClass ac;
        ac.cycle_type = mu;
        ac.half = half;
        ac.centralizer = s.classes[c].centralizer;
        ac.size = s.classes[c].size / 2;
        t.classes.push_back(ac);
        sym_class_of.push_back(static_cast<int>(c));
      }
    } else {
      AltClass ac;
      ac.cycle_type = mu;
      ac.half = 0;
      if (s.classes[c].centralizer % 2 != 0)
        throw std::logic_error("unsplit class with odd centralizer");
      ac.centralizer = s.classes[c].centralizer / 2;
      ac.size = s.classes[c].size;
      t.classes.push_back(ac);
      sym_class_of.push_back(static_cast<int>(c));
    }
  }

  // Characters: one per conjugate pair, two per self-conjugate partition.
  for (const Partition& lam : s.labels) {
    Partition conj = lam.conjugate();
    if (lam < conj) continue;  // pair labelled by its canonically first member
    if (lam == conj) {
      t.chars.push_back(AltCharId{lam, +1});
      t.chars.push_back(AltCharId{lam, -1});
    } else {
      t.chars.push_back(AltCharId{lam, 0});
    }
  }

  t.values.assign(t.chars.size(), std::vector<QuadValue>(t.classes.size()));
  for (size_t r = 0; r < t.chars.size(); ++r) {
    const AltCharId& id = t.chars[r];
    int srow = s.index_of(id.lam);
    if (id.half == 0) {
      for (size_t c = 0; c < t.classes.size(); ++c)
        t.values[r][c] = QuadValue(Rational(s.values[srow][sym_class_of[c]]));
      continue;
    }
    // Split character: restriction halves everywhere except on the two
    // classes of cycle type bar(lam).
    Partition own = bar(id.lam);
    int k = own.length();
    int eps = ((s.n - k) / 2) % 2 ? -1 : 1;
    long prod = 1;
    for (int part : own.parts()) prod *= part;
    long disc = eps * prod;
    for (size_t c = 0; c < t.classes.size(); ++c) {
      const AltClass& ac = t.classes[c];
      if (ac.cycle_type == own) {
        // (eps +- sqrt(disc)) / 2, the sign tied to the class half for the
        // '+' character and flipped for the '-' character.
        int orient = id.half * ac.half;
        t.values[r][c] =
            QuadValue(Rational(eps, 2), Rational(orient, 2), disc);
      } else {
        const Integer& full = s.values[srow][sym_class_of[c]];
        if (full % 2 != 0)
          throw std::logic_error("odd split-character value off the own pair");
        t.values[r][c] = QuadValue(Rational(full / 2));
      }
    }
  }

  // Gate: the split-value branch is only accepted with exact orthogonality.
  if (!alt_orthogonality_holds(t))
    throw std::logic_error("alternating character table fails orthogonality");
  return t;
}

AltTable alt_table(int n) { return alt_table_from(sym_table(n)); }
AltTable alt_table_serial(int n) { return alt_table_from(sym_table_serial(n)); }

namespace {

Rational quadsum_to_rational(const QuadSum& acc, const char* what) {
  if (!acc.rational())
    throw std::logic_error(std::string("irrational ") + what +
                           " over a pairing-closed class union");
  return acc.rat;
}

void check_pairing_closed(const AltTable& t, const std::vector<int>& cls) {
  for (int c : cls) {
    if (t.classes[c].half == 0) continue;
    bool found = false;
    for (int d : cls)
      if (t.classes[d].cycle_type == t.classes[c].cycle_type &&
          t.classes[d].half == -t.classes[c].half)
        found = true;
    if (!found)
      throw std::invalid_argument("class union is not closed under the half-pairing");
  }
}

}  // namespace

Rational alt_inner_product(const AltTable& t, int c1, int c2,
                           const std::vector<int>& class_indices) {
  check_pairing_closed(t, class_indices);
  QuadSum acc;
  for (int c : class_indices) {
    QuadValue term = t.values[c1][c] * t.values[c2][c].conj();
    acc.add(term, Rational(1) / Rational(t.classes[c].centralizer));
  }
  return quadsum_to_rational(acc, "inner product");
}

std::vector<int> alt_p_regular_class_indices(const AltTable& t, int p) {
  std::vector<int> out;
  for (size_t c = 0; c < t.classes.size(); ++c)
    if (is_p_regular(t.classes[c].cycle_type, p)) out.push_back(static_cast<int>(c));
  return out;
}

bool alt_orthogonality_holds(const AltTable& t) {
  int nchars = static_cast<int>(t.chars.size());
  int nclasses = static_cast<int>(t.classes.size());
  std::vector<int> all(nclasses);
  for (int c = 0; c < nclasses; ++c) all[c] = c;
  for (int i = 0; i < nchars; ++i)
    for (int j = i; j < nchars; ++j) {
      QuadSum acc;
      for (int c = 0; c < nclasses; ++c)
        acc.add(t.values[i][c] * t.values[j][c].conj(),
                Rational(1) / Rational(t.classes[c].centralizer));
      if (!acc.rational() || acc.rat != (i == j ? 1 : 0)) return false;
    }
  for (int c = 0; c < nclasses; ++c)
    for (int d = c; d < nclasses; ++d) {
      QuadSum acc;
      for (int r = 0; r < nchars; ++r)
        acc.add(t.values[r][c] * t.values[r][d].conj(), Rational(1));
      if (!acc.rational()) return false;
      if (acc.rat != (c == d ? Rational(t.classes[c].centralizer) : 0)) return false;
    }
  return true;
}

}  // namespace pbasic
