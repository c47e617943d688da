#pragma once

#include <string>
#include <vector>

#include "pbasic/exactnum.hpp"
#include "pbasic/partitions.hpp"
#include "pbasic/symchar.hpp"

namespace pbasic {

// An S_n class with even cycle type splits into two A_n classes exactly when
// all parts are odd and distinct; `half` distinguishes the two halves.
struct AltClass {
  Partition cycle_type;
  int half = 0;  // 0 unsplit, +1 / -1 the two halves of a split class
  Integer centralizer;  // in A_n
  Integer size;
  std::string str() const;
};

// Character labels: a conjugate pair {lam, lam'} restricts to one character,
// labelled by whichever member comes first in the canonical order (the
// lexicographically larger one); a self-conjugate lam splits into two,
// labelled lam:+ and lam:-.
struct AltCharId {
  Partition lam;
  int half = 0;  // 0 unsplit, +1 / -1 split
  std::string str() const;
};

struct AltTable {
  int n = 0;
  Integer group_order;  // n!/2
  std::vector<AltCharId> chars;
  std::vector<AltClass> classes;
  std::vector<std::vector<QuadValue>> values;  // values[char][class]

  int index_of(const std::string& label) const;
};

bool even_cycle_type(const Partition& mu);
bool splits_in_alt(const Partition& mu);  // all parts odd and distinct

// Build from an S_n table (n >= 2).  Split characters take the value
// (eps +- sqrt(eps * prod bar-parts)) / 2 on their own pair of classes with
// eps = (-1)^((n-k)/2); the builder fails loudly if the resulting table does
// not satisfy exact row orthogonality, so a wrong branch cannot go unnoticed.
// The +/- labelling of halves is a convention; all downstream verdicts are
// invariant under swapping both simultaneously.
AltTable alt_table_from(const SymTable& s);
AltTable alt_table(int n);         // OpenMP-backed S_n table underneath
AltTable alt_table_serial(int n);  // serial reference

// Inner product over a union of classes closed under the half-pairing.
// The irrational contributions of a split pair cancel; throws if the union
// is not pairing-closed or the total fails to be rational.
Rational alt_inner_product(const AltTable& t, int c1, int c2,
                           const std::vector<int>& class_indices);

std::vector<int> alt_p_regular_class_indices(const AltTable& t, int p);

bool alt_orthogonality_holds(const AltTable& t);  // first + second, exact

}  // namespace pbasic
