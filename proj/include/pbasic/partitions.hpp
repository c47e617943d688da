#pragma once

#include <string>
#include <vector>

namespace pbasic {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is valid everywhere and serializes as "-"; non-empty partitions serialize
// as comma-separated parts, e.g. "4,4,4,3,2".
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& text);

  int size() const { return size_; }  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-based row access; rows beyond the length have part 0.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  bool is_self_conjugate() const { return *this == conjugate(); }

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  // Lexicographic on the part vectors; used wherever a canonical order or a
  // canonical representative of a conjugate pair is needed.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Beta-numbers of a partition with an explicit bead count t >= length:
// values[i-1] = lambda_i + t - i for i = 1..t, strictly decreasing and
// non-negative.  Replacing t by t + p shifts every value by p, so all
// core/quotient computations below are independent of the admissible t.
struct BetaSet {
  int t = 0;
  std::vector<int> values;  // strictly decreasing, size t

  static BetaSet of(const Partition& lam, int t);
  Partition to_partition() const;
};

// p-quotient: a p-tuple of partitions.  Component i (1-based) collects the
// beads of residue i-1, with the bead count t fixed as the least multiple of
// p with t >= length(lambda).  With that choice, conjugating the partition
// reverses the tuple and conjugates each component.
class PQuotient {
public:
  PQuotient() = default;
  explicit PQuotient(std::vector<Partition> comps);
  static PQuotient parse(const std::string& text, int p);

  int p() const { return static_cast<int>(comps_.size()); }
  const Partition& comp(int i) const;  // 1-based
  const std::vector<Partition>& comps() const { return comps_; }
  int total_size() const;
  // Reversed tuple of conjugated components (the quotient of the conjugate).
  PQuotient conjugated() const;

  std::string str() const;  // "(q1|q2|...|qp)" with "-" for empty components

  friend bool operator==(const PQuotient& a, const PQuotient& b) {
    return a.comps_ == b.comps_;
  }

private:
  std::vector<Partition> comps_;
};

// All partitions of n in descending lexicographic order: (n) first, (1^n)
// last.  This order is the canonical row/column order used everywhere.
std::vector<Partition> all_partitions(int n);

// Hook length of the cell (row, col), both 1-based.  Throws if the cell is
// outside the diagram.
int hook_length(const Partition& lam, int row, int col);

struct RimHookResult {
  Partition rest;
  int leg = 0;  // leg length of the removed rim hook
};
// Remove the rim hook anchored at cell (row, col); its hook length must equal
// `length`.  Returns the remaining partition and the leg length.
RimHookResult remove_rim_hook(const Partition& lam, int row, int col, int length);

// True when no part of lam is divisible by p (class-flavoured regularity:
// the cycle types of p-regular elements, not multiplicity-regularity).
bool is_p_regular(const Partition& lam, int p);

Partition p_core(const Partition& lam, int p);
PQuotient p_quotient(const Partition& lam, int p);
int p_weight(const Partition& lam, int p);  // (|lam| - |core|) / p

// Inverse of (p_core, p_quotient).  `core` must be its own p-core and `q`
// must have exactly p components.
Partition from_core_quotient(const Partition& core, const PQuotient& q, int p);

// Diagonal-hook partition of a self-conjugate partition: parts
// 2*lam_j - (2j - 1) for j = 1..k where k is the number of diagonal cells.
// Distinct odd parts; throws if lam is not self-conjugate.
Partition bar(const Partition& lam);

// Sign (-1)^(sum of leg lengths) accumulated while removing p-rim-hooks down
// to the p-core; independent of removal order (property-tested), computed
// here by always moving the largest movable bead first.
int p_sign(const Partition& lam, int p);

}  // namespace pbasic
