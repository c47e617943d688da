#pragma once

#include <string>
#include <vector>

#include "pbasic/exactnum.hpp"
#include "pbasic/partitions.hpp"

namespace pbasic {

// Exact class/character data of the base group of a wreath product B wr S_w.
// chars[i][j] is the value of the i-th irreducible on the j-th class, living
// in Q(zeta_{cyclo_order}).
struct BaseGroup {
  std::string name;
  int order = 0;
  int nclasses = 0;
  int cyclo_order = 1;
  // 0-based index of the class whose empty coordinate carves out the
  // distinguished class union (the p-cycle class for the semidirect base,
  // the identity class for the cyclic base).
  int distinguished = 0;
  std::vector<std::string> class_names;
  std::vector<Integer> centralizer;
  std::vector<std::vector<Cyclotomic>> chars;
};

// The Frobenius group Z_p : Z_{p-1} of order p(p-1).  Classes: g_1 = 1,
// g_2..g_{p-1} the classes of the non-trivial Z_{p-1} elements in
// generator-power order, g_p the class of p-cycles.  Characters: psi_i for
// i != r linear (lifted from Z_{p-1}, values (p-1)-th roots of unity),
// psi_r of degree p-1 at r = (p+1)/2, with psi_r(g_p) = -1 and psi_r = 0 on
// the Z_{p-1} classes.
BaseGroup base_group_semidirect(int p);

// Cyclic group Z_m with classes h_i = omega^{i-1} and chars eta_j(h_i) =
// zeta_m^{(j-1)(i-1)}; distinguished class = identity.
BaseGroup base_group_cyclic(int m);

// Classes and characters of B wr S_w are both indexed by tuples of
// partitions with nclasses components and total size w.
using PartitionTuple = std::vector<Partition>;

std::string tuple_str(const PartitionTuple& t);  // "(q1|q2|...|qs)"
PartitionTuple parse_tuple(const std::string& text, int s);
int tuple_size(const PartitionTuple& t);
std::vector<PartitionTuple> partition_tuples(int s, int w);

struct WreathClass {
  PartitionTuple tuple;
  Integer centralizer;  // prod over (i,k): m_{i,k}! * (k * |C_B(g_i)|)^{m_{i,k}}
};

struct WreathTable {
  BaseGroup base;
  int w = 0;
  Integer group_order;  // |B|^w * w!
  std::vector<PartitionTuple> char_labels;
  std::vector<WreathClass> classes;  // same tuple enumeration as char_labels
  std::vector<std::vector<Cyclotomic>> values;  // values[char][class]

  int index_of_char(const PartitionTuple& alpha) const;
  int index_of_class(const PartitionTuple& pi) const;
};

Integer wreath_centralizer(const BaseGroup& b, const PartitionTuple& pi);

// Character value by the wreath rim-hook recursion: peeling a k-cycle with
// cycle product in class g_j contributes psi_t(g_j) * (-1)^leg for every
// k-rim-hook of the t-th coordinate.  Independent of the peel order
// (property-tested).
Cyclotomic wreath_char_value(const BaseGroup& b, const PartitionTuple& alpha,
                             const PartitionTuple& pi);

WreathTable wreath_table(const BaseGroup& b, int w);         // OpenMP over classes
WreathTable wreath_table_serial(const BaseGroup& b, int w);  // reference

// Degree by the product formula: w! * prod_i d_i^{|alpha_i|} f^{alpha_i} / |alpha_i|!.
Integer wreath_char_degree(const BaseGroup& b, const PartitionTuple& alpha);

// Number of standard tableaux by the hook-length formula.
Integer tableaux_count(const Partition& lam);

Cyclotomic wreath_inner_product(const WreathTable& t, int a, int b,
                                const std::vector<int>& class_indices);

// Classes whose distinguished coordinate is empty.
std::vector<int> c_empty_class_indices(const WreathTable& t);

// Conjugate the middle coordinate r = (s+1)/2 (s odd).
PartitionTuple tilde(const PartitionTuple& alpha);

// Whether the base-group p-part Z_p^w acts trivially under chi^alpha,
// decided by comparing values on all classes meeting Z_p^w with the degree.
// (For the semidirect base these are the tuples supported on 1-cycles in the
// identity and p-cycle coordinates.)
bool kernel_contains_base_p_part(const WreathTable& t, int char_index);

bool wreath_orthogonality_holds(const WreathTable& t);

}  // namespace pbasic
