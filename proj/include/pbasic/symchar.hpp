#pragma once

#include <vector>

#include "pbasic/exactnum.hpp"
#include "pbasic/partitions.hpp"

namespace pbasic {

struct SymClass {
  Partition cycle_type;
  Integer centralizer;  // prod k^{m_k} * m_k!
  Integer size;         // n! / centralizer
};

// Ordinary character table of S_n.  Rows (characters) and columns (classes)
// are both indexed by all_partitions(n) in the same canonical order.
struct SymTable {
  int n = 0;
  Integer group_order;
  std::vector<Partition> labels;
  std::vector<SymClass> classes;
  std::vector<std::vector<Integer>> values;  // values[row][col]

  int index_of(const Partition& lam) const;
};

Integer factorial(int n);
Integer centralizer_order(const Partition& cycle_type);

// Single character value by the rim-hook recursion (cycle parts consumed in
// decreasing order, memoized on (partition, remaining suffix)).
Integer mn_value(const Partition& lam, const Partition& mu);

SymTable sym_table(int n);         // OpenMP-parallel over classes
SymTable sym_table_serial(int n);  // reference implementation

// <chi, psi> restricted to a union of classes: sum over the given class
// indices of chi(c)*psi(c)/z_c (the values are rational integers).
Rational inner_product(const SymTable& t, int chi, int psi,
                       const std::vector<int>& class_indices);

std::vector<int> p_regular_class_indices(const SymTable& t, int p);
std::vector<int> p_singular_class_indices(const SymTable& t, int p);

// Connected components of the graph on rows with an edge where the inner
// product over the given classes is non-zero.  Components are sorted by
// smallest member; members ascend.
std::vector<std::vector<int>> c_blocks(const SymTable& t,
                                       const std::vector<int>& class_indices);

struct BlockDescriptor {
  int n = 0, p = 0, weight = 0;
  Partition core;
  std::vector<Partition> members;  // canonical order
};

// p-blocks: characters grouped by p-core, with the block weight.
std::vector<BlockDescriptor> p_blocks(int n, int p);

// Exact first and second orthogonality over the whole table.
bool orthogonality_holds(const SymTable& t);

}  // namespace pbasic
