#ifndef SYMKULS_BUILDERS_HPP
#define SYMKULS_BUILDERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symkuls/algebra.hpp"

namespace symkuls {

struct PresentedAlgebra {
  Algebra algebra;
  SymForm form;
};

// Multiplication table of a finite group; table[i][j] is the index of g_i g_j.
struct CayleyTable {
  size_t order = 0;
  size_t identity = 0;
  std::vector<std::vector<uint32_t>> table;

  // Checks index ranges, the permutation property of rows and columns, the
  // identity laws and associativity. Throws InvalidTable.
  void validate() const;
};

// Brauer tree: n_vertices nodes, edges 0..n_vertices-2, a cyclic order of the
// incident edges at every vertex, one exceptional vertex with multiplicity m.
struct BrauerTree {
  size_t n_vertices = 0;
  std::vector<std::vector<uint32_t>> cyclic;  // per vertex, edge ids in cyclic order
  size_t exceptional_vertex = 0;
  unsigned multiplicity = 1;

  size_t edge_count() const { return n_vertices == 0 ? 0 : n_vertices - 1; }

  static BrauerTree star(size_t edges, unsigned multiplicity);
  static BrauerTree line(size_t edges, unsigned multiplicity);

  // Throws BadTree unless the data describes a connected tree with every
  // edge appearing in exactly two cyclic orders.
  void validate() const;
};

// Group algebra with the identity-indicator form (permutation gram matrix).
PresentedAlgebra group_algebra(const CayleyTable& t, const FieldPtr& field);

// Full matrix algebra on matrix units with the trace form.
PresentedAlgebra matrix_algebra(size_t d, const FieldPtr& field);

// k[x]/(x^m) with the top-coefficient form.
PresentedAlgebra trunc_poly(size_t m, const FieldPtr& field);

// Symmetric Nakayama algebra: paths of length < L on the cyclic quiver with
// e vertices, socle-indicator form. Requires L = 1 (mod e).
PresentedAlgebra nakayama_symmetric(size_t e, size_t L, const FieldPtr& field);

// Brauer tree algebra on the partial-walk basis with the socle-indicator
// form. Eagerly validated: a non-associative table or degenerate form is a
// construction bug and throws.
PresentedAlgebra brauer_tree_algebra(const BrauerTree& t, const FieldPtr& field);

// Closed dimension formula: sum over edges of the two endpoint walk lengths.
size_t brauer_tree_dim(const BrauerTree& t);

}  // namespace symkuls

#endif
