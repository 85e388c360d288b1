#include "symkuls/builders.hpp"

#include <algorithm>
#include <map>

namespace symkuls {

void CayleyTable::validate() const {
  if (order == 0) throw InvalidTable("empty group");
  if (identity >= order) throw InvalidTable("identity index out of range");
  if (table.size() != order) throw InvalidTable("table row count differs from order");
  for (size_t i = 0; i < order; ++i) {
    if (table[i].size() != order) throw InvalidTable("table row length differs from order");
    for (uint32_t v : table[i])
      if (v >= order) throw InvalidTable("table entry out of range");
  }
  std::vector<bool> seen(order);
  for (size_t i = 0; i < order; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (size_t j = 0; j < order; ++j) {
      if (seen[table[i][j]]) throw InvalidTable("row " + std::to_string(i) + " is not a permutation");
      seen[table[i][j]] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (size_t j = 0; j < order; ++j) {
      if (seen[table[j][i]]) throw InvalidTable("column " + std::to_string(i) + " is not a permutation");
      seen[table[j][i]] = true;
    }
  }
  for (size_t i = 0; i < order; ++i)
    if (table[identity][i] != i || table[i][identity] != i)
      throw InvalidTable("identity law fails");
  for (size_t i = 0; i < order; ++i)
    for (size_t j = 0; j < order; ++j)
      for (size_t k = 0; k < order; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw InvalidTable("associativity fails at (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
}

PresentedAlgebra group_algebra(const CayleyTable& t, const FieldPtr& field) {
  t.validate();
  size_t d = t.order;
  Scalar one = field->one();
  std::vector<SparseVec> sc(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) sc[i * d + j] = {{t.table[i][j], one}};
  Vec unit = zero_vec(field, d);
  unit[t.identity] = one;
  Vec lambda = zero_vec(field, d);
  lambda[t.identity] = one;
  Algebra a = Algebra::create(field, d, std::move(sc), std::move(unit));
  SymForm f = validate_form(a, lambda);
  return {std::move(a), std::move(f)};
}

PresentedAlgebra matrix_algebra(size_t d, const FieldPtr& field) {
  if (d < 1) throw BadParameters("matrix algebra needs d >= 1");
  size_t dim = d * d;
  Scalar one = field->one();
  auto unit_index = [d](size_t r, size_t c) { return static_cast<uint32_t>(r * d + c); };
  std::vector<SparseVec> sc(dim * dim);
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c)
      for (size_t r2 = 0; r2 < d; ++r2)
        for (size_t c2 = 0; c2 < d; ++c2)
          if (c == r2) sc[unit_index(r, c) * dim + unit_index(r2, c2)] = {{unit_index(r, c2), one}};
  Vec unit = zero_vec(field, dim);
  Vec lambda = zero_vec(field, dim);
  for (size_t r = 0; r < d; ++r) {
    unit[unit_index(r, r)] = one;
    lambda[unit_index(r, r)] = one;  // trace
  }
  std::vector<std::string> names(dim);
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c)
      names[unit_index(r, c)] = "E" + std::to_string(r + 1) + std::to_string(c + 1);
  Algebra a = Algebra::create(field, dim, std::move(sc), std::move(unit), std::move(names));
  SymForm f = validate_form(a, lambda);
  return {std::move(a), std::move(f)};
}

PresentedAlgebra trunc_poly(size_t m, const FieldPtr& field) {
  if (m < 1) throw BadParameters("truncated polynomial ring needs m >= 1");
  Scalar one = field->one();
  std::vector<SparseVec> sc(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i + j < m) sc[i * m + j] = {{static_cast<uint32_t>(i + j), one}};
  Vec unit = zero_vec(field, m);
  unit[0] = one;
  Vec lambda = zero_vec(field, m);
  lambda[m - 1] = one;
  std::vector<std::string> names(m);
  for (size_t i = 0; i < m; ++i) names[i] = i == 0 ? "1" : "x^" + std::to_string(i);
  Algebra a = Algebra::create(field, m, std::move(sc), std::move(unit), std::move(names));
  SymForm f = validate_form(a, lambda);
  return {std::move(a), std::move(f)};
}

PresentedAlgebra nakayama_symmetric(size_t e, size_t L, const FieldPtr& field) {
  if (e < 1 || L < 1 || L % e != 1 % e)
    throw BadParameters("symmetric Nakayama algebra needs L = 1 (mod e)");
  // Basis: path starting at vertex v with length l, index v*L + l.
  size_t dim = e * L;
  Scalar one = field->one();
  auto idx = [L](size_t v, size_t l) { return static_cast<uint32_t>(v * L + l); };
  std::vector<SparseVec> sc(dim * dim);
  for (size_t v = 0; v < e; ++v)
    for (size_t l = 0; l < L; ++l)
      for (size_t w = 0; w < e; ++w)
        for (size_t l2 = 0; l2 < L; ++l2)
          if (w == (v + l) % e && l + l2 < L)
            sc[idx(v, l) * dim + idx(w, l2)] = {{idx(v, l + l2), one}};
  Vec unit = zero_vec(field, dim);
  Vec lambda = zero_vec(field, dim);
  for (size_t v = 0; v < e; ++v) {
    unit[idx(v, 0)] = one;
    lambda[idx(v, L - 1)] = one;
  }
  std::vector<std::string> names(dim);
  for (size_t v = 0; v < e; ++v)
    for (size_t l = 0; l < L; ++l)
      names[idx(v, l)] = "p(" + std::to_string(v) + "," + std::to_string(l) + ")";
  Algebra a = Algebra::create(field, dim, std::move(sc), std::move(unit), std::move(names));
  SymForm f = validate_form(a, lambda);
  return {std::move(a), std::move(f)};
}

BrauerTree BrauerTree::star(size_t edges, unsigned multiplicity) {
  if (edges < 1) throw BadTree("star needs at least one edge");
  BrauerTree t;
  t.n_vertices = edges + 1;
  t.cyclic.resize(t.n_vertices);
  for (size_t i = 0; i < edges; ++i) {
    t.cyclic[0].push_back(static_cast<uint32_t>(i));  // centre
    t.cyclic[i + 1] = {static_cast<uint32_t>(i)};
  }
  t.exceptional_vertex = 0;
  t.multiplicity = multiplicity;
  return t;
}

BrauerTree BrauerTree::line(size_t edges, unsigned multiplicity) {
  if (edges < 1) throw BadTree("line needs at least one edge");
  BrauerTree t;
  t.n_vertices = edges + 1;
  t.cyclic.resize(t.n_vertices);
  for (size_t v = 0; v < t.n_vertices; ++v) {
    if (v > 0) t.cyclic[v].push_back(static_cast<uint32_t>(v - 1));
    if (v < edges) t.cyclic[v].push_back(static_cast<uint32_t>(v));
  }
  t.exceptional_vertex = 0;
  t.multiplicity = multiplicity;
  return t;
}

void BrauerTree::validate() const {
  if (n_vertices < 2) throw BadTree("a Brauer tree needs at least one edge");
  if (multiplicity < 1) throw BadTree("multiplicity must be at least 1");
  if (exceptional_vertex >= n_vertices) throw BadTree("exceptional vertex out of range");
  if (cyclic.size() != n_vertices) throw BadTree("every vertex needs a cyclic order");
  size_t e = edge_count();
  std::vector<int> uses(e, 0);
  for (size_t v = 0; v < n_vertices; ++v) {
    std::vector<bool> seen(e, false);
    for (uint32_t i : cyclic[v]) {
      if (i >= e) throw BadTree("edge index out of range");
      if (seen[i]) throw BadTree("edge repeated at one vertex");
      seen[i] = true;
      ++uses[i];
    }
  }
  for (size_t i = 0; i < e; ++i)
    if (uses[i] != 2) throw BadTree("edge " + std::to_string(i) + " must join exactly two vertices");
  // Connectivity: n_vertices nodes, n_vertices-1 edges, so connected = tree.
  std::vector<std::vector<size_t>> vertex_of_edge(e);
  for (size_t v = 0; v < n_vertices; ++v)
    for (uint32_t i : cyclic[v]) vertex_of_edge[i].push_back(v);
  std::vector<bool> visited(n_vertices, false);
  std::vector<size_t> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (uint32_t i : cyclic[v]) {
      size_t w = vertex_of_edge[i][0] == v ? vertex_of_edge[i][1] : vertex_of_edge[i][0];
      if (!visited[w]) {
        visited[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (!std::all_of(visited.begin(), visited.end(), [](bool b) { return b; }))
    throw BadTree("tree is not connected");
}

namespace {

// Walk basis bookkeeping for a Brauer tree algebra. A basis element is an
// idempotent e_i, a walk of t steps around one endpoint v of its start edge
// (1 <= t <= d_v - 1 with d_v = valency * multiplicity), or the socle s_i
// shared by the two full walks at edge i.
struct WalkBasis {
  enum Kind : uint8_t { Idem, Walk, Socle };
  struct Entry {
    Kind kind;
    uint32_t edge;    // start edge
    uint32_t vertex;  // walk vertex (walks only)
    uint32_t steps;   // walk length (walks only)
  };

  const BrauerTree& tree;
  std::vector<size_t> endpoint_a, endpoint_b;     // per edge, a < b
  std::vector<size_t> pos_at_vertex;              // flattened position of edge in cyclic[v]
  std::vector<size_t> walk_len;                   // d_v per vertex
  std::vector<Entry> entries;
  std::vector<std::vector<std::vector<size_t>>> walk_index;  // [edge][side][t-1]
  std::vector<size_t> socle_index;

  explicit WalkBasis(const BrauerTree& t) : tree(t) {
    size_t e = t.edge_count();
    endpoint_a.assign(e, SIZE_MAX);
    endpoint_b.assign(e, SIZE_MAX);
    for (size_t v = 0; v < t.n_vertices; ++v)
      for (uint32_t i : t.cyclic[v]) {
        if (endpoint_a[i] == SIZE_MAX)
          endpoint_a[i] = v;
        else
          endpoint_b[i] = v;
      }
    walk_len.resize(t.n_vertices);
    for (size_t v = 0; v < t.n_vertices; ++v)
      walk_len[v] = t.cyclic[v].size() * (v == t.exceptional_vertex ? t.multiplicity : 1);
    for (size_t i = 0; i < e; ++i)
      entries.push_back({Idem, static_cast<uint32_t>(i), 0, 0});
    walk_index.assign(e, {});
    for (size_t i = 0; i < e; ++i) {
      walk_index[i].resize(2);
      for (int side = 0; side < 2; ++side) {
        size_t v = side == 0 ? endpoint_a[i] : endpoint_b[i];
        for (size_t tstep = 1; tstep < walk_len[v]; ++tstep) {
          walk_index[i][side].push_back(entries.size());
          entries.push_back({Walk, static_cast<uint32_t>(i), static_cast<uint32_t>(v),
                             static_cast<uint32_t>(tstep)});
        }
      }
    }
    socle_index.resize(e);
    for (size_t i = 0; i < e; ++i) {
      socle_index[i] = entries.size();
      entries.push_back({Socle, static_cast<uint32_t>(i), 0, 0});
    }
  }

  size_t dim() const { return entries.size(); }

  int side_of(size_t edge, size_t v) const { return endpoint_a[edge] == v ? 0 : 1; }

  // Edge reached from `edge` after `steps` applications of the cyclic order
  // at vertex v.
  uint32_t step_edge(size_t v, uint32_t edge, size_t steps) const {
    const auto& cyc = tree.cyclic[v];
    size_t pos = std::find(cyc.begin(), cyc.end(), edge) - cyc.begin();
    return cyc[(pos + steps) % cyc.size()];
  }

  uint32_t start_edge(const Entry& en) const { return en.edge; }

  uint32_t end_edge(const Entry& en) const {
    if (en.kind == Walk) return step_edge(en.vertex, en.edge, en.steps);
    return en.edge;
  }

  size_t index_of_walk(uint32_t edge, size_t v, size_t steps) const {
    return walk_index[edge][side_of(edge, v)][steps - 1];
  }

  // Product of two basis elements: one basis element or zero (nullopt).
  std::optional<size_t> product(size_t x, size_t y) const {
    const Entry& ex = entries[x];
    const Entry& ey = entries[y];
    if (end_edge(ex) != start_edge(ey)) return std::nullopt;
    if (ex.kind == Idem) return y;
    if (ey.kind == Idem) return x;
    if (ex.kind == Socle || ey.kind == Socle) return std::nullopt;
    if (ex.vertex != ey.vertex) return std::nullopt;  // mixed walks die
    size_t total = ex.steps + ey.steps;
    size_t dv = walk_len[ex.vertex];
    if (total < dv) return index_of_walk(ex.edge, ex.vertex, total);
    if (total == dv) return socle_index[ex.edge];
    return std::nullopt;
  }
};

}  // namespace

size_t brauer_tree_dim(const BrauerTree& t) {
  t.validate();
  size_t dim = 0;
  std::vector<size_t> d_v(t.n_vertices);
  for (size_t v = 0; v < t.n_vertices; ++v)
    d_v[v] = t.cyclic[v].size() * (v == t.exceptional_vertex ? t.multiplicity : 1);
  for (size_t v = 0; v < t.n_vertices; ++v)
    for (uint32_t i : t.cyclic[v]) {
      (void)i;
      dim += d_v[v];
    }
  return dim;
}

PresentedAlgebra brauer_tree_algebra(const BrauerTree& t, const FieldPtr& field) {
  t.validate();
  WalkBasis basis(t);
  size_t dim = basis.dim();
  Scalar one = field->one();
  std::vector<SparseVec> sc(dim * dim);
  for (size_t x = 0; x < dim; ++x)
    for (size_t y = 0; y < dim; ++y)
      if (auto prod = basis.product(x, y))
        sc[x * dim + y] = {{static_cast<uint32_t>(*prod), one}};
  Vec unit = zero_vec(field, dim);
  for (size_t i = 0; i < t.edge_count(); ++i) unit[i] = one;
  Vec lambda = zero_vec(field, dim);
  for (size_t i = 0; i < t.edge_count(); ++i) lambda[basis.socle_index[i]] = one;
  std::vector<std::string> names(dim);
  for (size_t x = 0; x < dim; ++x) {
    const auto& en = basis.entries[x];
    switch (en.kind) {
      case WalkBasis::Idem:
        names[x] = "e" + std::to_string(en.edge);
        break;
      case WalkBasis::Walk:
        names[x] = "w(" + std::to_string(en.edge) + ";v" + std::to_string(en.vertex) + ";" +
                   std::to_string(en.steps) + ")";
        break;
      case WalkBasis::Socle:
        names[x] = "s" + std::to_string(en.edge);
        break;
    }
  }
  // The eager checks are the correctness gate for the walk combinatorics.
  Algebra a = Algebra::create(field, dim, std::move(sc), std::move(unit), std::move(names));
  SymForm f = validate_form(a, lambda);
  return {std::move(a), std::move(f)};
}

}  // namespace symkuls
