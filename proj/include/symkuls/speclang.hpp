#ifndef SYMKULS_SPECLANG_HPP
#define SYMKULS_SPECLANG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symkuls/builders.hpp"

namespace symkuls {

// Scalar literal: a bare residue for prime fields or a bracketed coefficient
// list for extension fields. Kept symbolic so documents round-trip without a
// realized FieldSpec.
struct ScalarLit {
  std::vector<unsigned> coeffs;  // one entry for prime-field literals
  bool bracketed = false;

  bool operator==(const ScalarLit&) const = default;
};

struct FieldDecl {
  unsigned p = 0;
  unsigned k = 1;
  std::vector<unsigned> modulus;  // k+1 coefficients when k > 1

  bool operator==(const FieldDecl&) const = default;
};

struct ScEntry {
  uint32_t i, j, l;
  ScalarLit value;

  bool operator==(const ScEntry&) const = default;
};

struct ExplicitPresentation {
  size_t dim = 0;
  std::vector<ScalarLit> unit;
  std::vector<ScalarLit> form;
  std::vector<ScEntry> sc;  // sorted by (i, j, l)

  bool operator==(const ExplicitPresentation&) const = default;
};

struct MatrixCtor {
  size_t d;
  bool operator==(const MatrixCtor&) const = default;
};
struct TruncCtor {
  size_t m;
  bool operator==(const TruncCtor&) const = default;
};
struct NakayamaCtor {
  size_t e, L;
  bool operator==(const NakayamaCtor&) const = default;
};
struct GroupCtor {
  std::string file;
  bool operator==(const GroupCtor&) const = default;
};
struct BrauerStarCtor {
  size_t e;
  unsigned m;
  bool operator==(const BrauerStarCtor&) const = default;
};
struct BrauerLineCtor {
  size_t e;
  unsigned m;
  bool operator==(const BrauerLineCtor&) const = default;
};
struct BrauerTreeCtor {
  size_t n_vertices = 0;
  std::vector<std::vector<uint32_t>> cyclic;
  size_t exceptional_vertex = 0;
  unsigned multiplicity = 1;
  bool operator==(const BrauerTreeCtor&) const = default;
};

using Constructor = std::variant<MatrixCtor, TruncCtor, NakayamaCtor, GroupCtor,
                                 BrauerStarCtor, BrauerLineCtor, BrauerTreeCtor>;

// One parsed .alg document: either an explicit structure-constant
// presentation or a constructor invocation, never both.
struct AlgebraDocument {
  std::string name;
  FieldDecl field;
  std::variant<ExplicitPresentation, Constructor> body;

  bool is_explicit() const { return std::holds_alternative<ExplicitPresentation>(body); }

  bool operator==(const AlgebraDocument&) const = default;
};

// Parses the line-oriented .alg format ('#' comments, whitespace tokens).
// Throws SyntaxError / SemanticError with line info and stable codes.
AlgebraDocument parse(const std::string& text);

// Canonical byte-deterministic rendering: sorted sc entries, single-space
// separation, trailing newline. parse(serialize(doc)) == doc.
std::string serialize(const AlgebraDocument& doc);

// Loads a .cayley file: first line "order identity", then order rows of
// order indices.
CayleyTable load_cayley(const std::string& path);

// Instantiates the document: builds the FieldSpec, runs the constructor or
// assembles the explicit presentation, and validates algebra and form.
// group-constructor files are resolved against base_dir when relative.
PresentedAlgebra realize(const AlgebraDocument& doc, const std::string& base_dir = ".");

// Convenience: read + parse + realize.
PresentedAlgebra load_algebra_file(const std::string& path);

AlgebraDocument parse_file(const std::string& path);

}  // namespace symkuls

#endif
