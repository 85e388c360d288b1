#include "symkuls/speclang.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace symkuls {

namespace {

struct Token {
  std::string text;
  size_t line;
  size_t column;
};

// Splits into whitespace-separated tokens, dropping '#' comments.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#')
        ++i;
      toks.push_back({raw.substr(start, i - start), lineno, start + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

class LineParser {
 public:
  LineParser(const std::vector<Token>& toks) : toks_(toks) {}

  bool done() const { return pos_ == toks_.size(); }
  const Token& peek() const { return toks_[pos_]; }

  const Token& next(const char* what) {
    if (done())
      throw SyntaxError(toks_.back().line, toks_.back().column + toks_.back().text.size(),
                        std::string("expected ") + what);
    return toks_[pos_++];
  }

  uint64_t integer(const char* what, uint64_t max = UINT64_MAX) {
    const Token& t = next(what);
    uint64_t v = 0;
    if (t.text.empty()) throw SyntaxError(t.line, t.column, std::string("expected ") + what);
    for (char c : t.text) {
      if (c < '0' || c > '9')
        throw SyntaxError(t.line, t.column,
                          std::string("expected ") + what + ", got '" + t.text + "'");
      v = v * 10 + static_cast<uint64_t>(c - '0');
      if (v > max)
        throw SemanticError("E_RANGE", t.line, t.column, std::string(what) + " too large");
    }
    return v;
  }

  // Scalar literal: integer, or '[c0 c1 ...]' possibly split across tokens.
  ScalarLit scalar(const char* what) {
    const Token& t = next(what);
    ScalarLit lit;
    if (t.text.front() != '[') {
      lit.coeffs.push_back(parse_uint(t, what));
      return lit;
    }
    lit.bracketed = true;
    std::string acc = t.text.substr(1);
    size_t line = t.line, col = t.column;
    bool closed = false;
    while (true) {
      if (!acc.empty() && acc.back() == ']') {
        acc.pop_back();
        closed = true;
      }
      if (!acc.empty()) {
        Token part{acc, line, col};
        lit.coeffs.push_back(parse_uint(part, "scalar coefficient"));
      }
      if (closed) break;
      const Token& nt = next("']'");
      acc = nt.text;
      line = nt.line;
      col = nt.column;
    }
    return lit;
  }

  void finish() {
    if (!done())
      throw SyntaxError(peek().line, peek().column, "unexpected trailing token '" + peek().text + "'");
  }

 private:
  static unsigned parse_uint(const Token& t, const char* what) {
    unsigned v = 0;
    if (t.text.empty()) throw SyntaxError(t.line, t.column, std::string("expected ") + what);
    for (char c : t.text) {
      if (c < '0' || c > '9')
        throw SyntaxError(t.line, t.column,
                          std::string("expected ") + what + ", got '" + t.text + "'");
      v = v * 10 + static_cast<unsigned>(c - '0');
      if (v > 1000000)
        throw SemanticError("E_RANGE", t.line, t.column, std::string(what) + " too large");
    }
    return v;
  }

  const std::vector<Token>& toks_;
  size_t pos_ = 0;
};

}  // namespace

AlgebraDocument parse(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw SyntaxError(1, 1, "empty document");

  AlgebraDocument doc;
  bool have_header = false, have_field = false;
  std::optional<ExplicitPresentation> expl;
  std::optional<Constructor> ctor;
  std::optional<BrauerTreeCtor> tree;  // inline tree under construction
  bool have_exceptional = false;

  auto require_one_kind = [&](const Token& at) {
    if (expl && (ctor || tree))
      throw SemanticError("E_MIXED_KIND", at.line, at.column,
                          "document mixes explicit presentation and constructor");
  };

  for (const auto& line : lines) {
    LineParser lp(line);
    const Token& head = lp.next("keyword");
    const std::string& kw = head.text;

    if (kw == "algebra") {
      if (have_header)
        throw SemanticError("E_DUP_LINE", head.line, head.column, "duplicate algebra header");
      doc.name = lp.next("algebra name").text;
      have_header = true;
      lp.finish();
      continue;
    }
    if (!have_header)
      throw SyntaxError(head.line, head.column, "document must start with 'algebra NAME'");

    if (kw == "field") {
      if (have_field)
        throw SemanticError("E_DUP_LINE", head.line, head.column, "duplicate field line");
      doc.field.p = static_cast<unsigned>(lp.integer("characteristic p", 1u << 16));
      doc.field.k = static_cast<unsigned>(lp.integer("extension degree k", 16));
      if (!lp.done() && lp.peek().text == "modulus") {
        lp.next("modulus");
        for (unsigned i = 0; i <= doc.field.k; ++i)
          doc.field.modulus.push_back(static_cast<unsigned>(lp.integer("modulus coefficient")));
      }
      lp.finish();
      have_field = true;
      continue;
    }
    if (kw == "dim") {
      if (!expl) expl.emplace();
      if (expl->dim != 0)
        throw SemanticError("E_DUP_LINE", head.line, head.column, "duplicate dim line");
      expl->dim = lp.integer("dimension", 100000);
      if (expl->dim == 0)
        throw SemanticError("E_RANGE", head.line, head.column, "dim must be positive");
      lp.finish();
      require_one_kind(head);
      continue;
    }
    if (kw == "unit" || kw == "form") {
      if (!expl || expl->dim == 0)
        throw SemanticError("E_MISSING_DIM", head.line, head.column,
                            "'" + kw + "' line requires a preceding dim line");
      std::vector<ScalarLit> v;
      for (size_t i = 0; i < expl->dim; ++i) v.push_back(lp.scalar("scalar"));
      lp.finish();
      auto& slot = kw == "unit" ? expl->unit : expl->form;
      if (!slot.empty())
        throw SemanticError("E_DUP_LINE", head.line, head.column, "duplicate " + kw + " line");
      slot = std::move(v);
      require_one_kind(head);
      continue;
    }
    if (kw == "sc") {
      if (!expl || expl->dim == 0)
        throw SemanticError("E_MISSING_DIM", head.line, head.column,
                            "'sc' line requires a preceding dim line");
      ScEntry e;
      e.i = static_cast<uint32_t>(lp.integer("row index"));
      e.j = static_cast<uint32_t>(lp.integer("column index"));
      e.l = static_cast<uint32_t>(lp.integer("target index"));
      e.value = lp.scalar("scalar");
      lp.finish();
      if (e.i >= expl->dim || e.j >= expl->dim || e.l >= expl->dim)
        throw SemanticError("E_INDEX_RANGE", head.line, head.column,
                            "sc index out of range for dim " + std::to_string(expl->dim));
      for (const auto& prev : expl->sc)
        if (prev.i == e.i && prev.j == e.j && prev.l == e.l)
          throw SemanticError("E_DUP_SC", head.line, head.column,
                              "duplicate sc entry (" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + "," + std::to_string(e.l) + ")");
      expl->sc.push_back(std::move(e));
      require_one_kind(head);
      continue;
    }
    if (kw == "matrix" || kw == "trunc" || kw == "nakayama" || kw == "group" || kw == "brauer") {
      if (ctor || tree)
        throw SemanticError("E_DUP_LINE", head.line, head.column, "duplicate constructor line");
      if (expl)
        throw SemanticError("E_MIXED_KIND", head.line, head.column,
                            "document mixes explicit presentation and constructor");
      if (kw == "matrix") {
        ctor = MatrixCtor{static_cast<size_t>(lp.integer("matrix size", 64))};
      } else if (kw == "trunc") {
        ctor = TruncCtor{static_cast<size_t>(lp.integer("truncation order", 4096))};
      } else if (kw == "nakayama") {
        size_t e = lp.integer("vertex count", 4096);
        size_t L = lp.integer("path length bound", 4096);
        ctor = NakayamaCtor{e, L};
      } else if (kw == "group") {
        ctor = GroupCtor{lp.next("cayley file").text};
      } else {
        const Token& sub = lp.next("brauer form (star/line/vertices)");
        if (sub.text == "star" || sub.text == "line") {
          size_t e = lp.integer("edge count", 4096);
          unsigned m = static_cast<unsigned>(lp.integer("multiplicity", 4096));
          if (sub.text == "star")
            ctor = BrauerStarCtor{e, m};
          else
            ctor = BrauerLineCtor{e, m};
        } else if (sub.text == "vertices") {
          tree.emplace();
          tree->n_vertices = lp.integer("vertex count", 4096);
          tree->cyclic.resize(tree->n_vertices);
        } else {
          throw SyntaxError(sub.line, sub.column, "unknown brauer form '" + sub.text + "'");
        }
      }
      lp.finish();
      continue;
    }
    if (kw == "cyclic") {
      if (!tree)
        throw SemanticError("E_BAD_CTOR", head.line, head.column,
                            "'cyclic' requires a preceding 'brauer vertices' line");
      const Token& vt = lp.next("vertex index with ':'");
      std::string vs = vt.text;
      if (vs.empty() || vs.back() != ':')
        throw SyntaxError(vt.line, vt.column, "vertex index must end with ':'");
      vs.pop_back();
      size_t v = 0;
      for (char c : vs) {
        if (c < '0' || c > '9') throw SyntaxError(vt.line, vt.column, "bad vertex index");
        v = v * 10 + static_cast<size_t>(c - '0');
      }
      if (v >= tree->n_vertices)
        throw SemanticError("E_INDEX_RANGE", vt.line, vt.column, "vertex index out of range");
      if (!tree->cyclic[v].empty())
        throw SemanticError("E_DUP_LINE", vt.line, vt.column, "duplicate cyclic line for vertex");
      while (!lp.done())
        tree->cyclic[v].push_back(static_cast<uint32_t>(lp.integer("edge index")));
      if (tree->cyclic[v].empty())
        throw SyntaxError(head.line, head.column, "cyclic line lists no edges");
      continue;
    }
    if (kw == "exceptional") {
      if (!tree)
        throw SemanticError("E_BAD_CTOR", head.line, head.column,
                            "'exceptional' requires a preceding 'brauer vertices' line");
      tree->exceptional_vertex = lp.integer("vertex index");
      tree->multiplicity = static_cast<unsigned>(lp.integer("multiplicity", 4096));
      lp.finish();
      if (tree->exceptional_vertex >= tree->n_vertices)
        throw SemanticError("E_INDEX_RANGE", head.line, head.column, "vertex index out of range");
      have_exceptional = true;
      continue;
    }
    throw SyntaxError(head.line, head.column, "unknown keyword '" + kw + "'");
  }

  if (!have_field)
    throw SemanticError("E_MISSING_FIELD", 1, 1, "document has no field line");
  if (doc.field.k > 1 && doc.field.modulus.empty()) {
    // Deterministic default modulus keeps omitted-modulus documents canonical.
    auto spec = FieldSpec::canonical(doc.field.p, doc.field.k);
    doc.field.modulus.assign(spec->modulus().begin(), spec->modulus().end());
  }

  if (tree) {
    if (!have_exceptional)
      throw SemanticError("E_BAD_CTOR", 1, 1, "inline brauer tree has no exceptional line");
    doc.body = Constructor{*tree};
  } else if (ctor) {
    doc.body = *ctor;
  } else if (expl) {
    if (expl->unit.empty())
      throw SemanticError("E_MISSING_UNIT", 1, 1, "explicit presentation has no unit line");
    if (expl->form.empty())
      throw SemanticError("E_MISSING_FORM", 1, 1, "explicit presentation has no form line");
    std::sort(expl->sc.begin(), expl->sc.end(), [](const ScEntry& a, const ScEntry& b) {
      return std::tie(a.i, a.j, a.l) < std::tie(b.i, b.j, b.l);
    });
    doc.body = std::move(*expl);
  } else {
    throw SemanticError("E_EMPTY", 1, 1, "document declares neither presentation nor constructor");
  }
  return doc;
}

namespace {

std::string render_scalar(const ScalarLit& s) {
  if (!s.bracketed) return std::to_string(s.coeffs.empty() ? 0u : s.coeffs[0]);
  std::string out = "[";
  for (size_t i = 0; i < s.coeffs.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(s.coeffs[i]);
  }
  return out + "]";
}

}  // namespace

std::string serialize(const AlgebraDocument& doc) {
  std::ostringstream os;
  os << "algebra " << doc.name << "\n";
  os << "field " << doc.field.p << " " << doc.field.k;
  if (doc.field.k > 1) {
    os << " modulus";
    for (unsigned c : doc.field.modulus) os << " " << c;
  }
  os << "\n";
  if (doc.is_explicit()) {
    const auto& e = std::get<ExplicitPresentation>(doc.body);
    os << "dim " << e.dim << "\n";
    os << "unit";
    for (const auto& s : e.unit) os << " " << render_scalar(s);
    os << "\nform";
    for (const auto& s : e.form) os << " " << render_scalar(s);
    os << "\n";
    std::vector<ScEntry> sorted = e.sc;
    std::sort(sorted.begin(), sorted.end(), [](const ScEntry& a, const ScEntry& b) {
      return std::tie(a.i, a.j, a.l) < std::tie(b.i, b.j, b.l);
    });
    for (const auto& entry : sorted)
      os << "sc " << entry.i << " " << entry.j << " " << entry.l << " "
         << render_scalar(entry.value) << "\n";
    return os.str();
  }
  const auto& ctor = std::get<Constructor>(doc.body);
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, MatrixCtor>) {
          os << "matrix " << c.d << "\n";
        } else if constexpr (std::is_same_v<T, TruncCtor>) {
          os << "trunc " << c.m << "\n";
        } else if constexpr (std::is_same_v<T, NakayamaCtor>) {
          os << "nakayama " << c.e << " " << c.L << "\n";
        } else if constexpr (std::is_same_v<T, GroupCtor>) {
          os << "group " << c.file << "\n";
        } else if constexpr (std::is_same_v<T, BrauerStarCtor>) {
          os << "brauer star " << c.e << " " << c.m << "\n";
        } else if constexpr (std::is_same_v<T, BrauerLineCtor>) {
          os << "brauer line " << c.e << " " << c.m << "\n";
        } else if constexpr (std::is_same_v<T, BrauerTreeCtor>) {
          os << "brauer vertices " << c.n_vertices << "\n";
          for (size_t v = 0; v < c.cyclic.size(); ++v) {
            if (c.cyclic[v].empty()) continue;
            os << "cyclic " << v << ":";
            for (uint32_t i : c.cyclic[v]) os << " " << i;
            os << "\n";
          }
          os << "exceptional " << c.exceptional_vertex << " " << c.multiplicity << "\n";
        }
      },
      ctor);
  return os.str();
}

CayleyTable load_cayley(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidTable("cannot open cayley file: " + path);
  CayleyTable t;
  if (!(in >> t.order >> t.identity)) throw InvalidTable("bad cayley header in " + path);
  if (t.order == 0 || t.order > 4096) throw InvalidTable("unreasonable group order in " + path);
  t.table.assign(t.order, std::vector<uint32_t>(t.order, 0));
  for (size_t i = 0; i < t.order; ++i)
    for (size_t j = 0; j < t.order; ++j)
      if (!(in >> t.table[i][j])) throw InvalidTable("truncated cayley table in " + path);
  t.validate();
  return t;
}

namespace {

Scalar realize_scalar(const FieldPtr& field, const ScalarLit& lit, const char* what) {
  if (!lit.bracketed && field->k() > 1) {
    // Bare integers embed through the prime subfield.
    return field->from_int(static_cast<long long>(lit.coeffs.empty() ? 0 : lit.coeffs[0]));
  }
  if (lit.bracketed && lit.coeffs.size() > field->k())
    throw BadParameters(std::string(what) + ": scalar has more coefficients than the field degree");
  return field->element(lit.coeffs);
}

std::string dirname_of(const std::string& path) {
  size_t pos = path.find_last_of('/');
  if (pos == std::string::npos) return ".";
  return path.substr(0, pos);
}

}  // namespace

PresentedAlgebra realize(const AlgebraDocument& doc, const std::string& base_dir) {
  FieldPtr field;
  if (doc.field.k <= 1)
    field = FieldSpec::prime(doc.field.p);
  else
    field = FieldSpec::extension(doc.field.p, doc.field.k, doc.field.modulus);

  if (doc.is_explicit()) {
    const auto& e = std::get<ExplicitPresentation>(doc.body);
    size_t d = e.dim;
    std::vector<SparseVec> sc(d * d);
    for (const auto& entry : e.sc) {
      Scalar v = realize_scalar(field, entry.value, "sc");
      if (v.is_zero()) continue;
      sc[entry.i * d + entry.j].push_back({entry.l, v});
    }
    for (auto& cell : sc)
      std::sort(cell.begin(), cell.end(),
                [](const SparseEntry& a, const SparseEntry& b) { return a.idx < b.idx; });
    Vec unit;
    for (const auto& s : e.unit) unit.push_back(realize_scalar(field, s, "unit"));
    Vec lambda;
    for (const auto& s : e.form) lambda.push_back(realize_scalar(field, s, "form"));
    Algebra a = Algebra::create(field, d, std::move(sc), std::move(unit));
    SymForm f = validate_form(a, lambda);
    return {std::move(a), std::move(f)};
  }

  const auto& ctor = std::get<Constructor>(doc.body);
  return std::visit(
      [&](const auto& c) -> PresentedAlgebra {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, MatrixCtor>) {
          return matrix_algebra(c.d, field);
        } else if constexpr (std::is_same_v<T, TruncCtor>) {
          return trunc_poly(c.m, field);
        } else if constexpr (std::is_same_v<T, NakayamaCtor>) {
          return nakayama_symmetric(c.e, c.L, field);
        } else if constexpr (std::is_same_v<T, GroupCtor>) {
          std::string path = c.file;
          if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
          return group_algebra(load_cayley(path), field);
        } else if constexpr (std::is_same_v<T, BrauerStarCtor>) {
          return brauer_tree_algebra(BrauerTree::star(c.e, c.m), field);
        } else if constexpr (std::is_same_v<T, BrauerLineCtor>) {
          return brauer_tree_algebra(BrauerTree::line(c.e, c.m), field);
        } else {
          BrauerTree t;
          t.n_vertices = c.n_vertices;
          t.cyclic = c.cyclic;
          t.exceptional_vertex = c.exceptional_vertex;
          t.multiplicity = c.multiplicity;
          return brauer_tree_algebra(t, field);
        }
      },
      ctor);
}

AlgebraDocument parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameters("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

PresentedAlgebra load_algebra_file(const std::string& path) {
  return realize(parse_file(path), dirname_of(path));
}

}  // namespace symkuls
