#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "symkuls/report.hpp"

namespace {

using namespace symkuls;

int thread_cap() {
  if (const char* env = std::getenv("SYMKULS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int map_error(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const NotSymmetricForm*>(&e)) return kExitInvalidForm;
  if (dynamic_cast<const DegenerateForm*>(&e)) return kExitInvalidForm;
  if (dynamic_cast<const NotIdempotent*>(&e)) return kExitNotIdempotent;
  if (dynamic_cast<const TooLarge*>(&e)) return kExitTooLarge;
  if (dynamic_cast<const FieldMismatch*>(&e)) return kExitFieldMismatch;
  if (dynamic_cast<const Error*>(&e)) return kExitInvalidAlgebra;
  return kExitInternal;
}

struct Loaded {
  AlgebraDocument doc;
  PresentedAlgebra pa;
};

Loaded load(const std::string& path) {
  AlgebraDocument doc = parse_file(path);
  size_t slash = path.find_last_of('/');
  std::string dir = slash == std::string::npos ? "." : path.substr(0, slash);
  PresentedAlgebra pa = realize(doc, dir);
  return {std::move(doc), std::move(pa)};
}

int cmd_validate(const std::string& file) {
  AlgebraDocument doc;
  try {
    doc = parse_file(file);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << " [" << e.code() << "]\n";
    return kExitParse;
  }
  size_t slash = file.find_last_of('/');
  std::string dir = slash == std::string::npos ? "." : file.substr(0, slash);
  try {
    PresentedAlgebra pa = realize(doc, dir);
    std::cout << "ok: " << doc.name << " dim=" << pa.algebra.dim() << " over "
              << pa.algebra.field()->describe() << "\n";
    return kExitOk;
  } catch (const NotSymmetricForm& e) {
    std::cerr << "form invalid: " << e.what() << "\n";
    return kExitInvalidForm;
  } catch (const DegenerateForm& e) {
    std::cerr << "form invalid: " << e.what() << "\n";
    return kExitInvalidForm;
  } catch (const Error& e) {
    std::cerr << "algebra invalid: " << e.what() << "\n";
    return kExitInvalidAlgebra;
  }
}

int cmd_fingerprint(const std::string& file, size_t nmax, bool machine) {
  Loaded in = load(file);
  InvariantReport r = compute_report(in.doc.name, in.pa.algebra, in.pa.form, nmax);
  std::cout << (machine ? report_machine(r) : report_text(r));
  return kExitOk;
}

int cmd_compare(const std::string& file_a, const std::string& file_b) {
  Loaded a = load(file_a);
  Loaded b = load(file_b);
  if (!a.pa.algebra.field()->same(*b.pa.algebra.field()))
    throw FieldMismatch("fingerprints are only comparable over one field");

  Fingerprint fa, fb;
  if (thread_cap() >= 2) {
    std::exception_ptr err;
    std::thread worker([&] {
      try {
        fb = fingerprint(b.pa.algebra, b.pa.form);
      } catch (...) {
        err = std::current_exception();
      }
    });
    fa = fingerprint(a.pa.algebra, a.pa.form);
    worker.join();
    if (err) std::rethrow_exception(err);
  } else {
    fa = fingerprint(a.pa.algebra, a.pa.form);
    fb = fingerprint(b.pa.algebra, b.pa.form);
  }

  bool all_equal = true;
  for (const auto& entry : compare_fingerprints(fa, fb)) {
    std::cout << entry.key << ": " << entry.left << " vs " << entry.right << " "
              << (entry.equal ? "=" : "DIFFERS");
    if (!entry.compared) std::cout << " (context only)";
    std::cout << "\n";
    if (entry.compared && !entry.equal) all_equal = false;
  }
  if (all_equal) {
    std::cout << "verdict: not distinguished (fingerprints equal)\n";
    return kExitOk;
  }
  std::cout << "verdict: fingerprints differ (no derived equivalence)\n";
  return kExitDiffer;
}

Element parse_coords(const Algebra& a, const std::string& text) {
  // Reuse the document scalar grammar: one token list "c0 c1 ...".
  std::string fake = "algebra _\nfield " + std::to_string(a.field()->p()) + " " +
                     std::to_string(a.field()->k());
  if (a.field()->k() > 1) {
    fake += " modulus";
    for (uint16_t c : a.field()->modulus()) fake += " " + std::to_string(c);
  }
  fake += "\ndim " + std::to_string(a.dim()) + "\nunit " + text + "\nform";
  for (size_t i = 0; i < a.dim(); ++i) fake += " 0";
  fake += "\n";
  AlgebraDocument doc = parse(fake);
  const auto& ep = std::get<ExplicitPresentation>(doc.body);
  Element e;
  for (const auto& lit : ep.unit) {
    if (lit.bracketed)
      e.push_back(a.field()->element(lit.coeffs));
    else
      e.push_back(a.field()->from_int(lit.coeffs.empty() ? 0 : lit.coeffs[0]));
  }
  return e;
}

int cmd_condense(const std::string& file, const std::string& idem_text) {
  Loaded in = load(file);
  const Algebra& a = in.pa.algebra;
  Element e = parse_coords(a, idem_text);
  CondenseResult res = condense(a, in.pa.form, e);
  if (res.algebra.dim() == 0) std::cout << "note: condensation by 0 gives the empty algebra\n";

  InvariantReport r = compute_report(in.doc.name + "|condensed", res.algebra, res.form, 0);
  std::cout << report_text(r);

  // Verify e * T_n(A)^perp * e = T_n(eAe)^perp, both sides as subspaces of A.
  KulsChain big = compute_chain(a, in.pa.form);
  KulsChain small = compute_chain(res.algebra, res.form);
  size_t upto = std::max(big.n_stab, small.n_stab);
  bool all_hold = true;
  for (size_t n = 1; n <= upto; ++n) {
    std::vector<Vec> rows;
    const Subspace& tp = big.t_perp_at(n);
    for (size_t i = 0; i < tp.dim(); ++i) rows.push_back(res.centre_map.apply(tp.basis().row(i)));
    Subspace lhs = Subspace::row_span(a.field(), rows, a.dim());
    std::vector<Vec> lifted;
    const Subspace& sp = small.t_perp_at(n);
    for (size_t i = 0; i < sp.dim(); ++i) {
      Vec coords = sp.basis().row(i);
      Vec x = zero_vec(a.field(), a.dim());
      for (size_t l = 0; l < coords.size(); ++l)
        if (!coords[l].is_zero()) x = add(x, scale(coords[l], res.image.basis().row(l)));
      lifted.push_back(std::move(x));
    }
    Subspace rhs = Subspace::row_span(a.field(), lifted, a.dim());
    bool ok = lhs == rhs;
    all_hold = all_hold && ok;
    std::cout << "condensation identity n=" << n << ": " << (ok ? "holds" : "FAILS") << "\n";
  }
  return all_hold ? kExitOk : kExitInternal;
}

int cmd_blocks(const std::string& file) {
  Loaded in = load(file);
  BlockDecomposition dec = blocks(in.pa.algebra, in.pa.form);
  std::cout << "blocks: " << dec.idempotents.size() << "\n";
  for (size_t i = 0; i < dec.idempotents.size(); ++i) {
    std::cout << "block " << i << ": idempotent";
    for (const Scalar& c : dec.idempotents[i]) std::cout << " " << c.str();
    std::cout << " simple=" << (dec.simple_flags[i] ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& file, size_t n_opt, uint64_t budget) {
  Loaded in = load(file);
  const Algebra& a = in.pa.algebra;
  const SymForm& f = in.pa.form;
  if (enumeration_size(a, budget) == 0)
    throw TooLarge("|field|^dim exceeds the oracle budget");

  KulsChain chain = compute_chain(a, f);
  size_t upto = n_opt == 0 ? chain.n_stab : n_opt;
  bool all_pass = true;
  auto emit = [&](const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << what << "\n";
    all_pass = all_pass && ok;
  };

  Subspace za = centre(a);
  Subspace ka = commutator_space(a);
  emit("ZA = KA^perp", za == orth_complement(ka, f.gram));

  for (size_t n = 1; n <= upto; ++n) {
    std::vector<Element> brute = brute_t_space(a, static_cast<unsigned>(n), budget);
    Subspace brute_span = Subspace::row_span(a.field(), brute, a.dim());
    Subspace computed = t_space(a, static_cast<unsigned>(n));
    // The brute set is the full subspace pointwise, so spans must agree and
    // the set size must be |field|^dim(T_n).
    uint64_t expect = 1;
    for (size_t i = 0; i < computed.dim(); ++i) expect *= a.field()->order();
    emit("T_" + std::to_string(n) + " matches enumeration",
         brute_span == computed && brute.size() == expect);
    emit("zeta_" + std::to_string(n) + " equation",
         brute_zeta_check(a, f, static_cast<unsigned>(n), budget));
    const Subspace& tp = chain.t_perp_at(n);
    bool ideal = za.contains(tp);
    for (size_t zi = 0; zi < za.dim() && ideal; ++zi)
      for (size_t ti = 0; ti < tp.dim() && ideal; ++ti)
        ideal = tp.contains(a.multiply(za.basis().row(zi), tp.basis().row(ti)));
    emit("T_" + std::to_string(n) + "^perp ideal of ZA", ideal);
  }
  return all_pass ? kExitOk : kExitOracleFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kulshammer-ideal fingerprints of symmetric algebras over finite fields"};
  app.require_subcommand(1);

  std::string file, file_b, idem_text;
  size_t nmax = 0;
  bool machine = false;
  uint64_t budget = symkuls::kDefaultEnumBudget;
  size_t oracle_n = 0;

  auto* validate_cmd = app.add_subcommand("validate", "parse and validate an algebra file");
  validate_cmd->add_option("file", file)->required();

  auto* fp_cmd = app.add_subcommand("fingerprint", "compute the invariant fingerprint");
  fp_cmd->add_option("file", file)->required();
  fp_cmd->add_option("--nmax", nmax, "report T_n^perp dims up to this n");
  fp_cmd->add_flag("--machine", machine, "flat key=value output");

  auto* cmp_cmd = app.add_subcommand("compare", "compare two fingerprints");
  cmp_cmd->add_option("fileA", file)->required();
  cmp_cmd->add_option("fileB", file_b)->required();

  auto* cond_cmd = app.add_subcommand("condense", "condense by an idempotent and verify");
  cond_cmd->add_option("file", file)->required();
  cond_cmd->add_option("--idempotent", idem_text, "coordinates \"c0 c1 ...\"")->required();

  auto* blocks_cmd = app.add_subcommand("blocks", "central primitive idempotents and simplicity");
  blocks_cmd->add_option("file", file)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force verification by enumeration");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--n", oracle_n, "check up to this n (default: stabilization)");
  oracle_cmd->add_option("--budget", budget, "enumeration budget (elements)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : symkuls::kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file);
    if (fp_cmd->parsed()) return cmd_fingerprint(file, nmax, machine);
    if (cmp_cmd->parsed()) return cmd_compare(file, file_b);
    if (cond_cmd->parsed()) return cmd_condense(file, idem_text);
    if (blocks_cmd->parsed()) return cmd_blocks(file);
    if (oracle_cmd->parsed()) return cmd_oracle(file, oracle_n, budget);
  } catch (const std::exception& e) {
    const auto* err = dynamic_cast<const symkuls::Error*>(&e);
    std::cerr << "error: " << e.what();
    if (err) std::cerr << " [" << err->code() << "]";
    std::cerr << "\n";
    return map_error(e);
  }
  return symkuls::kExitUsage;
}
