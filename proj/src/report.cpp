#include "symkuls/report.hpp"

#include <sstream>

namespace symkuls {

namespace {

std::string dims_list(const std::vector<size_t>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

InvariantReport compute_report(const std::string& name, const Algebra& a, const SymForm& f,
                               size_t nmax) {
  InvariantReport r;
  r.name = name;
  for (uint16_t c : a.field()->modulus()) r.modulus.push_back(c);
  r.nmax = nmax;
  r.fp = fingerprint(a, f);

  KulsChain chain = compute_chain(a, f);
  Subspace z0_space = z0(a, f, blocks(a, f));
  Subspace ha = higman_ideal(a, f);
  const Subspace& t1p = chain.t_perp_at(1);
  Subspace t1sq = ideal_product(a, t1p, t1p);
  r.incl_z0_in_t1sq = t1sq.contains(z0_space);
  r.incl_t1sq_in_ha = ha.contains(t1sq);
  if (a.field()->p() == 2) {
    Subspace t1cube = ideal_product(a, t1p, t1sq);
    Subspace t1t2 = ideal_product(a, t1p, chain.t_perp_at(2));
    r.p2_identities = (z0_space == t1cube) && (z0_space == t1t2);
  } else {
    r.odd_equality = (z0_space == t1sq);
  }
  return r;
}

std::string report_text(const InvariantReport& r) {
  std::ostringstream os;
  const Fingerprint& fp = r.fp;
  os << "algebra: " << r.name << "\n";
  os << "field: p=" << fp.p << " k=" << fp.k;
  if (fp.k > 1) {
    os << " modulus=";
    for (size_t i = 0; i < r.modulus.size(); ++i) {
      if (i) os << ",";
      os << r.modulus[i];
    }
  }
  os << "\n";
  os << "dim A: " << fp.dim_a << "\n";
  os << "dim ZA: " << fp.dim_za << "\n";
  os << "dim KA: " << fp.dim_ka << "\n";
  os << "chain: stabilizes at n=" << fp.n_stab << "\n";
  size_t upto = std::max(r.nmax, fp.n_stab);
  std::vector<size_t> perps;
  for (size_t n = 1; n <= upto; ++n)
    perps.push_back(fp.perp_dims[std::min(n, fp.n_stab) - 1]);
  os << "perp dims (n=1.." << upto << "): " << dims_list(perps);
  if (upto > fp.n_stab) os << "  (values past n=" << fp.n_stab << " repeat the stabilized value)";
  os << "\n";
  os << "Higman ideal dim: " << fp.dim_ha << "\n";
  os << "Reynolds ideal dim: " << fp.dim_reynolds << "\n";
  os << "Z0 dim: " << fp.dim_z0 << "\n";
  os << "perp products:";
  for (size_t i = 0; i < fp.product_dims.size(); ++i)
    for (size_t j = 0; j < fp.product_dims.size(); ++j)
      os << " (" << i + 1 << "," << j + 1 << ")=" << fp.product_dims[i][j];
  os << "\n";
  os << "T1perp powers: " << fp.t1_power_dims[0] << " " << fp.t1_power_dims[1] << " "
     << fp.t1_power_dims[2] << "\n";
  os << "inclusion Z0 <= (T1perp)^2: " << (r.incl_z0_in_t1sq ? "holds" : "FAILS") << "\n";
  os << "inclusion (T1perp)^2 <= HA: " << (r.incl_t1sq_in_ha ? "holds" : "FAILS") << "\n";
  if (fp.p == 2)
    os << "p=2 identities Z0 = (T1perp)^3 = T1perp*T2perp: "
       << (r.p2_identities ? "hold" : "FAIL") << "\n";
  else
    os << "odd-p equality Z0 = (T1perp)^2: " << (r.odd_equality ? "holds" : "FAILS") << "\n";
  return os.str();
}

std::string report_machine(const InvariantReport& r) {
  std::ostringstream os;
  const Fingerprint& fp = r.fp;
  os << "schema=symkuls.report.v1\n";
  os << "name=" << r.name << "\n";
  os << "field.p=" << fp.p << "\n";
  os << "field.k=" << fp.k << "\n";
  if (fp.k > 1) {
    os << "field.modulus=";
    for (size_t i = 0; i < r.modulus.size(); ++i) {
      if (i) os << ",";
      os << r.modulus[i];
    }
    os << "\n";
  }
  os << "dim.a=" << fp.dim_a << "\n";
  os << "dim.za=" << fp.dim_za << "\n";
  os << "dim.ka=" << fp.dim_ka << "\n";
  os << "chain.nstab=" << fp.n_stab << "\n";
  size_t upto = std::max(r.nmax, fp.n_stab);
  for (size_t n = 1; n <= upto; ++n)
    os << "perp." << n << "=" << fp.perp_dims[std::min(n, fp.n_stab) - 1] << "\n";
  if (upto > fp.n_stab) os << "chain.note=stabilized\n";
  os << "ha.dim=" << fp.dim_ha << "\n";
  os << "reynolds.dim=" << fp.dim_reynolds << "\n";
  os << "z0.dim=" << fp.dim_z0 << "\n";
  for (size_t i = 0; i < fp.product_dims.size(); ++i)
    for (size_t j = 0; j < fp.product_dims.size(); ++j)
      os << "product." << i + 1 << "." << j + 1 << "=" << fp.product_dims[i][j] << "\n";
  for (size_t m = 0; m < 3; ++m)
    os << "power.t1perp." << m + 1 << "=" << fp.t1_power_dims[m] << "\n";
  os << "verdict.z0_in_t1sq=" << (r.incl_z0_in_t1sq ? "holds" : "fails") << "\n";
  os << "verdict.t1sq_in_ha=" << (r.incl_t1sq_in_ha ? "holds" : "fails") << "\n";
  if (fp.p == 2)
    os << "verdict.p2_identities=" << (r.p2_identities ? "holds" : "fails") << "\n";
  else
    os << "verdict.odd_equality=" << (r.odd_equality ? "holds" : "fails") << "\n";
  return os.str();
}

std::vector<CompareEntry> compare_fingerprints(const Fingerprint& a, const Fingerprint& b) {
  std::vector<CompareEntry> out;
  auto push = [&](const std::string& key, size_t va, size_t vb, bool compared) {
    out.push_back({key, std::to_string(va), std::to_string(vb), va == vb, compared});
  };
  push("field.p", a.p, b.p, true);
  push("field.k", a.k, b.k, true);
  push("dim.a", a.dim_a, b.dim_a, false);
  push("dim.ka", a.dim_ka, b.dim_ka, false);
  push("dim.za", a.dim_za, b.dim_za, true);
  push("chain.nstab", a.n_stab, b.n_stab, true);
  size_t nmax = std::max(a.perp_dims.size(), b.perp_dims.size());
  for (size_t n = 1; n <= nmax; ++n) {
    size_t va = a.perp_dims[std::min(n, a.perp_dims.size()) - 1];
    size_t vb = b.perp_dims[std::min(n, b.perp_dims.size()) - 1];
    push("perp." + std::to_string(n), va, vb, true);
  }
  push("ha.dim", a.dim_ha, b.dim_ha, true);
  push("reynolds.dim", a.dim_reynolds, b.dim_reynolds, true);
  push("z0.dim", a.dim_z0, b.dim_z0, true);
  size_t np = std::max(a.product_dims.size(), b.product_dims.size());
  for (size_t i = 0; i < np; ++i)
    for (size_t j = 0; j < np; ++j) {
      auto get = [&](const Fingerprint& f) {
        size_t ii = std::min(i, f.product_dims.size() - 1);
        size_t jj = std::min(j, f.product_dims.size() - 1);
        return f.product_dims.empty() ? size_t(0) : f.product_dims[ii][jj];
      };
      push("product." + std::to_string(i + 1) + "." + std::to_string(j + 1), get(a), get(b), true);
    }
  for (size_t m = 0; m < 3; ++m)
    push("power.t1perp." + std::to_string(m + 1), a.t1_power_dims[m], b.t1_power_dims[m], true);
  return out;
}

}  // namespace symkuls
