#ifndef SYMKULS_REPORT_HPP
#define SYMKULS_REPORT_HPP

#include <string>
#include <vector>

#include "symkuls/invariants.hpp"
#include "symkuls/speclang.hpp"

namespace symkuls {

// Exit-code contract of the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitInvalidAlgebra = 2,
  kExitInvalidForm = 3,
  kExitFieldMismatch = 4,
  kExitNotIdempotent = 5,
  kExitTooLarge = 6,
  kExitOracleFail = 7,
  kExitDiffer = 10,
  kExitUsage = 64,
  kExitInternal = 70,
};

// Everything the fingerprint command prints: the invariant record plus the
// inclusion verdicts for the input's characteristic.
struct InvariantReport {
  std::string name;
  std::vector<unsigned> modulus;  // field modulus when k > 1
  Fingerprint fp;
  size_t nmax = 0;  // requested chain length; 0 means "up to stabilization"

  bool incl_z0_in_t1sq = false;
  bool incl_t1sq_in_ha = false;
  bool odd_equality = false;    // Z0 = (T1~)^2, checked when p odd
  bool p2_identities = false;   // Z0 = (T1~)^3 = T1~ * T2~, checked when p = 2
};

InvariantReport compute_report(const std::string& name, const Algebra& a, const SymForm& f,
                               size_t nmax = 0);

std::string report_text(const InvariantReport& r);
// One flat key=value line per datum under a versioned schema tag.
std::string report_machine(const InvariantReport& r);

// Fieldwise fingerprint diff. Entries that derived equivalences do not
// preserve (dim A, dim KA) are reported as context and excluded from the
// verdict.
struct CompareEntry {
  std::string key;
  std::string left, right;
  bool equal;
  bool compared;  // taken into the verdict
};
std::vector<CompareEntry> compare_fingerprints(const Fingerprint& a, const Fingerprint& b);

}  // namespace symkuls

#endif
