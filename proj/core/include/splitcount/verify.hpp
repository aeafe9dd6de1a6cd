#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace splitcount {

struct VerifyOptions {
  unsigned max_size = 6;    // largest ambient dimension n = m·d swept
  std::uint64_t max_q = 3;  // largest prime power evaluated
  // 0 means: derive a cap large enough for the requested sweep (never below
  // default_scale_limit()). A nonzero value is used verbatim and may make the
  // sweep infeasible (ScaleLimitError).
  std::uint64_t scale_limit = 0;
};

struct VerifyFailure {
  std::string type_text;  // class type in "DEG:P1,P2;..." form
  unsigned m = 0;
  unsigned d = 0;
  std::uint64_t q = 0;
  std::string check;  // which cross-check mismatched
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::uint64_t checks = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Cross-validate the symbolic counts against exhaustive enumeration: for
// every class type of size n ≤ max_size, every factorization n = m·d, and
// every prime power q ≤ max_q with q ≥ q0(tau), compare eval(σ-polynomial, q)
// with the brute-force subspace count of the canonical operator, and check
// that the derived probability lies in [0,1]. Progress lines go to *log when
// given.
VerifyReport run_verify(const VerifyOptions& options, std::ostream* log = nullptr);

}  // namespace splitcount
