#include "splitcount/verify.hpp"

#include <map>
#include <ostream>

#include "splitcount/classtype.hpp"
#include "splitcount/errors.hpp"
#include "splitcount/field.hpp"
#include "splitcount/lattice.hpp"
#include "splitcount/splitting.hpp"

namespace splitcount {

namespace {

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t max_q) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t q = 2; q <= max_q; ++q) {
    std::uint64_t p = 0;
    unsigned k = 0;
    if (is_prime_power(q, &p, &k)) result.push_back(q);
  }
  return result;
}

// Smallest cap that admits every enumeration the sweep will request: the
// enumeration metric q^n·[n k]_q maximized over the sweep's parameters.
std::uint64_t derived_scale_limit(unsigned max_size,
                                  const std::vector<std::uint64_t>& qs) {
  Int worst(static_cast<unsigned long>(default_scale_limit()));
  for (std::uint64_t q : qs) {
    const Int qi(static_cast<unsigned long>(q));
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q), max_size);
    for (unsigned k = 0; k <= max_size; ++k) {
      const Int metric = power * gaussian_binomial(max_size, k).eval(qi);
      if (metric > worst) worst = metric;
    }
  }
  if (!worst.fits_ulong_p()) throw ScaleLimitError("sweep too large for a 64-bit cap");
  return static_cast<std::uint64_t>(worst.get_ui());
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options, std::ostream* log) {
  if (options.max_size == 0) throw InvalidParamsError("max_size must be positive");
  if (options.max_q < 2) throw InvalidParamsError("max_q must be at least 2");

  const std::vector<std::uint64_t> qs = prime_powers_up_to(options.max_q);
  const std::uint64_t limit = options.scale_limit
                                  ? options.scale_limit
                                  : derived_scale_limit(options.max_size, qs);

  VerifyReport report;
  for (unsigned n = 1; n <= options.max_size; ++n) {
    std::vector<std::pair<unsigned, unsigned>> factorizations;
    for (unsigned m = 1; m <= n; ++m)
      if (n % m == 0) factorizations.emplace_back(m, n / m);

    const std::uint64_t size_start = report.checks;
    unsigned types_seen = 0;
    for (const ClassType& tau : class_types_of_size(n)) {
      const std::uint64_t least_q = q0(tau);
      if (least_q > options.max_q) continue;  // not realizable in this sweep
      ++types_seen;

      std::map<std::pair<unsigned, unsigned>, QPoly> polys;
      for (auto [m, d] : factorizations) polys.emplace(std::make_pair(m, d), sigma_poly(m, d, tau));

      for (std::uint64_t q : qs) {
        if (q < least_q) continue;
        const FieldPtr field = make_field_of_order(q);
        const Matrix op = canonical_operator(tau, field);
        const Int qi(static_cast<unsigned long>(q));
        for (auto [m, d] : factorizations) {
          const Int expected = polys.at({m, d}).eval(qi);
          const Int actual = brute_sigma(op, m, d, limit);
          ++report.checks;
          if (expected != actual)
            report.failures.push_back({tau.str(), m, d, q, "sigma",
                                       expected.get_str(), actual.get_str()});

          const Int gamma = gamma_poly(m).eval(qi);
          Int denom;
          mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(q),
                        static_cast<unsigned long>(m) * m * d);
          Rat prob(gamma * actual, denom);
          prob.canonicalize();
          ++report.checks;
          if (prob < 0 || prob > 1)
            report.failures.push_back({tau.str(), m, d, q, "kappa-range", "[0,1]",
                                       prob.get_str()});
        }
      }
    }
    if (log)
      *log << "size " << n << ": " << types_seen << " realizable types, "
           << (report.checks - size_start) << " checks, "
           << report.failures.size() << " total failures\n";
  }
  return report;
}

}  // namespace splitcount
