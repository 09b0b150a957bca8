#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gencheb {

struct VerificationFailure {
  std::string case_name;
  std::string expected;
  std::string actual;
};

/// Outcome of one verification suite. Zero failures is the only passing state.
struct VerificationReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<VerificationFailure> failures;
  double millis = 0.0;
  /// Per-suite breakdown when this report aggregates several suites.
  std::vector<VerificationReport> parts;

  bool ok() const { return failures.empty(); }

  /// Counts one case and records a failure when `passed` is false.
  void check(bool passed, const std::string& case_name, const std::string& expected, const std::string& actual);

  /// Folds `other` into this report, prefixing its case names with its suite.
  void absorb(const VerificationReport& other);
};

struct VerifyOptions {
  long nmax = 24;
  std::uint64_t seed = 1;
  double tol = 1e-12;
  /// Random units / matrices per randomized family.
  std::size_t samples = 20;
};

VerificationReport verify_gcn(const VerifyOptions& options);
VerificationReport verify_euler(const VerifyOptions& options);
VerificationReport verify_cheb(const VerifyOptions& options);
VerificationReport verify_mat(const VerifyOptions& options);
VerificationReport verify_u2(const VerifyOptions& options);
/// All of the above, merged in a fixed order.
VerificationReport verify_all(const VerifyOptions& options);

/// {schema: 1, suite, cases, failures: [{case, expected, actual}], millis[, suites]}.
nlohmann::json to_json(const VerificationReport& report, bool with_timing);

}  // namespace gencheb
