#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "pushout/io.hpp"

namespace pushout::verify {

enum class Status { pass, fail, skip };
std::string to_string(Status s);

struct CheckResult {
  std::string instance;
  std::string check;
  Status status = Status::fail;
  std::string detail;
};

struct Tally {
  std::size_t pass = 0, fail = 0, skip = 0;
};

struct Report {
  std::size_t instances = 0;
  std::vector<CheckResult> results;
  std::vector<std::string> warnings;

  bool ok() const;
  /// Per check family, in first-seen order.
  std::vector<std::pair<std::string, Tally>> summary() const;
  /// Results for one check family, in corpus order.
  std::vector<CheckResult> family(const std::string& check) const;
};

/// Check family names, stable across releases.
inline constexpr const char* kLoad = "load";
inline constexpr const char* kH1 = "h1";
inline constexpr const char* kPushout = "pushout";
inline constexpr const char* kUniqueness = "pushout-uniqueness";
inline constexpr const char* kPredual = "predual";
inline constexpr const char* kInducedDual = "induced-dual";
inline constexpr const char* kAnnihilator = "annihilator-quotient";
inline constexpr const char* kUniversal = "universal-property";
inline constexpr const char* kRegression = "regression";
inline constexpr const char* kAmenableIdeal = "scenario:amenable-ideal";
inline constexpr const char* kWeakAmenability = "scenario:commutative-weak-amenability";
inline constexpr const char* kSegalForm = "scenario:segal-form";
inline constexpr const char* kSelfInduced = "scenario:self-induced-ideal";

/// Checks for one (A, X) pair. Every module instance runs these.
std::vector<CheckResult> check_module(const std::string& name, const Bimodule& x);

/// Push-out checks for every Z^1 basis derivation plus the listed ones.
/// expected_pullback[i] is "present", "absent" or empty for extra[i].
std::vector<CheckResult> check_pushout(const std::string& name, const Envelope& env, const Bimodule& x_as_b,
                                       const std::vector<Derivation>& extra,
                                       const std::vector<std::string>& expected_pullback);

std::vector<CheckResult> check_universal(const std::string& name, const Bimodule& x, const Matrix& j,
                                         const Bimodule& x_tilde);

/// scenario is one of amenable-ideal, commutative-weak-amenability,
/// segal-form, self-induced-ideal.
std::vector<CheckResult> check_scenario(const std::string& name, const std::string& scenario,
                                        const Envelope& env, const Bimodule& x_as_b);

/// Reads <dir>/manifest.json and runs every instance. A missing or empty
/// manifest yields zero instances and a warning.
Report verify_corpus(const std::filesystem::path& dir);

io::json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace pushout::verify
