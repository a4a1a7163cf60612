// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "pushout/io.hpp"
#include "pushout/verify.hpp"

using namespace pushout;
using io::json;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path corpus = PUSHOUT_CORPUS;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct FamilyTally {
  std::size_t pass = 0, fail = 0, skip = 0;
  std::string first_failure;
};

FamilyTally tally(const std::vector<verify::CheckResult>& rs) {
  FamilyTally t;
  for (const auto& r : rs) {
    if (r.status == verify::Status::pass) ++t.pass;
    if (r.status == verify::Status::skip) ++t.skip;
    if (r.status == verify::Status::fail) {
      if (t.fail++ == 0) t.first_failure = r.instance + ": " + r.detail;
    }
  }
  return t;
}

std::string describe(const FamilyTally& t) {
  std::ostringstream s;
  s << t.pass << " pass, " << t.fail << " fail, " << t.skip << " skip";
  if (t.fail) s << "; first failure " << t.first_failure;
  return s.str();
}

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << n << "  " << what << "  (" << detail << ")\n";
}

// Runs `body`, turning an escaped exception into a FAIL line.
void criterion(int n, const std::string& what, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    report(n, ok, what, detail);
  } catch (const std::exception& e) {
    report(n, false, what, std::string("error: ") + e.what());
  }
}

// Only the push-out instances of the corpus, timed on their own.
struct PushoutRun {
  std::vector<verify::CheckResult> results;
  std::set<std::string> names;
  double seconds = 0;
};

PushoutRun run_pushouts() {
  PushoutRun run;
  io::Loader loader;
  json manifest = io::read_json(corpus / "manifest.json");
  const auto t0 = Clock::now();
  for (const auto& inst : manifest.at("instances")) {
    if (inst.at("kind") != "pushout") continue;
    const std::string name = inst.at("name");
    Envelope env = loader.envelope(corpus / inst.at("envelope").get<std::string>());
    Bimodule xb = loader.bimodule(corpus / inst.at("module").get<std::string>());
    std::vector<Derivation> extra;
    std::vector<std::string> expect;
    for (const auto& d : inst.value("derivations", json::array())) {
      extra.push_back(loader.derivation(corpus / d.at("doc").get<std::string>()));
      expect.push_back(d.value("pullback", ""));
    }
    auto rs = verify::check_pushout(name, env, xb, extra, expect);
    run.results.insert(run.results.end(), rs.begin(), rs.end());
    run.names.insert(name);
  }
  run.seconds = seconds_since(t0);
  return run;
}

std::vector<verify::CheckResult> only(const std::vector<verify::CheckResult>& rs, const char* check) {
  std::vector<verify::CheckResult> out;
  for (const auto& r : rs)
    if (r.check == check) out.push_back(r);
  return out;
}

}  // namespace

int main() {
  std::cout << "corpus " << corpus.string() << '\n';

  PushoutRun po;
  try {
    po = run_pushouts();
  } catch (const std::exception& e) {
    std::cout << "error loading push-out instances: " << e.what() << '\n';
  }

  criterion(1, "push-out D~ is centralizer-valued, a derivation over B and commutes with iota", [&] {
    FamilyTally t = tally(only(po.results, verify::kPushout));
    bool named = po.names.count("pushout_M2_identity") && po.names.count("pushout_N3_in_T3") &&
                 po.names.count("pushout_N2_in_N2+");
    std::ostringstream d;
    d << describe(t) << ", " << po.seconds << " s";
    return std::pair{named && t.pass > 0 && t.fail == 0 && po.seconds < 5.0, d.str()};
  });

  criterion(2, "uniqueness of D~ and inner pull-back D = S - T when span(A^2) = A", [&] {
    FamilyTally t = tally(only(po.results, verify::kUniqueness));
    return std::pair{t.pass > 0 && t.fail == 0, describe(t)};
  });

  const auto t_verify = Clock::now();
  verify::Report first = verify::verify_corpus(corpus);
  const double verify_seconds = seconds_since(t_verify);
  std::cout << "verify: " << first.instances << " instances, " << first.results.size() << " checks, "
            << verify_seconds << " s\n";

  criterion(3, "predual: N in ker mu, factorization, dual isomorphism, injective <=> surjective", [&] {
    FamilyTally t = tally(first.family(verify::kPredual));
    return std::pair{t.pass > 0 && t.fail == 0 && t.skip == 0, describe(t)};
  });

  criterion(4, "induced modules: dual iota bijective and ker mu in N", [&] {
    FamilyTally t = tally(first.family(verify::kInducedDual));
    return std::pair{t.pass > 0 && t.fail == 0, describe(t)};
  });

  criterion(5, "annihilator-free quotient: bounded steps, trivial annihilator, idempotent", [&] {
    FamilyTally t = tally(first.family(verify::kAnnihilator));
    return std::pair{t.pass > 0 && t.fail == 0 && t.skip == 0, describe(t)};
  });

  criterion(6, "universal property: j_hat exists, factors iota and is unique", [&] {
    FamilyTally t = tally(first.family(verify::kUniversal));
    return std::pair{t.pass > 0 && t.fail == 0, describe(t)};
  });

  criterion(7, "H1 regression table, library solve and entrywise oracle", [&] {
    struct Row {
      const char* file;
      std::size_t z1, b1, h1;
    };
    const Row table[] = {{"k_regular", 0, 0, 0}, {"N2_regular", 1, 0, 1}, {"M2_regular", 3, 3, 0}};
    const auto t0 = Clock::now();
    io::Loader loader;
    bool ok = true;
    std::ostringstream d;
    for (const Row& row : table) {
      Bimodule x = loader.bimodule(corpus / "modules" / (std::string(row.file) + ".json"));
      H1Dims lib = h1(x.alg(), x);
      oracle::Raw w = oracle::raw(x);
      const std::size_t oz = oracle::z1_dim(w), ob = oracle::b1_dim(w);
      const std::size_t inner_rank = rank(inner_map(x));
      const bool match = lib == H1Dims{row.z1, row.b1, row.h1} && oz == row.z1 && ob == row.b1 &&
                         inner_rank == row.b1;
      ok = ok && match;
      d << row.file << "=(" << lib.z1 << "," << lib.b1 << "," << lib.h1 << ")/oracle(" << oz << "," << ob << ") ";
    }
    const double s = seconds_since(t0);
    d << s << " s";
    return std::pair{ok && s < 2.0, d.str()};
  });

  criterion(8, "scenario instances: commutative D~ = 0 forces D = 0, inner D~ gives D = S - T", [&] {
    FamilyTally wa = tally(first.family(verify::kWeakAmenability));
    FamilyTally sf = tally(first.family(verify::kSegalForm));
    return std::pair{wa.pass > 0 && wa.fail == 0 && sf.pass > 0 && sf.fail == 0,
                     "weak amenability " + describe(wa) + "; segal form " + describe(sf)};
  });

  criterion(9, "verify --json output is byte-identical across runs", [&] {
    verify::Report second = verify::verify_corpus(corpus);
    const std::string a = verify::to_json(first).dump(2), b = verify::to_json(second).dump(2);
    return std::pair{a == b && first.ok(), std::to_string(a.size()) + " bytes, corpus ok=" + (first.ok() ? "1" : "0")};
  });

  return failures == 0 ? 0 : 1;
}
