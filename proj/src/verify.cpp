#include "pushout/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "pushout/duality.hpp"

namespace pushout::verify {

namespace fs = std::filesystem;
using io::json;

namespace {

CheckResult result(const std::string& instance, const std::string& check, bool ok, std::string detail) {
  return CheckResult{instance, check, ok ? Status::pass : Status::fail, std::move(detail)};
}

CheckResult skipped(const std::string& instance, const std::string& check, std::string detail) {
  return CheckResult{instance, check, Status::skip, std::move(detail)};
}

// Runs one check body, turning any library exception into a FAIL line
// that carries the message.
template <class F>
void guarded(std::vector<CheckResult>& out, const std::string& instance, const std::string& check, F&& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    out.push_back(result(instance, check, false, std::string("error: ") + e.what()));
  }
}

std::vector<Derivation> basis_derivations(const AlgebraPtr& a, const Bimodule& x) {
  std::vector<Derivation> out;
  const Subspace z1 = derivation_space(a, x);
  for (const auto& v : z1.basis())
    out.emplace_back(x, Matrix::unvec(x.dim(), a->dim(), v));
  return out;
}

bool spans_itself(const Algebra& a) { return square_span(a).dim() == a.dim(); }

// ker(A (x) A -> A) with B acting on the outer factors.
Bimodule multiplication_kernel(const Envelope& env) {
  const Algebra& a = *env.sub();
  const std::size_t n = a.dim();
  Matrix mult(n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) mult.set_column(u * n + v, a.basis_product(u, v));
  const Matrix id = Matrix::identity(n);
  std::vector<Matrix> left, right;
  for (std::size_t b = 0; b < env.amb()->dim(); ++b) {
    left.push_back(kronecker(env.left_on_sub(b), id));
    right.push_back(kronecker(id, env.right_on_sub(b)));
  }
  return submodule(env.amb(), left, right, kernel(mult));
}

std::string dims(const H1Dims& h) {
  std::ostringstream s;
  s << "z1=" << h.z1 << " b1=" << h.b1 << " h1=" << h.h1;
  return s.str();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "FAIL";
}

bool Report::ok() const {
  for (const auto& r : results)
    if (r.status == Status::fail) return false;
  return true;
}

std::vector<std::pair<std::string, Tally>> Report::summary() const {
  std::vector<std::pair<std::string, Tally>> out;
  for (const auto& r : results) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == r.check; });
    if (it == out.end()) it = out.insert(out.end(), {r.check, Tally{}});
    Tally& t = it->second;
    (r.status == Status::pass ? t.pass : r.status == Status::fail ? t.fail : t.skip) += 1;
  }
  return out;
}

std::vector<CheckResult> Report::family(const std::string& check) const {
  std::vector<CheckResult> out;
  for (const auto& r : results)
    if (r.check == check) out.push_back(r);
  return out;
}

std::vector<CheckResult> check_module(const std::string& name, const Bimodule& x) {
  const AlgebraPtr& a = x.alg();
  std::vector<CheckResult> out;

  guarded(out, name, kH1, [&] {
    H1Dims h = h1(a, x);
    bool ok = rank(inner_map(x)) == h.b1;
    const Subspace z1 = derivation_space(a, x);
    for (const auto& v : z1.basis())
      ok = ok && satisfies_derivation_rule(*a, x, Matrix::unvec(x.dim(), a->dim(), v));
    return result(name, kH1, ok, dims(h));
  });

  std::optional<PredualData> predual;
  std::optional<CentralizerModule> dc_dual;
  guarded(out, name, kPredual, [&] {
    predual = build_predual(a, x);  // throws unless N lies in ker mu
    dc_dual = double_centralizer(a, dual_module(x));
    DualIsoReport iso = dual_iso(*predual, *dc_dual);
    bool fact = factorization_check(*predual, *dc_dual);
    bool inj = injectivity_surjectivity(*predual, *dc_dual).holds();
    bool htd = hom_tensor_duality_check(a, x);
    bool n_in_ker = true;
    for (const Vector& v : predual->n_sub.basis()) n_in_ker = n_in_ker && is_zero(predual->mu.apply(v));
    std::ostringstream d;
    d << "N in ker mu=" << n_in_ker << " dim DC(X*)=" << iso.centralizer_dim << " dim quotient=" << iso.quotient_dim << " iso="
      << iso.holds() << " factorization=" << fact << " inj<=>surj=" << inj << " hom-tensor=" << htd;
    return result(name, kPredual, n_in_ker && iso.holds() && fact && inj && htd, d.str());
  });

  guarded(out, name, kInducedDual, [&] {
    if (!is_induced(x).induced) return skipped(name, kInducedDual, "not induced");
    if (!predual) return result(name, kInducedDual, false, "predual construction failed");
    bool bij = is_bijective(iota(*dc_dual));
    bool ker = kernel_mu_in_n(*predual);
    return result(name, kInducedDual, bij && ker,
                  std::string("iota bijective=") + (bij ? "1" : "0") + " ker mu in N=" + (ker ? "1" : "0"));
  });

  guarded(out, name, kAnnihilator, [&] {
    bool ok = true;
    std::ostringstream d;
    for (Side side : {Side::left, Side::right, Side::two_sided}) {
      AnnihilatorFreeQuotient q = annihilator_free_quotient(x, side);
      Annihilators ann = annihilators(q.quotient);
      const Subspace& trivial = side == Side::left ? ann.left : side == Side::right ? ann.right : ann.both;
      bool again = annihilator_free_quotient(q.quotient, side).n.dim() == 0;
      ok = ok && q.steps() <= x.dim() && trivial.dim() == 0 && again;
      d << to_string(side) << ":steps=" << q.steps() << ",dim N=" << q.n.dim() << " ";
    }
    std::string text = d.str();
    text.pop_back();
    return result(name, kAnnihilator, ok, text);
  });

  guarded(out, name, kUniversal, [&] {
    if (annihilators(x).both.dim() != 0) return skipped(name, kUniversal, "annihilator nonzero");
    CentralizerModule dc = double_centralizer(a, x);
    UniversalMap into_dc = universal_map(a, x, iota(dc), dc.a_module());
    // X (+) Q with zero action on the extra line.
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < a->dim(); ++i) {
      left.push_back(direct_sum(x.left(i), Matrix(1, 1)));
      right.push_back(direct_sum(x.right(i), Matrix(1, 1)));
    }
    Bimodule padded(a, x.dim() + 1, std::move(left), std::move(right));
    Matrix j = vstack({Matrix::identity(x.dim()), Matrix(1, x.dim())});
    UniversalMap into_padded = universal_map(a, x, j, padded);
    bool ok = into_dc.factors && into_dc.unique && into_padded.factors && into_padded.unique;
    std::ostringstream d;
    d << "X~=DC(X) dim " << dc.dim() << ", X~=X+Q dim " << padded.dim();
    return result(name, kUniversal, ok, d.str());
  });

  return out;
}

std::vector<CheckResult> check_pushout(const std::string& name, const Envelope& env, const Bimodule& x_as_b,
                                       const std::vector<Derivation>& extra,
                                       const std::vector<std::string>& expected_pullback) {
  std::vector<CheckResult> out;
  const Bimodule x = restrict_module(x_as_b, env);
  std::vector<Derivation> all = basis_derivations(env.sub(), x);
  const std::size_t basis_count = all.size();
  all.insert(all.end(), extra.begin(), extra.end());

  guarded(out, name, kPushout, [&] {
    std::size_t good = 0;
    const std::size_t dc_dim = double_centralizer(env.sub(), x).dim();
    for (const auto& d : all)
      if (push_out(env, x_as_b, d).ok()) ++good;
    std::ostringstream s;
    s << good << "/" << all.size() << " derivations satisfy all identities, dim DC(X)=" << dc_dim;
    return result(name, kPushout, good == all.size(), s.str());
  });

  guarded(out, name, kUniqueness, [&] {
    if (!spans_itself(*env.sub())) return skipped(name, kUniqueness, "span(A^2) != A");
    std::size_t unique = 0, inner = 0;
    bool expectations = true;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (pushout_unique(env, x_as_b, all[k])) ++unique;
      bool present = pull_back_inner(env, x_as_b, all[k]).has_value();  // verifies D = S - T
      if (present) ++inner;
      if (k >= basis_count) {
        const std::string& want = expected_pullback[k - basis_count];
        if ((want == "present" && !present) || (want == "absent" && present)) expectations = false;
      }
    }
    std::ostringstream s;
    s << unique << "/" << all.size() << " unique, " << inner << " with inner D~ (D = S - T verified)";
    if (!expectations) s << ", pull-back expectation violated";
    return result(name, kUniqueness, unique == all.size() && expectations, s.str());
  });

  return out;
}

std::vector<CheckResult> check_universal(const std::string& name, const Bimodule& x, const Matrix& j,
                                         const Bimodule& x_tilde) {
  std::vector<CheckResult> out;
  guarded(out, name, kUniversal, [&] {
    UniversalMap u = universal_map(x.alg(), x, j, x_tilde);
    std::ostringstream s;
    s << "factors=" << u.factors << " solution space dim=" << u.solution_space_dim;
    return result(name, kUniversal, u.factors && u.unique, s.str());
  });
  return out;
}

namespace {

CheckResult amenable_ideal(const std::string& name, const Envelope& env, const Bimodule& x_as_b) {
  const char* check = kAmenableIdeal;
  const Bimodule x = restrict_module(x_as_b, env);
  if (!is_induced(x).induced) return result(name, check, false, "precondition: module is not induced over A");
  const Bimodule dual_b = dual_module(x_as_b);
  const Bimodule dual_a = restrict_module(dual_b, env);
  CentralizerModule dc = attach_envelope_actions(double_centralizer(env.sub(), dual_a), env, dual_b);
  H1Dims hb = h1(env.amb(), *dc.b_module());
  bool bijective = is_bijective(iota(dc));
  std::size_t inner = 0;
  auto ds = basis_derivations(env.sub(), dual_a);
  for (const auto& d : ds)
    if (pull_back_inner(env, dual_b, d)) ++inner;
  H1Dims ha = h1(env.sub(), dual_a);
  std::ostringstream s;
  s << "H1(B,DC(X*))=" << hb.h1 << " iota_X* bijective=" << bijective << " inner pull-backs " << inner << "/"
    << ds.size() << " H1(A,X*)=" << ha.h1;
  return result(name, check, hb.h1 == 0 && bijective && inner == ds.size() && ha.h1 == 0, s.str());
}

CheckResult weak_amenability(const std::string& name, const Envelope& env) {
  const char* check = kWeakAmenability;
  const Algebra& a = *env.sub();
  const Algebra& b = *env.amb();
  if (!a.is_commutative() || !b.is_commutative())
    return result(name, check, false, "precondition: A and B must be commutative");
  if (!spans_itself(a)) return result(name, check, false, "precondition: span(A^2) != A");
  const Bimodule dual_b = dual_module(ideal_module(env));  // A* over B
  const Bimodule dual_a = restrict_module(dual_b, env);
  CentralizerModule dc = attach_envelope_actions(double_centralizer(env.sub(), dual_a), env, dual_b);
  const bool symmetric = dc.b_module()->is_symmetric();
  const bool injective = kernel(iota(dc)).dim() == 0;
  const bool b_weakly_amenable = h1(env.amb(), dual_module(regular_module(env.amb()))).h1 == 0;

  bool implication = true;
  std::size_t zero_tilde = 0;
  auto ds = basis_derivations(env.sub(), dual_a);
  for (const auto& d : ds) {
    PushoutResult po = push_out(env, dual_b, d);
    if (!po.ok()) implication = false;
    if (po.d_tilde.is_zero()) {
      ++zero_tilde;
      if (!d.map().is_zero()) implication = false;
    }
  }
  // With B weakly amenable every D~ vanishes, so A inherits Z1(A, A*) = 0.
  const bool inherited = !b_weakly_amenable || ds.empty();
  std::ostringstream s;
  s << "DC(A*) symmetric=" << symmetric << " iota injective=" << injective
    << " B weakly amenable=" << b_weakly_amenable << " D~=0 for " << zero_tilde << "/" << ds.size();
  return result(name, check, symmetric && injective && implication && inherited, s.str());
}

CheckResult segal_form(const std::string& name, const Envelope& env, const Bimodule& x_as_b) {
  const char* check = kSegalForm;
  if (!spans_itself(*env.sub())) return result(name, check, false, "precondition: span(A^2) != A");
  const Bimodule dual_b = dual_module(x_as_b);
  const Bimodule dual_a = restrict_module(dual_b, env);
  CentralizerModule dc = attach_envelope_actions(double_centralizer(env.sub(), dual_a), env, dual_b);
  H1Dims hb = h1(env.amb(), *dc.b_module());
  std::size_t of_form = 0;
  auto ds = basis_derivations(env.sub(), dual_a);
  for (const auto& d : ds)
    if (pull_back_inner(env, dual_b, d)) ++of_form;  // throws if D != S - T
  std::ostringstream s;
  s << "H1(B,DC(X*))=" << hb.h1 << " D = S - T for " << of_form << "/" << ds.size();
  return result(name, check, hb.h1 == 0 && of_form == ds.size(), s.str());
}

CheckResult self_induced_ideal(const std::string& name, const Envelope& env) {
  const char* check = kSelfInduced;
  const AlgebraPtr& a = env.sub();
  const bool self_induced = is_self_induced(a);
  const Bimodule k_b = multiplication_kernel(env);
  const Bimodule k_a = restrict_module(k_b, env);
  CentralizerModule dc = attach_envelope_actions(double_centralizer(a, k_a), env, k_b);
  const Bimodule& dc_b = *dc.b_module();
  const Bimodule& dc_a = dc.a_module();
  CentralizerModule dc2 = double_centralizer(a, dc_a);
  const bool iso = is_bijective(iota(dc2));
  const H1Dims hb = h1(env.amb(), dc_b);

  // Every D: A -> DC(X) pushes out to B -> DC(DC(X)); B kills its H1, so D is inner.
  std::size_t inner = 0;
  auto ds = basis_derivations(a, dc_a);
  if (iso)
    for (const auto& d : ds)
      if (pull_back_inner(env, dc_b, d)) ++inner;
  const H1Dims ha = h1(a, dc_a);
  std::ostringstream s;
  s << "self-induced=" << self_induced << " dim X=" << k_a.dim() << " dim DC(X)=" << dc.dim()
    << " iota_DC(X) bijective=" << iso << " H1(B,DC(X))=" << hb.h1 << " inner " << inner << "/" << ds.size()
    << " H1(A,DC(X))=" << ha.h1;
  return result(name, check, self_induced && iso && hb.h1 == 0 && inner == ds.size() && ha.h1 == 0, s.str());
}

}  // namespace

std::vector<CheckResult> check_scenario(const std::string& name, const std::string& scenario,
                                        const Envelope& env, const Bimodule& x_as_b) {
  std::vector<CheckResult> out;
  if (scenario == "amenable-ideal")
    guarded(out, name, kAmenableIdeal, [&] { return amenable_ideal(name, env, x_as_b); });
  else if (scenario == "commutative-weak-amenability")
    guarded(out, name, kWeakAmenability, [&] { return weak_amenability(name, env); });
  else if (scenario == "segal-form")
    guarded(out, name, kSegalForm, [&] { return segal_form(name, env, x_as_b); });
  else if (scenario == "self-induced-ideal")
    guarded(out, name, kSelfInduced, [&] { return self_induced_ideal(name, env); });
  else
    out.push_back(result(name, "scenario:" + scenario, false, "unknown scenario"));
  return out;
}

namespace {

std::string text_field(const json& inst, const char* key) {
  auto it = inst.find(key);
  if (it == inst.end() || !it->is_string())
    throw ParseError(std::string("manifest: instance field \"") + key + "\" must be a string");
  return it->get<std::string>();
}

std::vector<CheckResult> regression(const std::string& name, const Bimodule& x, const json& expected) {
  std::vector<CheckResult> out;
  guarded(out, name, kRegression, [&] {
    std::ostringstream s;
    bool ok = true;
    if (expected.contains("h1")) {
      H1Dims h = h1(x.alg(), x);
      const json& e = expected["h1"];
      bool match = e.size() == 3 && e[0] == h.z1 && e[1] == h.b1 && e[2] == h.h1;
      ok = ok && match;
      s << dims(h) << (match ? "" : " (expected " + e.dump() + ")") << " ";
    }
    if (expected.contains("centralizer_dim")) {
      std::size_t d = double_centralizer(x.alg(), x).dim();
      bool match = expected["centralizer_dim"] == d;
      ok = ok && match;
      s << "dim DC=" << d << (match ? "" : " (expected " + expected["centralizer_dim"].dump() + ")") << " ";
    }
    if (expected.contains("induced")) {
      bool v = is_induced(x).induced;
      bool match = expected["induced"] == v;
      ok = ok && match;
      s << "induced=" << v << (match ? "" : " (mismatch)") << " ";
    }
    if (expected.contains("self_induced")) {
      bool v = is_self_induced(x.alg());
      bool match = expected["self_induced"] == v;
      ok = ok && match;
      s << "self-induced=" << v << (match ? "" : " (mismatch)") << " ";
    }
    std::string text = s.str();
    if (!text.empty()) text.pop_back();
    return result(name, kRegression, ok, text);
  });
  return out;
}

void run_instance(Report& report, io::Loader& loader, const fs::path& dir, const json& inst) {
  std::string name = inst.is_object() && inst.contains("name") && inst["name"].is_string()
                         ? inst["name"].get<std::string>()
                         : "#" + std::to_string(report.instances);
  auto add = [&](std::vector<CheckResult> rs) {
    report.results.insert(report.results.end(), std::make_move_iterator(rs.begin()),
                          std::make_move_iterator(rs.end()));
  };
  try {
    const std::string kind = text_field(inst, "kind");
    if (kind == "module") {
      Bimodule x = loader.bimodule(dir / text_field(inst, "module"));
      add(check_module(name, x));
      if (inst.contains("expected")) add(regression(name, x, inst["expected"]));
    } else if (kind == "pushout") {
      Envelope env = loader.envelope(dir / text_field(inst, "envelope"));
      Bimodule x_b = loader.bimodule(dir / text_field(inst, "module"));
      std::vector<Derivation> extra;
      std::vector<std::string> expect;
      for (const auto& entry : inst.value("derivations", json::array())) {
        extra.push_back(loader.derivation(dir / text_field(entry, "doc")));
        expect.push_back(entry.value("pullback", ""));
      }
      add(check_pushout(name, env, x_b, extra, expect));
    } else if (kind == "universal") {
      Bimodule x = loader.bimodule(dir / text_field(inst, "module"));
      Bimodule x_tilde = loader.bimodule(dir / text_field(inst, "x_tilde"));
      if (!inst.contains("j")) throw ParseError("manifest: universal instance needs \"j\"");
      Matrix j = io::matrix_from_json(inst["j"], name + ".j");
      add(check_universal(name, x, j, x_tilde));
    } else if (kind == "scenario") {
      Envelope env = loader.envelope(dir / text_field(inst, "envelope"));
      Bimodule x_b = inst.contains("module") ? loader.bimodule(dir / text_field(inst, "module"))
                                             : regular_module(env.amb());
      add(check_scenario(name, text_field(inst, "scenario"), env, x_b));
    } else {
      throw ParseError("manifest: unknown instance kind \"" + kind + "\"");
    }
  } catch (const std::exception& e) {
    report.results.push_back(result(name, kLoad, false, e.what()));
  }
}

}  // namespace

Report verify_corpus(const fs::path& dir) {
  Report report;
  const fs::path manifest = dir / "manifest.json";
  if (!fs::is_regular_file(manifest)) {
    report.warnings.push_back("no manifest.json in " + dir.string() + "; nothing to verify");
    return report;
  }
  json doc;
  try {
    doc = io::read_json(manifest);
  } catch (const std::exception& e) {
    report.results.push_back(result("manifest", kLoad, false, e.what()));
    return report;
  }
  const json instances = doc.is_object() ? doc.value("instances", json::array()) : json::array();
  if (instances.empty()) report.warnings.push_back("manifest lists no instances");
  io::Loader loader;
  for (const auto& inst : instances) {
    run_instance(report, loader, dir, inst);
    ++report.instances;
  }
  return report;
}

json to_json(const Report& r) {
  json results = json::array();
  for (const auto& c : r.results)
    results.push_back({{"instance", c.instance}, {"check", c.check}, {"status", to_string(c.status)},
                       {"detail", c.detail}});
  json summary = json::object();
  for (const auto& [check, t] : r.summary()) summary[check] = {{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}};
  return json{{"instances", r.instances}, {"ok", r.ok()}, {"results", std::move(results)},
              {"summary", std::move(summary)}, {"warnings", r.warnings}};
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const auto& c : r.results) width = std::max(width, c.check.size());
  for (const auto& c : r.results)
    out << to_string(c.status) << "  " << std::left << std::setw(static_cast<int>(width)) << c.check << "  "
        << c.instance << "  " << c.detail << '\n';
  out << '\n' << std::left << std::setw(static_cast<int>(width)) << "check" << "  pass  fail  skip\n";
  for (const auto& [check, t] : r.summary())
    out << std::left << std::setw(static_cast<int>(width)) << check << std::right << "  " << std::setw(4) << t.pass
        << "  " << std::setw(4) << t.fail << "  " << std::setw(4) << t.skip << '\n';
  out << std::left << r.instances << " instances, " << r.results.size() << " checks, "
      << (r.ok() ? "all passed" : "FAILURES present") << '\n';
  return out.str();
}

}  // namespace pushout::verify
