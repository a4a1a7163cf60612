// pushout: command-line front end for the derivation push-out library.
//
// Exit codes: 0 success, 1 validation or verification failure, 2 I/O or
// parse failure.

#include <iostream>

#include <CLI11.hpp>

#include "pushout/duality.hpp"
#include "pushout/io.hpp"
#include "pushout/verify.hpp"

#ifndef PUSHOUT_CORPUS
#define PUSHOUT_CORPUS "corpus"
#endif

using namespace pushout;
namespace fs = std::filesystem;
using io::json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kParse = 2 };

struct Options {
  bool json = false;
  std::string corpus = PUSHOUT_CORPUS;
  std::vector<std::string> paths;
};

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

const char* pass(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string kind_name(io::DocumentKind k) {
  switch (k) {
    case io::DocumentKind::algebra: return "algebra";
    case io::DocumentKind::envelope: return "envelope";
    case io::DocumentKind::bimodule: return "bimodule";
    case io::DocumentKind::derivation: return "derivation";
    case io::DocumentKind::unknown: break;
  }
  return "unknown";
}

int cmd_check(const Options& opt) {
  int code = kOk;
  json out = json::array();
  for (const auto& p : opt.paths) {
    io::Loader loader;
    try {
      std::string kind = kind_name(loader.check(p));
      if (opt.json)
        out.push_back({{"path", p}, {"status", "OK"}, {"kind", kind}});
      else
        std::cout << "OK  " << p << " (" << kind << ")\n";
    } catch (const ParseError& e) {
      code = kParse;
      if (opt.json)
        out.push_back({{"path", p}, {"status", "PARSE_ERROR"}, {"error", e.what()}});
      else
        std::cout << "PARSE ERROR  " << e.what() << '\n';
    } catch (const Error& e) {
      if (code == kOk) code = kInvalid;
      if (opt.json)
        out.push_back({{"path", p}, {"status", "INVALID"}, {"error", e.what()}});
      else
        std::cout << "INVALID  " << p << ": " << e.what() << '\n';
    }
  }
  if (opt.json) emit(out);
  return code;
}

int cmd_h1(const Options& opt) {
  io::Loader loader;
  Bimodule x = loader.bimodule(opt.paths.back());
  if (opt.paths.size() == 2) {
    AlgebraPtr a = loader.algebra(opt.paths.front());
    if (io::algebra_document(*a) != io::algebra_document(*x.alg()))
      throw ValidationError("h1: the module is not over " + a->name());
  }
  H1Dims h = h1(x.alg(), x);
  if (opt.json)
    emit(json{{"z1", h.z1}, {"b1", h.b1}, {"h1", h.h1}});
  else
    std::cout << "z1 " << h.z1 << "\nb1 " << h.b1 << "\nh1 " << h.h1 << '\n';
  return kOk;
}

int cmd_centralizer(const Options& opt) {
  io::Loader loader;
  Bimodule x = loader.bimodule(opt.paths.front());
  CentralizerModule dc = double_centralizer(x.alg(), x);
  Matrix i = iota(dc);
  const bool injective = kernel(i).dim() == 0;
  if (opt.json) {
    json basis = json::array();
    for (std::size_t k = 0; k < dc.dim(); ++k) basis.push_back(io::to_json(dc.basis_pair(k)));
    emit(json{{"dim", dc.dim()}, {"basis", std::move(basis)}, {"iota", io::to_json(i)}, {"iota_injective", injective}});
    return kOk;
  }
  std::cout << "dim DC(X) " << dc.dim() << "\niota injective " << (injective ? "yes" : "no") << '\n';
  for (std::size_t k = 0; k < dc.dim(); ++k) {
    CentralizerPair p = dc.basis_pair(k);
    std::cout << "pair " << k << "\n  S " << io::to_json(p.s).dump() << "\n  T " << io::to_json(p.t).dump() << '\n';
  }
  return kOk;
}

int cmd_tensor(const Options& opt) {
  io::Loader loader;
  Bimodule x = loader.bimodule(opt.paths.at(0));
  Bimodule y = loader.bimodule(opt.paths.at(1));
  if (x.alg()->dim() != y.alg()->dim()) throw ValidationError("tensor: modules are over different algebras");
  BalancedTensor t = balanced_tensor(x, y);
  if (opt.json) {
    emit(json{{"dim", t.dim()}, {"relations_dim", t.relations.dim()}, {"projection", io::to_json(t.projection())}});
    return kOk;
  }
  std::cout << "dim X (x)_A Y " << t.dim() << "\nrelations " << t.relations.dim() << '\n';
  return kOk;
}

int cmd_pushout(const Options& opt) {
  io::Loader loader;
  Envelope env = loader.envelope(opt.paths.at(0));
  Bimodule x_b = loader.bimodule(opt.paths.at(1));
  const fs::path dpath = opt.paths.at(2);
  json ddoc = io::read_json(dpath);
  const Bimodule x = restrict_module(x_b, env);
  Matrix map = io::matrix_from_json(ddoc.contains("map") ? ddoc["map"] : ddoc, dpath.string() + ".map");
  Derivation d(x, map);  // rejects maps that break the derivation rule

  PushoutResult po = push_out(env, x_b, d);
  const bool squares = square_span(*env.sub()).dim() == env.sub()->dim();
  std::optional<PushoutUniqueness> uniq;
  std::optional<CentralizerPair> witness;
  if (squares && po.in_centralizer) {
    uniq = pushout_uniqueness(env, x_b, d);
    witness = pull_back_inner(env, x_b, d);
  }
  bool ok = po.ok() && (!uniq || uniq->unique);

  if (opt.json) {
    json pairs = json::array();
    for (std::size_t b = 0; b < env.amb()->dim(); ++b) pairs.push_back(io::to_json(po.pair(b)));
    json doc{{"d_tilde", std::move(pairs)},
             {"centralizer_dim", po.dc.dim()},
             {"centralizer_membership", po.in_centralizer},
             {"derivation_rule", po.derivation_rule},
             {"diagram", po.diagram},
             {"ideal_identities", po.ideal_identities},
             {"ok", ok}};
    doc["uniqueness"] = uniq ? json(uniq->unique) : json(nullptr);
    doc["d_tilde_inner"] = squares ? json(witness.has_value()) : json(nullptr);
    if (witness) doc["witness"] = io::to_json(*witness);
    emit(doc);
    return ok ? kOk : kInvalid;
  }

  const auto& names = env.amb()->basis_names();
  for (std::size_t b = 0; b < names.size(); ++b) {
    CentralizerPair p = po.pair(b);
    std::cout << "D~(" << names[b] << ")\n  L " << io::to_json(p.s).dump() << "\n  R " << io::to_json(p.t).dump()
              << '\n';
  }
  std::cout << pass(po.in_centralizer) << "  centralizer membership\n"
            << pass(po.derivation_rule) << "  derivation rule over B\n"
            << pass(po.diagram) << "  diagram commutativity\n"
            << pass(po.ideal_identities) << "  ideal identities\n";
  if (!squares) {
    std::cout << "SKIP  uniqueness (span(A^2) != A)\nSKIP  inner pull-back (span(A^2) != A)\n";
  } else {
    std::cout << pass(uniq && uniq->unique) << "  uniqueness\n";
    if (witness)
      std::cout << "PASS  inner pull-back: D = S - T\n  S " << io::to_json(witness->s).dump() << "\n  T "
                << io::to_json(witness->t).dump() << '\n';
    else
      std::cout << "NOTE  D~ is not inner; no pull-back\n";
  }
  return ok ? kOk : kInvalid;
}

int cmd_dualiso(const Options& opt) {
  io::Loader loader;
  Bimodule x = loader.bimodule(opt.paths.front());
  const AlgebraPtr& a = x.alg();
  DualIsoReport iso = dual_iso(a, x);
  const bool fact = factorization_check(a, x);
  InjectivitySurjectivity is = injectivity_surjectivity(a, x);
  const bool induced = is_induced(x).induced;
  std::optional<bool> induced_bij;
  if (induced) induced_bij = induced_dual_iso_check(a, x);
  const bool ok = iso.holds() && fact && is.holds() && induced_bij.value_or(true);
  if (opt.json) {
    emit(json{{"centralizer_dim", iso.centralizer_dim},
              {"quotient_dim", iso.quotient_dim},
              {"isomorphism", iso.holds()},
              {"factorization", fact},
              {"iota_dual_injective", is.iota_dual_injective},
              {"mu_surjective", is.mu_surjective},
              {"induced", induced},
              {"iota_dual_bijective", induced_bij ? json(*induced_bij) : json(nullptr)},
              {"ok", ok}});
    return ok ? kOk : kInvalid;
  }
  std::cout << "dim DC(X*) " << iso.centralizer_dim << "\ndim predual " << iso.quotient_dim << '\n'
            << pass(iso.holds()) << "  DC(X*) = ((A (x) X + X (x) A) / N)*\n"
            << pass(fact) << "  q* o iota_X* = mu*\n"
            << pass(is.holds()) << "  iota_X* injective (" << is.iota_dual_injective << ") <=> mu surjective ("
            << is.mu_surjective << ")\n";
  if (induced_bij)
    std::cout << pass(*induced_bij) << "  X induced, iota_X* bijective\n";
  else
    std::cout << "SKIP  X not induced\n";
  return ok ? kOk : kInvalid;
}

int cmd_verify(const Options& opt) {
  verify::Report r = verify::verify_corpus(opt.corpus);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  if (opt.json)
    emit(verify::to_json(r));
  else
    std::cout << verify::to_text(r);
  return r.ok() ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Push-out derivations, double centralizers and first Hochschild cohomology over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--corpus", opt.corpus, "Corpus directory for verify")->capture_default_str();

  auto* check = app.add_subcommand("check", "Validate algebra, envelope, bimodule and derivation documents");
  check->add_option("paths", opt.paths, "Documents")->required();
  auto* h1c = app.add_subcommand("h1", "Dimensions of Z1, B1 and H1 for [ALGEBRA] MODULE");
  h1c->add_option("paths", opt.paths, "[algebra] module")->required()->expected(1, 2);
  auto* dc = app.add_subcommand("centralizer", "Double centralizer module of a bimodule");
  dc->add_option("module", opt.paths, "Bimodule document")->required()->expected(1);
  auto* tensor = app.add_subcommand("tensor", "Balanced tensor product X (x)_A Y");
  tensor->add_option("modules", opt.paths, "Two bimodule documents")->required()->expected(2);
  auto* po = app.add_subcommand("pushout", "Push out a derivation along an envelope");
  po->add_option("docs", opt.paths, "envelope module-over-B derivation")->required()->expected(3);
  auto* di = app.add_subcommand("dualiso", "Check the dual-module isomorphism for a bimodule");
  di->add_option("module", opt.paths, "Bimodule document")->required()->expected(1);
  auto* ver = app.add_subcommand("verify", "Run every check over the corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*check) return cmd_check(opt);
    if (*h1c) return cmd_h1(opt);
    if (*dc) return cmd_centralizer(opt);
    if (*tensor) return cmd_tensor(opt);
    if (*po) return cmd_pushout(opt);
    if (*di) return cmd_dualiso(opt);
    if (*ver) return cmd_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
