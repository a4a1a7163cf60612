// Regenerates the bundled example corpus from the built-in catalog.
//
//   make_corpus <output-dir>
//
// Every document is written with sorted keys and rationals in lowest
// terms, so rerunning the tool over a checkout is a no-op.

#include <filesystem>
#include <iostream>

#include "pushout/catalog.hpp"
#include "pushout/io.hpp"

using namespace pushout;
namespace fs = std::filesystem;
using io::json;

namespace {

struct Writer {
  fs::path root;
  json instances = json::array();

  void put(const std::string& rel, const json& doc) {
    fs::path p = root / rel;
    fs::create_directories(p.parent_path());
    io::write_json(p, doc);
  }
  void algebra(const AlgebraPtr& a) { put("algebras/" + a->name() + ".json", io::algebra_document(*a)); }
  void module(const std::string& file, const Bimodule& x) {
    put("modules/" + file + ".json", io::bimodule_document(x, x.alg()->name()));
  }
  void envelope(const std::string& file, const Envelope& env) {
    put("envelopes/" + file + ".json", io::envelope_document(env, env.sub()->name(), env.amb()->name()));
  }
};

// A (x) A with B acting on the outer factors; restricts to the outer
// tensor module of the ideal A.
Bimodule outer_over_envelope(const Envelope& env) {
  const Matrix id = Matrix::identity(env.sub()->dim());
  std::vector<Matrix> left, right;
  for (std::size_t b = 0; b < env.amb()->dim(); ++b) {
    left.push_back(kronecker(env.left_on_sub(b), id));
    right.push_back(kronecker(id, env.right_on_sub(b)));
  }
  return Bimodule(env.amb(), env.sub()->dim() * env.sub()->dim(), std::move(left), std::move(right));
}

// Q with e11 acting as 1 on the left, e22 as 1 on the right, e12 as 0.
Bimodule t2_simple_extension(const AlgebraPtr& t2) {
  auto one = [] { return Matrix{{1}}; };
  auto zero = [] { return Matrix(1, 1); };
  return Bimodule(t2, 1, {one(), zero(), zero()}, {zero(), zero(), one()});
}

json module_instance(const std::string& name, const std::string& module, json expected = nullptr) {
  json inst{{"name", name}, {"kind", "module"}, {"module", "modules/" + module + ".json"}};
  if (!expected.is_null()) inst["expected"] = std::move(expected);
  return inst;
}

json h1_expect(std::size_t z, std::size_t b, std::size_t h) { return json::array({z, b, h}); }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <output-dir>\n";
    return 2;
  }
  Writer w{argv[1]};

  auto k = catalog::ground_field();
  auto n2 = catalog::null_line();
  auto n3 = catalog::strictly_upper(3);
  auto t2 = catalog::upper_triangular(2);
  auto t3 = catalog::upper_triangular(3);
  auto m2 = catalog::matrix_algebra(2);
  auto r2 = catalog::first_row();
  auto d2 = catalog::diagonal(2);
  auto d3 = catalog::diagonal(3);
  auto m2k = catalog::direct_sum(m2, k, "M2+k");
  Envelope n2_unit = unitization(n2);
  auto n2p = n2_unit.amb();
  for (const auto& a : {k, n2, n2p, n3, t2, t3, m2, m2k, r2, d2, d3}) w.algebra(a);

  Envelope m2_id = identity_envelope(m2);
  Envelope t2_id = identity_envelope(t2);
  Envelope n2p_id = identity_envelope(n2p);
  Envelope n3_t3 = catalog::unit_inclusion(n3, t3);
  Envelope m2_m2k = catalog::first_summand(m2, m2k);
  Envelope d2_d3 = catalog::unit_inclusion(d2, d3);
  w.envelope("M2_identity", m2_id);
  w.envelope("T2_identity", t2_id);
  w.envelope("N2+_identity", n2p_id);
  w.envelope("N3_in_T3", n3_t3);
  w.envelope("N2_in_N2+", n2_unit);
  w.envelope("M2_in_M2+k", m2_m2k);
  w.envelope("D2_in_D3", d2_d3);

  for (const auto& a : {k, n2, n2p, n3, t2, t3, m2, m2k, r2, d3}) w.module(a->name() + "_regular", regular_module(a));
  for (const auto& a : {n2, m2, t2, r2}) w.module(a->name() + "_dual", dual_module(regular_module(a)));
  w.module("N2_zero", zero_module(n2, 1));
  w.module("M2_zero", zero_module(m2, 2));
  w.module("M2_outer", outer_tensor_module(m2));
  w.module("T2_outer", outer_tensor_module(t2));
  w.module("M2_restricted_from_M2+k", restrict_module(regular_module(m2k), m2_m2k));
  w.module("T2_simple_extension", t2_simple_extension(t2));
  w.module("M2_over_M2+k", ideal_module(m2_m2k));
  w.module("M2_outer_over_M2+k", outer_over_envelope(m2_m2k));
  w.module("D2_over_D3", ideal_module(d2_d3));

  CentralizerModule r2_dc = double_centralizer(r2, regular_module(r2));
  w.module("R2_centralizer", r2_dc.a_module());
  {
    Bimodule t3_reg = regular_module(t3);
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < t3->dim(); ++i) {
      left.push_back(direct_sum(t3_reg.left(i), Matrix(1, 1)));
      right.push_back(direct_sum(t3_reg.right(i), Matrix(1, 1)));
    }
    w.module("T3_padded", Bimodule(t3, t3->dim() + 1, std::move(left), std::move(right)));
  }

  // A derivation T2 -> Q that is not inner: e12 -> 1.
  w.put("derivations/T2_simple_extension_e12.json",
        json{{"algebra", "T2"}, {"module", "../modules/T2_simple_extension.json"}, {"map", json::array({json::array({"0", "1", "0"})})}});
  {
    // The inner derivation a -> a.e13 - e13.a of N3 into T3, restricted.
    Bimodule x = restrict_module(regular_module(t3), n3_t3);
    Vector e13 = unit_vector(t3->dim(), 2);
    Matrix map(t3->dim(), n3->dim());
    for (std::size_t c = 0; c < n3->dim(); ++c) map.set_column(c, (x.left(c) - x.right(c)).apply(e13));
    w.put("derivations/N3_in_T3_inner_e13.json",
          json{{"envelope", "../envelopes/N3_in_T3.json"}, {"module", "../modules/T3_regular.json"}, {"map", io::to_json(map)}});
  }
  {
    // n -> n. N2+ is commutative, so this derivation is not inner.
    Matrix map(2, 1);
    map(0, 0) = 1;
    w.put("derivations/N2_in_N2+_unit.json",
          json{{"envelope", "../envelopes/N2_in_N2+.json"}, {"module", "../modules/N2+_regular.json"}, {"map", io::to_json(map)}});
  }

  auto& in = w.instances;
  in.push_back(module_instance("k_regular", "k_regular", {{"h1", h1_expect(0, 0, 0)}, {"centralizer_dim", 1}, {"induced", true}}));
  in.push_back(module_instance("N2_regular", "N2_regular", {{"h1", h1_expect(1, 0, 1)}, {"centralizer_dim", 2}, {"induced", false}}));
  in.push_back(module_instance("M2_regular", "M2_regular", {{"h1", h1_expect(3, 3, 0)}, {"centralizer_dim", 4}, {"induced", true}, {"self_induced", true}}));
  in.push_back(module_instance("N2+_regular", "N2+_regular"));
  in.push_back(module_instance("N3_regular", "N3_regular", {{"h1", h1_expect(4, 2, 2)}, {"centralizer_dim", 7}, {"induced", false}}));
  in.push_back(module_instance("T2_regular", "T2_regular", {{"h1", h1_expect(2, 2, 0)}, {"centralizer_dim", 3}, {"induced", true}}));
  in.push_back(module_instance("T3_regular", "T3_regular", {{"h1", h1_expect(5, 5, 0)}, {"centralizer_dim", 6}, {"induced", true}}));
  in.push_back(module_instance("M2+k_regular", "M2+k_regular"));
  in.push_back(module_instance("R2_regular", "R2_regular", {{"h1", h1_expect(2, 2, 0)}, {"centralizer_dim", 3}, {"induced", true}}));
  in.push_back(module_instance("D3_regular", "D3_regular"));
  for (const auto& a : {"N2", "M2", "T2", "R2"}) in.push_back(module_instance(std::string(a) + "_dual", std::string(a) + "_dual"));
  in.push_back(module_instance("N2_zero", "N2_zero", {{"induced", false}}));
  in.push_back(module_instance("M2_zero", "M2_zero", {{"induced", false}}));
  in.push_back(module_instance("M2_outer", "M2_outer", {{"induced", true}}));
  in.push_back(module_instance("T2_outer", "T2_outer", {{"induced", true}}));
  in.push_back(module_instance("M2_restricted_from_M2+k", "M2_restricted_from_M2+k", {{"induced", false}}));
  in.push_back(module_instance("T2_simple_extension", "T2_simple_extension", {{"h1", h1_expect(2, 1, 1)}}));

  auto pushout_instance = [&](const std::string& name, const std::string& env, const std::string& module, json derivations) {
    in.push_back(json{{"name", name}, {"kind", "pushout"}, {"envelope", "envelopes/" + env + ".json"},
                      {"module", "modules/" + module + ".json"}, {"derivations", std::move(derivations)}});
  };
  pushout_instance("pushout_M2_identity", "M2_identity", "M2_regular", json::array());
  pushout_instance("pushout_N3_in_T3", "N3_in_T3", "T3_regular",
                   json::array({{{"doc", "derivations/N3_in_T3_inner_e13.json"}}}));
  pushout_instance("pushout_N2_in_N2+", "N2_in_N2+", "N2+_regular",
                   json::array({{{"doc", "derivations/N2_in_N2+_unit.json"}}}));
  pushout_instance("pushout_M2_in_M2+k", "M2_in_M2+k", "M2+k_regular", json::array());
  pushout_instance("pushout_D2_in_D3", "D2_in_D3", "D3_regular", json::array());
  pushout_instance("pushout_T2_simple_extension", "T2_identity", "T2_simple_extension",
                   json::array({{{"doc", "derivations/T2_simple_extension_e12.json"}, {"pullback", "absent"}}}));

  auto universal_instance = [&](const std::string& name, const std::string& module, const std::string& x_tilde, const Matrix& j) {
    in.push_back(json{{"name", name}, {"kind", "universal"}, {"module", "modules/" + module + ".json"},
                      {"x_tilde", "modules/" + x_tilde + ".json"}, {"j", io::to_json(j)}});
  };
  universal_instance("universal_R2_centralizer", "R2_regular", "R2_centralizer", iota(r2_dc));
  universal_instance("universal_M2_identity", "M2_regular", "M2_regular", Matrix::identity(4));
  universal_instance("universal_T3_padded", "T3_regular", "T3_padded",
                     vstack({Matrix::identity(t3->dim()), Matrix(1, t3->dim())}));

  auto scenario = [&](const std::string& name, const std::string& kind, const std::string& env, const std::string& module) {
    json inst{{"name", name}, {"kind", "scenario"}, {"scenario", kind}, {"envelope", "envelopes/" + env + ".json"}};
    if (!module.empty()) inst["module"] = "modules/" + module + ".json";
    in.push_back(std::move(inst));
  };
  scenario("amenable_M2_ideal", "amenable-ideal", "M2_in_M2+k", "M2_over_M2+k");
  scenario("amenable_M2_outer", "amenable-ideal", "M2_in_M2+k", "M2_outer_over_M2+k");
  scenario("amenable_D2_ideal", "amenable-ideal", "D2_in_D3", "D2_over_D3");
  scenario("weak_amenability_D2_in_D3", "commutative-weak-amenability", "D2_in_D3", "");
  scenario("weak_amenability_N2+", "commutative-weak-amenability", "N2+_identity", "");
  scenario("segal_M2_in_M2+k", "segal-form", "M2_in_M2+k", "M2+k_regular");
  scenario("segal_M2_identity", "segal-form", "M2_identity", "M2_regular");
  scenario("segal_D2_in_D3", "segal-form", "D2_in_D3", "D3_regular");
  scenario("self_induced_M2_in_M2+k", "self-induced-ideal", "M2_in_M2+k", "");
  scenario("self_induced_M2_identity", "self-induced-ideal", "M2_identity", "");
  scenario("self_induced_D2_in_D3", "self-induced-ideal", "D2_in_D3", "");

  w.put("manifest.json", json{{"instances", std::move(w.instances)}});
  return 0;
}
