#include <doctest.h>

#include <fstream>

#include "pushout/catalog.hpp"
#include "pushout/io.hpp"

using namespace pushout;
using io::json;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory under the system temp dir.
fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("pushout_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir / "algebras");
  fs::create_directories(dir / "modules");
  return dir;
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const fs::path corpus = PUSHOUT_CORPUS;

}  // namespace

TEST_CASE("scalar and matrix encoding") {
  CHECK(io::to_json(parse_scalar("-3/6")) == json("-1/2"));
  Matrix m{{1, Scalar(2, 3)}, {0, -4}};
  json j = io::to_json(m);
  CHECK(j == json::parse(R"([["1","2/3"],["0","-4"]])"));
  CHECK(io::matrix_from_json(j, "m") == m);
  CHECK(io::matrix_from_json(json::parse(R"([[1, "2/3"], [0, -4]])"), "m") == m);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1.5]]"), "m"), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"([[1],[1,2]])"), "m"), ParseError);
  CHECK(io::vector_from_json(json::parse(R"(["1/3", 2])"), "v") == Vector{Scalar(1, 3), 2});

  CentralizerPair p{Matrix{{1, 2}}, Matrix{{0, 1}}};
  CHECK(io::pair_from_json(io::to_json(p), 1, 2) == p);
}

TEST_CASE("document round trips") {
  fs::path dir = scratch("roundtrip");
  auto t2 = catalog::upper_triangular(2);
  io::write_json(dir / "algebras" / "T2.json", io::algebra_document(*t2));
  io::write_json(dir / "modules" / "T2_dual.json", io::bimodule_document(dual_module(regular_module(t2)), "T2"));

  io::Loader loader;
  AlgebraPtr back = loader.algebra(dir / "algebras" / "T2.json");
  CHECK(back->basis_names() == t2->basis_names());
  CHECK(io::algebra_document(*back) == io::algebra_document(*t2));
  Bimodule x = loader.bimodule(dir / "modules" / "T2_dual.json");
  CHECK(x == dual_module(regular_module(t2)));
  CHECK(x.alg() == back);  // cached by path
  CHECK(loader.check(dir / "modules" / "T2_dual.json") == io::DocumentKind::bimodule);
  CHECK(loader.check(dir / "algebras" / "T2.json") == io::DocumentKind::algebra);
  fs::remove_all(dir);
}

TEST_CASE("classification") {
  CHECK(io::classify(json::parse(R"({"mult": []})")) == io::DocumentKind::algebra);
  CHECK(io::classify(json::parse(R"({"embedding": []})")) == io::DocumentKind::envelope);
  CHECK(io::classify(json::parse(R"({"left": [], "right": []})")) == io::DocumentKind::bimodule);
  CHECK(io::classify(json::parse(R"({"map": []})")) == io::DocumentKind::derivation);
  CHECK(io::classify(json::parse(R"({"left": []})")) == io::DocumentKind::unknown);
  CHECK(io::classify(json::parse("[]")) == io::DocumentKind::unknown);
}

TEST_CASE("loading the shipped corpus") {
  io::Loader loader;
  Envelope env = loader.envelope(corpus / "envelopes" / "N3_in_T3.json");
  CHECK(env.sub()->dim() == 3);
  CHECK(env.amb()->dim() == 6);
  Derivation d = loader.derivation(corpus / "derivations" / "T2_simple_extension_e12.json");
  CHECK(d.module().dim() == 1);
  CHECK(d.map() == Matrix{{0, 1, 0}});
  Derivation inner = loader.derivation(corpus / "derivations" / "N3_in_T3_inner_e13.json");
  CHECK(inner.alg()->dim() == 3);
  CHECK(inner.module().dim() == 6);
}

TEST_CASE("errors") {
  fs::path dir = scratch("errors");
  io::Loader loader;

  write_text(dir / "syntax.json", "{\"name\": \"x\",\n  \"mult\": [\n");
  try {
    loader.check(dir / "syntax.json");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }

  write_text(dir / "zero_den.json", R"({"name":"k","dim":1,"basis":["e"],"mult":[[["3/0"]]]})");
  CHECK_THROWS_AS(loader.algebra(dir / "zero_den.json"), ParseError);

  write_text(dir / "nonassoc.json",
             R"({"name":"bad","dim":2,"basis":["e1","e2"],"mult":[[[0,1],[0,0]],[[0,1],[0,0]]]})");
  CHECK_THROWS_AS(loader.algebra(dir / "nonassoc.json"), NotAssociative);

  write_text(dir / "dangling.json", R"({"algebra":"nowhere","dim":1,"left":[[[0]]],"right":[[[0]]]})");
  CHECK_THROWS_AS(loader.bimodule(dir / "dangling.json"), ParseError);

  CHECK_THROWS_AS(loader.algebra(dir / "missing.json"), ParseError);
  fs::remove_all(dir);
}
