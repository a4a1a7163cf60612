#include "pushout/io.hpp"

#include <fstream>
#include <sstream>

namespace pushout::io {

namespace fs = std::filesystem;

namespace {

ParseError parse_error(const std::string& where, const std::string& what) {
  return ParseError(where + ": " + what);
}

const json& field(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) throw parse_error(where, "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw parse_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_field(const json& doc, const char* key, const std::string& where) {
  const json& v = field(doc, key, where);
  if (!v.is_number_unsigned()) throw parse_error(where, std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
      throw parse_error(where, e.what());
    }
  }
  throw parse_error(where, "rational entries must be integers or \"p/q\" strings, got " + j.dump());
}

Matrix shaped_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (rows == 0) {
    if (!j.is_array() || !j.empty()) throw parse_error(where, "expected an empty matrix");
    return Matrix(0, cols);
  }
  Matrix m = matrix_from_json(j, where);
  if (m.rows() != rows || m.cols() != cols) {
    std::ostringstream msg;
    msg << "expected a " << rows << "x" << cols << " matrix, got " << m.rows() << "x" << m.cols();
    throw parse_error(where, msg.str());
  }
  return m;
}

std::vector<Matrix> matrix_list(const json& j, std::size_t count, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != count)
    throw parse_error(where, "expected one matrix per algebra basis element (" + std::to_string(count) + ")");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(shaped_matrix(j[i], dim, dim, where + "[" + std::to_string(i) + "]"));
  return out;
}

std::string describe(const fs::path& p) { return p.string(); }

}  // namespace

json to_json(const Scalar& s) { return to_string(s); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CentralizerPair& p) { return json{{"S", to_json(p.s)}, {"T", to_json(p.t)}}; }

Vector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where, "expected an array of rationals");
  Vector out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(scalar_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where, "expected an array of rows");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) rows.push_back(vector_from_json(j[r], where + "[" + std::to_string(r) + "]"));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows)
    if (row.size() != cols) throw parse_error(where, "ragged matrix rows");
  return Matrix::from_rows(cols, rows);
}

CentralizerPair pair_from_json(const json& j, std::size_t x_dim, std::size_t a_dim) {
  return CentralizerPair{shaped_matrix(field(j, "S", "pair"), x_dim, a_dim, "pair.S"),
                         shaped_matrix(field(j, "T", "pair"), x_dim, a_dim, "pair.T")};
}

json algebra_document(const Algebra& a) {
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) {
      json entry = json::array();
      for (const auto& c : a.basis_product(i, j)) entry.push_back(to_string(c));
      row.push_back(std::move(entry));
    }
    mult.push_back(std::move(row));
  }
  return json{{"name", a.name()}, {"dim", a.dim()}, {"basis", a.basis_names()}, {"mult", std::move(mult)}};
}

json bimodule_document(const Bimodule& x, const std::string& algebra_ref) {
  json left = json::array(), right = json::array();
  for (const auto& m : x.left()) left.push_back(to_json(m));
  for (const auto& m : x.right()) right.push_back(to_json(m));
  return json{{"algebra", algebra_ref}, {"dim", x.dim()}, {"left", std::move(left)}, {"right", std::move(right)}};
}

json envelope_document(const Envelope& env, const std::string& sub_ref, const std::string& amb_ref) {
  return json{{"sub", sub_ref}, {"amb", amb_ref}, {"embedding", to_json(env.embedding())}};
}

json derivation_document(const Derivation& d, const std::string& algebra_ref, const std::string& module_ref) {
  return json{{"algebra", algebra_ref}, {"module", module_ref}, {"map", to_json(d.map())}};
}

DocumentKind classify(const json& doc) {
  if (!doc.is_object()) return DocumentKind::unknown;
  if (doc.contains("mult")) return DocumentKind::algebra;
  if (doc.contains("embedding")) return DocumentKind::envelope;
  if (doc.contains("map")) return DocumentKind::derivation;
  if (doc.contains("left") && doc.contains("right")) return DocumentKind::bimodule;
  return DocumentKind::unknown;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(describe(path) + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    // e.what() carries "at line L, column C".
    throw ParseError(describe(path) + ": " + e.what());
  }
}

void write_json(const fs::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError(describe(path) + ": cannot write file");
  out << doc.dump(2) << '\n';
}

fs::path Loader::locate(const std::string& ref, const fs::path& base, const std::string& where) const {
  std::vector<fs::path> candidates{base / ref};
  if (fs::path(ref).extension() != ".json") {
    candidates.push_back(base / (ref + ".json"));
    candidates.push_back(base / ".." / "algebras" / (ref + ".json"));
    candidates.push_back(base / "algebras" / (ref + ".json"));
  }
  for (const auto& c : candidates)
    if (fs::is_regular_file(c)) return fs::weakly_canonical(c);
  throw parse_error(where, "cannot resolve reference \"" + ref + "\"");
}

AlgebraPtr Loader::algebra_from(const json& doc, const std::string& where) {
  const std::size_t n = size_field(doc, "dim", where);
  std::string name = doc.contains("name") ? doc["name"].get<std::string>() : "A";
  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || b.size() != n) throw parse_error(where, "\"basis\" must list dim names");
    for (const auto& s : b) {
      if (!s.is_string()) throw parse_error(where, "basis names must be strings");
      basis.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
  }
  const json& mult = field(doc, "mult", where);
  if (!mult.is_array() || mult.size() != n) throw parse_error(where, "\"mult\" must be a dim x dim table");
  std::vector<Vector> products;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mult[i].is_array() || mult[i].size() != n) throw parse_error(where, "\"mult\" must be a dim x dim table");
    for (std::size_t j = 0; j < n; ++j) {
      std::string at = where + ".mult[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      Vector v = vector_from_json(mult[i][j], at);
      if (v.size() != n) throw parse_error(at, "product vector must have dim entries");
      products.push_back(std::move(v));
    }
  }
  return new_algebra(std::move(name), std::move(basis), std::move(products));
}

AlgebraPtr Loader::resolve_algebra(const json& ref, const fs::path& base, const std::string& where) {
  if (ref.is_object()) return algebra_from(ref, where);
  if (!ref.is_string()) throw parse_error(where, "algebra reference must be a path, a name or an object");
  return algebra(locate(ref.get<std::string>(), base, where));
}

Bimodule Loader::resolve_bimodule(const json& ref, const fs::path& base, const std::string& where) {
  if (ref.is_object()) return bimodule_from(ref, base, where);
  if (!ref.is_string()) throw parse_error(where, "module reference must be a path or an object");
  return bimodule(locate(ref.get<std::string>(), base, where));
}

Bimodule Loader::bimodule_from(const json& doc, const fs::path& base, const std::string& where) {
  AlgebraPtr a = resolve_algebra(field(doc, "algebra", where), base, where + ".algebra");
  const std::size_t n = size_field(doc, "dim", where);
  auto left = matrix_list(field(doc, "left", where), a->dim(), n, where + ".left");
  auto right = matrix_list(field(doc, "right", where), a->dim(), n, where + ".right");
  return new_bimodule(a, n, std::move(left), std::move(right));
}

Envelope Loader::envelope_from(const json& doc, const fs::path& base, const std::string& where) {
  AlgebraPtr sub = resolve_algebra(field(doc, "sub", where), base, where + ".sub");
  AlgebraPtr amb = resolve_algebra(field(doc, "amb", where), base, where + ".amb");
  Matrix e = shaped_matrix(field(doc, "embedding", where), amb->dim(), sub->dim(), where + ".embedding");
  return new_envelope(sub, amb, std::move(e));
}

Derivation Loader::derivation_from(const json& doc, const fs::path& base, const std::string& where) {
  Bimodule x = resolve_bimodule(field(doc, "module", where), base, where + ".module");
  if (doc.contains("envelope")) {
    const json& ref = doc["envelope"];
    Envelope env = ref.is_object() ? envelope_from(ref, base, where + ".envelope")
                                   : envelope(locate(ref.get<std::string>(), base, where + ".envelope"));
    x = restrict_module(x, env);
  }
  if (doc.contains("algebra")) {
    AlgebraPtr a = resolve_algebra(doc["algebra"], base, where + ".algebra");
    if (a->dim() != x.alg()->dim()) throw parse_error(where, "module is not over the declared algebra");
  }
  Matrix m = shaped_matrix(field(doc, "map", where), x.dim(), x.alg()->dim(), where + ".map");
  return Derivation(std::move(x), std::move(m));
}

AlgebraPtr Loader::algebra(const fs::path& path) {
  fs::path key = fs::weakly_canonical(path);
  if (auto it = algebras_.find(key); it != algebras_.end()) return it->second;
  AlgebraPtr a = algebra_from(read_json(key), describe(path));
  algebras_.emplace(key, a);
  return a;
}

Envelope Loader::envelope(const fs::path& path) {
  return envelope_from(read_json(path), path.parent_path(), describe(path));
}

Bimodule Loader::bimodule(const fs::path& path) {
  return bimodule_from(read_json(path), path.parent_path(), describe(path));
}

Derivation Loader::derivation(const fs::path& path) {
  return derivation_from(read_json(path), path.parent_path(), describe(path));
}

DocumentKind Loader::check(const fs::path& path) {
  json doc = read_json(path);
  const std::string where = describe(path);
  DocumentKind kind = classify(doc);
  switch (kind) {
    case DocumentKind::algebra:
      algebra(path);
      break;
    case DocumentKind::envelope:
      envelope_from(doc, path.parent_path(), where);
      break;
    case DocumentKind::bimodule:
      bimodule_from(doc, path.parent_path(), where);
      break;
    case DocumentKind::derivation:
      derivation_from(doc, path.parent_path(), where);
      break;
    case DocumentKind::unknown:
      throw parse_error(where, "unrecognized document (expected algebra, envelope, bimodule or derivation)");
  }
  return kind;
}

}  // namespace pushout::io
