#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "pushout/derivation.hpp"

namespace pushout::io {

using nlohmann::json;

json to_json(const Scalar& s);
json to_json(const Matrix& m);
json to_json(const CentralizerPair& p);

Matrix matrix_from_json(const json& j, const std::string& where);
Vector vector_from_json(const json& j, const std::string& where);
CentralizerPair pair_from_json(const json& j, std::size_t x_dim, std::size_t a_dim);

json algebra_document(const Algebra& a);
/// algebra_ref is written verbatim into the "algebra" field.
json bimodule_document(const Bimodule& x, const std::string& algebra_ref);
json envelope_document(const Envelope& env, const std::string& sub_ref, const std::string& amb_ref);
json derivation_document(const Derivation& d, const std::string& algebra_ref, const std::string& module_ref);

enum class DocumentKind { algebra, envelope, bimodule, derivation, unknown };
DocumentKind classify(const json& doc);

/// Reads and parses a JSON file. Syntax errors become ParseError with the
/// line and column of the failure.
json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& doc);

/// Loads documents and resolves the references between them. A reference
/// is an inline object, a path relative to the referring document, or a
/// bare algebra name looked up next to the document and in ../algebras/.
/// Loaded algebras are cached by canonical path so modules that refer to
/// the same file share one AlgebraPtr.
class Loader {
 public:
  AlgebraPtr algebra(const std::filesystem::path& path);
  Envelope envelope(const std::filesystem::path& path);
  Bimodule bimodule(const std::filesystem::path& path);
  Derivation derivation(const std::filesystem::path& path);

  AlgebraPtr algebra_from(const json& doc, const std::string& where);
  Bimodule bimodule_from(const json& doc, const std::filesystem::path& base, const std::string& where);
  Envelope envelope_from(const json& doc, const std::filesystem::path& base, const std::string& where);
  Derivation derivation_from(const json& doc, const std::filesystem::path& base, const std::string& where);

  /// Validates any document kind; returns its kind.
  DocumentKind check(const std::filesystem::path& path);

 private:
  AlgebraPtr resolve_algebra(const json& ref, const std::filesystem::path& base, const std::string& where);
  Bimodule resolve_bimodule(const json& ref, const std::filesystem::path& base, const std::string& where);
  std::filesystem::path locate(const std::string& ref, const std::filesystem::path& base,
                               const std::string& where) const;

  std::map<std::filesystem::path, AlgebraPtr> algebras_;
};

}  // namespace pushout::io
