#pragma once

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"
#include "lietrip/cohom.hpp"
#include "lietrip/grlie.hpp"
#include "lietrip/lts.hpp"

namespace lietrip::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

using Object = std::variant<LieTripleSystem, GradedLieAlgebra, LtsHom, GradedHom, GradedModule, Cochain>;

/// One serialized object with an optional name.
struct AlgebraFile {
  Object object;
  std::string name;
};

/// "lts", "graded_lie", "lts_hom", "graded_hom", "module" or "cochain".
std::string kind_of(const Object& o);

struct LoadOptions {
  /// Re-read every entry in this field instead of the file's own tag.
  std::optional<FieldSpec> field;
  /// Skip axiom and hom-law validation.
  bool unchecked = false;
};

Json to_json(const AlgebraFile& file);
Json to_json(const Object& o, const std::string& name = {});

/// Throws FormatError naming a JSON pointer for malformed input,
/// InvalidStructure for invariant violations (unless unchecked) and
/// std::domain_error for entries that do not exist in the chosen field.
AlgebraFile from_json(const Json& j, const LoadOptions& opts = {});

AlgebraFile load_file(const std::string& path, const LoadOptions& opts = {});
void save_file(const std::string& path, const AlgebraFile& file);

Json scalar_json(const Scalar& s);
Json vector_json(const Vector& v);
Json matrix_json(const Matrix& m);

}  // namespace lietrip::io
