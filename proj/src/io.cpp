#include "lietrip/io.hpp"

#include <fstream>
#include <sstream>

#include "lietrip/error.hpp"

namespace lietrip::io {

namespace {

Json tensor_json(const std::vector<Scalar>& t, std::size_t n, std::size_t depth, std::size_t offset = 0) {
  Json out = Json::array();
  std::size_t stride = 1;
  for (std::size_t d = 1; d < depth; ++d) stride *= n;
  for (std::size_t i = 0; i < n; ++i) {
    if (depth == 1)
      out.push_back(scalar_json(t[offset + i]));
    else
      out.push_back(tensor_json(t, n, depth - 1, offset + i * stride));
  }
  return out;
}

Json header(const std::string& kind, FieldSpec f, const std::string& name) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind;
  if (!name.empty()) j["name"] = name;
  j["field"] = f.tag();
  return j;
}

Json lts_json(const LieTripleSystem& t, const std::string& name) {
  Json j = header("lts", t.field(), name);
  j["dim"] = t.dim();
  j["tensor"] = tensor_json(t.tensor(), t.dim(), 4);
  return j;
}

Json lie_json(const GradedLieAlgebra& l, const std::string& name) {
  Json j = header("graded_lie", l.field(), name);
  j["dims"] = {l.even_dim(), l.odd_dim()};
  j["tensor"] = tensor_json(l.tensor(), l.dim(), 3);
  return j;
}

Json module_json(const GradedModule& m, const std::string& name) {
  Json j = header("module", m.algebra().field(), name);
  j["algebra"] = lie_json(m.algebra(), {});
  j["dims"] = {m.even_dim(), m.odd_dim()};
  Json action = Json::array();
  for (const auto& a : m.action()) action.push_back(matrix_json(a));
  j["action"] = std::move(action);
  return j;
}

// reading

struct Ctx {
  const LoadOptions& opts;
};

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw FormatError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t read_count(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar read_scalar(const Json& j, FieldSpec f, const std::string& path) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_integer())
    text = std::to_string(j.get<long long>());
  else
    fail(path, "expected an exact scalar string");
  try {
    return Scalar::parse(f, text);
  } catch (const std::domain_error& e) {
    throw std::domain_error(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

const Json& array_of(const Json& j, std::size_t len, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != len) fail(path, "expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
  return j;
}

void read_tensor(const Json& j, FieldSpec f, std::size_t n, std::size_t depth, const std::string& path,
                 std::vector<Scalar>& out) {
  array_of(j, n, path);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (depth == 1)
      out.push_back(read_scalar(j[i], f, p));
    else
      read_tensor(j[i], f, n, depth - 1, p, out);
  }
}

Vector read_vector(const Json& j, FieldSpec f, std::size_t len, const std::string& path) {
  array_of(j, len, path);
  Vector v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(read_scalar(j[i], f, path + "/" + std::to_string(i)));
  return v;
}

Matrix read_matrix(const Json& j, FieldSpec f, std::size_t rows, std::size_t cols, const std::string& path) {
  array_of(j, rows, path);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, read_vector(j[r], f, cols, path + "/" + std::to_string(r)));
  return m;
}

std::pair<std::size_t, std::size_t> read_dims(const Json& j, const std::string& path) {
  array_of(j, 2, path);
  return {read_count(j[0], path + "/0"), read_count(j[1], path + "/1")};
}

FieldSpec read_field(const Json& j, const Ctx& ctx, const std::string& path) {
  if (ctx.opts.field) return *ctx.opts.field;
  const Json& tag = member(j, "field", path);
  if (!tag.is_string()) fail(path + "/field", "expected a field tag");
  try {
    return FieldSpec::parse(tag.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path + "/field", e.what());
  }
}

void expect_kind(const Json& j, const std::string& kind, const std::string& path) {
  const Json& k = member(j, "kind", path);
  if (!k.is_string() || k.get<std::string>() != kind) fail(path + "/kind", "expected kind \"" + kind + "\"");
}

LieTripleSystem read_lts(const Json& j, const Ctx& ctx, const std::string& path) {
  expect_kind(j, "lts", path);
  const FieldSpec f = read_field(j, ctx, path);
  const std::size_t n = read_count(member(j, "dim", path), path + "/dim");
  std::vector<Scalar> t;
  read_tensor(member(j, "tensor", path), f, n, 4, path + "/tensor", t);
  return ctx.opts.unchecked ? LieTripleSystem::unchecked(f, n, std::move(t)) : LieTripleSystem::make(f, n, std::move(t));
}

GradedLieAlgebra read_lie(const Json& j, const Ctx& ctx, const std::string& path) {
  expect_kind(j, "graded_lie", path);
  const FieldSpec f = read_field(j, ctx, path);
  const auto [n0, n1] = read_dims(member(j, "dims", path), path + "/dims");
  std::vector<Scalar> t;
  read_tensor(member(j, "tensor", path), f, n0 + n1, 3, path + "/tensor", t);
  return ctx.opts.unchecked ? GradedLieAlgebra::unchecked(f, n0, n1, std::move(t))
                            : GradedLieAlgebra::make(f, n0, n1, std::move(t));
}

GradedModule read_module(const Json& j, const Ctx& ctx, const std::string& path) {
  expect_kind(j, "module", path);
  GradedLieAlgebra l = read_lie(member(j, "algebra", path), ctx, path + "/algebra");
  const auto [m0, m1] = read_dims(member(j, "dims", path), path + "/dims");
  const Json& action = array_of(member(j, "action", path), l.dim(), path + "/action");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < l.dim(); ++i)
    mats.push_back(read_matrix(action[i], l.field(), m0 + m1, m0 + m1, path + "/action/" + std::to_string(i)));
  return ctx.opts.unchecked ? GradedModule::unchecked(std::move(l), m0, m1, std::move(mats))
                            : GradedModule::make(std::move(l), m0, m1, std::move(mats));
}

Object read_object(const Json& j, const Ctx& ctx) {
  const Json& kind = member(j, "kind", "");
  if (!kind.is_string()) fail("/kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "lts") return read_lts(j, ctx, "");
  if (k == "graded_lie") return read_lie(j, ctx, "");
  if (k == "module") return read_module(j, ctx, "");
  if (k == "lts_hom") {
    LieTripleSystem s = read_lts(member(j, "source", ""), ctx, "/source");
    LieTripleSystem t = read_lts(member(j, "target", ""), ctx, "/target");
    Matrix m = read_matrix(member(j, "matrix", ""), s.field(), t.dim(), s.dim(), "/matrix");
    if (ctx.opts.unchecked) return LtsHom{std::move(s), std::move(t), std::move(m)};
    return LtsHom::make(std::move(s), std::move(t), std::move(m));
  }
  if (k == "graded_hom") {
    GradedLieAlgebra s = read_lie(member(j, "source", ""), ctx, "/source");
    GradedLieAlgebra t = read_lie(member(j, "target", ""), ctx, "/target");
    Matrix m = read_matrix(member(j, "matrix", ""), s.field(), t.dim(), s.dim(), "/matrix");
    if (ctx.opts.unchecked) return GradedHom{std::move(s), std::move(t), std::move(m)};
    return GradedHom::make(std::move(s), std::move(t), std::move(m));
  }
  if (k == "cochain") {
    GradedModule m = read_module(member(j, "module", ""), ctx, "/module");
    const std::size_t degree = read_count(member(j, "degree", ""), "/degree");
    if (degree < 1 || degree > 3) fail("/degree", "supported degrees are 1, 2 and 3");
    const auto tuples = increasing_tuples(m.algebra().dim(), degree);
    const Json& values = array_of(member(j, "values", ""), tuples.size(), "/values");
    Vector flat;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      Vector v = read_vector(values[t], m.algebra().field(), m.dim(), "/values/" + std::to_string(t));
      flat.insert(flat.end(), v.begin(), v.end());
    }
    return Cochain::from_flat(m, degree, flat);
  }
  fail("/kind", "unknown kind \"" + k + "\"");
}

}  // namespace

std::string kind_of(const Object& o) {
  switch (o.index()) {
    case 0: return "lts";
    case 1: return "graded_lie";
    case 2: return "lts_hom";
    case 3: return "graded_hom";
    case 4: return "module";
    default: return "cochain";
  }
}

Json scalar_json(const Scalar& s) { return s.to_string(); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Json to_json(const Object& o, const std::string& name) {
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LieTripleSystem>) {
          return lts_json(x, name);
        } else if constexpr (std::is_same_v<T, GradedLieAlgebra>) {
          return lie_json(x, name);
        } else if constexpr (std::is_same_v<T, GradedModule>) {
          return module_json(x, name);
        } else if constexpr (std::is_same_v<T, LtsHom>) {
          Json j = header("lts_hom", x.source.field(), name);
          j["source"] = lts_json(x.source, {});
          j["target"] = lts_json(x.target, {});
          j["matrix"] = matrix_json(x.matrix);
          return j;
        } else if constexpr (std::is_same_v<T, GradedHom>) {
          Json j = header("graded_hom", x.source.field(), name);
          j["source"] = lie_json(x.source, {});
          j["target"] = lie_json(x.target, {});
          j["matrix"] = matrix_json(x.matrix);
          return j;
        } else {
          Json j = header("cochain", x.algebra().field(), name);
          j["module"] = module_json(x.module, {});
          j["degree"] = x.degree;
          j["tuples"] = increasing_tuples(x.algebra().dim(), x.degree);
          Json values = Json::array();
          for (const auto& v : x.values) values.push_back(vector_json(v));
          j["values"] = std::move(values);
          return j;
        }
      },
      o);
}

Json to_json(const AlgebraFile& file) { return to_json(file.object, file.name); }

AlgebraFile from_json(const Json& j, const LoadOptions& opts) {
  const Ctx ctx{opts};
  if (!j.is_object()) fail("", "expected an object");
  if (j.contains("format_version")) {
    const Json& v = j["format_version"];
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
      fail("/format_version", "unsupported format version");
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("/name", "expected a string");
    name = j["name"].get<std::string>();
  }
  return {read_object(j, ctx), std::move(name)};
}

AlgebraFile load_file(const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return from_json(j, opts);
}

void save_file(const std::string& path, const AlgebraFile& file) {
  std::ofstream out(path);
  if (!out) throw FormatError(path + ": cannot write file");
  out << to_json(file).dump(2) << '\n';
}

}  // namespace lietrip::io
