#include "lietrip/corpus.hpp"

#include <charconv>
#include <stdexcept>

#include "lietrip/embed.hpp"

namespace lietrip::corpus {

namespace {

GradedLieAlgebra from_brackets(FieldSpec f, std::size_t n0, std::size_t n1,
                               std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, long>> rules) {
  const std::size_t n = n0 + n1;
  GradedLieAlgebra::Tensor t(n * n * n, Scalar::zero(f));
  for (const auto& [i, j, k, c] : rules) {
    t[(i * n + j) * n + k] += Scalar(f, c);
    t[(j * n + i) * n + k] -= Scalar(f, c);
  }
  return GradedLieAlgebra::make(f, n0, n1, std::move(t));
}

bool strip_call(const std::string& name, const std::string& head, std::string& arg) {
  if (name.size() < head.size() + 2 || name.compare(0, head.size() + 1, head + "(") != 0 || name.back() != ')')
    return false;
  arg = name.substr(head.size() + 1, name.size() - head.size() - 2);
  return true;
}

}  // namespace

LieTripleSystem abl(FieldSpec f, std::size_t n) { return LieTripleSystem::abelian(f, n); }

LieTripleSystem odd2(FieldSpec f) { return odd_part_lts(sl2graded(f)); }

LieTripleSystem sl2lts(FieldSpec f) { return lts_of_lie(sl2(f)); }

GradedLieAlgebra sl2(FieldSpec f) { return from_brackets(f, 3, 0, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}); }

GradedLieAlgebra sl2graded(FieldSpec f) {
  return from_brackets(f, 1, 2, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}});
}

GradedLieAlgebra heis(FieldSpec f) { return from_brackets(f, 1, 2, {{1, 2, 0, 1}}); }

GradedLieAlgebra ab2(FieldSpec f) { return GradedLieAlgebra::abelian(f, 0, 2); }

GradedLieAlgebra sl2line(FieldSpec f) { return direct_sum(sl2graded(f), GradedLieAlgebra::abelian(f, 1, 0)); }

GradedLieAlgebra sl2pair(FieldSpec f) {
  if (f.characteristic() == 2) throw std::domain_error("corpus: sl2pair needs characteristic other than 2");
  const GradedLieAlgebra sum = direct_sum(sl2(f), sl2(f));
  Matrix basis(f, 6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    basis(i, i) = Scalar::one(f);
    basis(3 + i, i) = Scalar::one(f);
    basis(i, 3 + i) = Scalar::one(f);
    basis(3 + i, 3 + i) = -Scalar::one(f);
  }
  return change_basis(sum, basis, 3);
}

Entry lookup(const std::string& name, FieldSpec f) {
  std::string arg;
  if (strip_call(name, "abl", arg)) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || n == 0)
      throw UnknownName("corpus: bad dimension in '" + name + "'");
    return abl(f, n);
  }
  if (strip_call(name, "a_of", arg)) {
    const Entry inner = lookup(arg, f);
    if (!std::holds_alternative<LieTripleSystem>(inner))
      throw UnknownName("corpus: a_of expects a triple system, got '" + arg + "'");
    return universal_algebra(std::get<LieTripleSystem>(inner)).algebra;
  }
  if (name == "odd2") return odd2(f);
  if (name == "sl2lts") return sl2lts(f);
  if (name == "heis") return heis(f);
  if (name == "ab2") return ab2(f);
  if (name == "sl2graded") return sl2graded(f);
  if (name == "sl2") return sl2(f);
  if (name == "sl2line") return sl2line(f);
  if (name == "sl2pair") return sl2pair(f);
  throw UnknownName("corpus: unknown name '" + name + "'");
}

std::vector<std::string> names() {
  return {"abl(1)", "abl(2)", "abl(3)", "abl(4)", "odd2",  "sl2lts", "heis",
          "ab2",    "sl2graded", "sl2", "sl2line", "sl2pair"};
}

}  // namespace lietrip::corpus
