#pragma once

#include <random>
#include <vector>

#include "lietrip/cohom.hpp"
#include "lietrip/corpus.hpp"
#include "lietrip/embed.hpp"
#include "lietrip/linalg.hpp"
#include "oracle/oracle.hpp"

namespace support {

using namespace lietrip;

inline const FieldSpec kQ = FieldSpec::rationals();

inline Matrix random_matrix(FieldSpec f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, long lo = -3,
                            long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(f, d(rng));
  return m;
}

inline Matrix random_invertible(FieldSpec f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, n, rng, -2, 2);
    if (rank(m) == n) return m;
  }
}

inline Vector random_vector(FieldSpec f, std::size_t n, std::mt19937_64& rng) {
  return random_matrix(f, n, 1, rng).column(0);
}

/// Inverse of a square invertible matrix.
inline Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix out(m.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) out.set_column(j, *solve(m, unit_vector(m.field(), n, j)));
  return out;
}

/// T rewritten in the basis formed by the columns of p:
/// [a,b,c]' = p^-1 [pa, pb, pc].
inline LieTripleSystem transport(const LieTripleSystem& t, const Matrix& p) {
  const std::size_t n = t.dim();
  const Matrix pinv = inverse(p);
  LieTripleSystem::Tensor out;
  out.reserve(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector v = pinv * triple_bracket(t, p.column(i), p.column(j), p.column(k));
        out.insert(out.end(), v.begin(), v.end());
      }
  return LieTripleSystem::make(t.field(), n, std::move(out));
}

/// Graded hom that is bijective.
inline bool is_graded_iso(const Matrix& m, const GradedLieAlgebra& k, const GradedLieAlgebra& l) {
  return m.rows() == m.cols() && rank(m) == m.rows() && is_graded_hom(m, k, l);
}

/// Re-evaluates one identity on a witness tuple straight from the tensor.
inline bool identity_fails(const LieTripleSystem& t, LtsIdentity id, const std::vector<std::size_t>& w) {
  std::vector<Vector> v;
  for (std::size_t i : w) v.push_back(unit_vector(t.field(), t.dim(), i));
  auto br = [&](const Vector& a, const Vector& b, const Vector& c) { return triple_bracket(t, a, b, c); };
  switch (id) {
    case LtsIdentity::Alternating:
      return !is_zero(br(v[0], v[0], v[2]));
    case LtsIdentity::Linearized:
      return !is_zero(br(v[0], v[1], v[2]) + br(v[1], v[0], v[2]));
    case LtsIdentity::Cyclic:
      return !is_zero(br(v[0], v[1], v[2]) + br(v[1], v[2], v[0]) + br(v[2], v[0], v[1]));
    case LtsIdentity::Derivation:
      return !is_zero(br(v[0], v[1], br(v[2], v[3], v[4])) - br(br(v[0], v[1], v[2]), v[3], v[4]) -
                      br(v[2], br(v[0], v[1], v[3]), v[4]) - br(v[2], v[3], br(v[0], v[1], v[4])));
  }
  return false;
}

/// Corpus triple systems used throughout the tests.
inline std::vector<std::pair<std::string, LieTripleSystem>> corpus_lts(FieldSpec f = kQ) {
  return {{"abl(1)", corpus::abl(f, 1)}, {"abl(2)", corpus::abl(f, 2)}, {"abl(3)", corpus::abl(f, 3)},
          {"abl(4)", corpus::abl(f, 4)}, {"odd2", corpus::odd2(f)},      {"sl2lts", corpus::sl2lts(f)}};
}

/// sl2pair is left out in characteristic 2, where its basis degenerates.
inline std::vector<std::pair<std::string, GradedLieAlgebra>> corpus_graded(FieldSpec f = kQ) {
  std::vector<std::pair<std::string, GradedLieAlgebra>> out = {
      {"heis", corpus::heis(f)}, {"ab2", corpus::ab2(f)},         {"sl2graded", corpus::sl2graded(f)},
      {"sl2", corpus::sl2(f)},   {"sl2line", corpus::sl2line(f)}};
  if (f.characteristic() != 2) out.emplace_back("sl2pair", corpus::sl2pair(f));
  return out;
}

/// Odd-generated graded algebras from the corpus.
inline std::vector<std::pair<std::string, GradedLieAlgebra>> corpus_odd_generated(FieldSpec f = kQ) {
  return {{"heis", corpus::heis(f)}, {"ab2", corpus::ab2(f)}, {"sl2graded", corpus::sl2graded(f)},
          {"sl2pair", corpus::sl2pair(f)}};
}

/// Even block of the unique extension, found by solving
/// G * [iota a, iota b]_even = [alpha a, alpha b] for all basis pairs.
/// Returns the solution and the dimension of the solution space's
/// homogeneous part.
inline std::pair<std::optional<Matrix>, std::size_t> solve_even_block(const UniversalImbedding& u,
                                                                      const GradedLieAlgebra& l,
                                                                      const Matrix& alpha) {
  const auto f = l.field();
  const std::size_t n = u.lts.dim(), q = u.algebra.even_dim(), l0 = l.even_dim();
  auto lift = [&](const GradedLieAlgebra& a, const Vector& odd) {
    return graded_vector(a, zero_vector(f, a.even_dim()), odd);
  };
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector src = u.algebra.bracket(u.iota.column(i), u.iota.column(j));
      const Vector dst = l.bracket(lift(l, alpha.column(i)), lift(l, alpha.column(j)));
      for (std::size_t r = 0; r < l0; ++r) {
        Vector row = zero_vector(f, l0 * q);
        for (std::size_t c = 0; c < q; ++c) row[r * q + c] = src[c];
        rows.push_back(std::move(row));
        rhs.push_back(dst[r]);
      }
    }
  if (l0 * q == 0) return {Matrix(f, l0, q), 0};
  const Matrix sys = Matrix::from_rows(f, l0 * q, rows);
  const std::size_t freedom = l0 * q - rank(sys);
  auto x = solve(sys, rhs);
  if (!x) return {std::nullopt, freedom};
  return {Matrix::unflatten(f, l0, q, *x), freedom};
}

}  // namespace support
