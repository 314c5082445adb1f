#include "lietrip/linalg.hpp"

#include <string>

#include "lietrip/error.hpp"

namespace lietrip {

EchelonForm rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    const Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows())
    throw DimensionError("solve: rhs length " + std::to_string(rhs.size()) + " vs " +
                         std::to_string(m.rows()) + " rows");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red(r, m.cols());
  return x;
}

std::variant<Vector, Inconsistency> solve_or_certify(const Matrix& m, const Vector& rhs) {
  if (auto x = solve(m, rhs)) return *x;
  const Subspace left = kernel_basis(m.transpose());
  for (std::size_t i = 0; i < left.dim(); ++i) {
    Vector y = left.basis_vector(i);
    Scalar dot = Scalar::zero(m.field());
    for (std::size_t r = 0; r < y.size(); ++r) dot += y[r] * rhs[r];
    if (!dot.is_zero()) return Inconsistency{std::move(y)};
  }
  throw InternalError("solve_or_certify: inconsistent system without a left-null witness");
}

Subspace::Subspace(const Matrix& generators) : basis_(generators.field(), 0, generators.cols()) {
  auto [red, pivots] = rref(generators);
  basis_ = red.block(0, 0, pivots.size(), red.cols());
  pivots_ = std::move(pivots);
}

Subspace Subspace::span(FieldSpec f, std::size_t ambient, const std::vector<Vector>& vectors) {
  return Subspace(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::zero(FieldSpec f, std::size_t ambient) { return Subspace(Matrix(f, 0, ambient)); }

Subspace Subspace::full(FieldSpec f, std::size_t ambient) {
  return Subspace(Matrix::identity(f, ambient));
}

Subspace Subspace::coordinate(FieldSpec f, std::size_t ambient, std::size_t first, std::size_t count) {
  Matrix m(f, count, ambient);
  for (std::size_t i = 0; i < count; ++i) m(i, first + i) = Scalar::one(f);
  return Subspace(m);
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim())
    throw DimensionError("subspace coordinates: vector length " + std::to_string(v.size()) +
                         " vs ambient " + std::to_string(ambient_dim()));
  Vector coords;
  coords.reserve(dim());
  Vector rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    coords.push_back(v[pivots_[i]]);
    axpy(rest, -coords.back(), basis_.row(i));
  }
  if (!lietrip::is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim() || !(field() == other.field()))
    throw DimensionError("subspace inclusion: ambient mismatch");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!other.contains(basis_.row(i))) return false;
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x = unit_vector(m.field(), m.cols(), f);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -red(r, f);
    vectors.push_back(std::move(x));
  }
  return Subspace::span(m.field(), m.cols(), vectors);
}

Subspace image(const Matrix& m) { return Subspace(m.transpose()); }

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
    throw DimensionError("subspace operation: ambient mismatch (" + std::to_string(a.ambient_dim()) +
                         " vs " + std::to_string(b.ambient_dim()) + ")");
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return Subspace(vstack({a.basis(), b.basis()}));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const auto f = a.field();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(f, a.ambient_dim());
  // x^T A = y^T B  <=>  [A^T | -B^T] (x, y) = 0
  const Matrix system = hstack({a.basis().transpose(), (-Scalar::one(f)) * b.basis().transpose()});
  const Subspace k = kernel_basis(system);
  std::vector<Vector> vectors;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const Vector xy = k.basis_vector(i);
    Vector v = zero_vector(f, a.ambient_dim());
    for (std::size_t j = 0; j < a.dim(); ++j) axpy(v, xy[j], a.basis_vector(j));
    vectors.push_back(std::move(v));
  }
  return Subspace::span(f, a.ambient_dim(), vectors);
}

bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }

QuotientSpace::QuotientSpace(std::size_t ambient, Subspace kernel)
    : ambient_(ambient),
      kernel_(std::move(kernel)),
      reps_(kernel_.field(), 0, ambient),
      projection_(kernel_.field(), 0, ambient),
      section_(kernel_.field(), ambient, 0) {
  if (kernel_.ambient_dim() != ambient) throw DimensionError("quotient: ambient mismatch");
  const auto f = kernel_.field();
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : kernel_.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free_columns_.push_back(c);
  const std::size_t q = free_columns_.size();
  reps_ = Matrix(f, q, ambient);
  section_ = Matrix(f, ambient, q);
  projection_ = Matrix(f, q, ambient);
  for (std::size_t k = 0; k < q; ++k) {
    reps_(k, free_columns_[k]) = Scalar::one(f);
    section_(free_columns_[k], k) = Scalar::one(f);
    projection_(k, free_columns_[k]) = Scalar::one(f);
  }
  // e_pivot is congruent to e_pivot - row = -sum over free columns of row entries
  const Matrix& basis = kernel_.basis();
  for (std::size_t r = 0; r < kernel_.dim(); ++r) {
    const std::size_t p = kernel_.pivots()[r];
    for (std::size_t k = 0; k < q; ++k) projection_(k, p) = -basis(r, free_columns_[k]);
  }
}

QuotientSpace quotient(std::size_t ambient, const Subspace& a) { return QuotientSpace(ambient, a); }

}  // namespace lietrip
