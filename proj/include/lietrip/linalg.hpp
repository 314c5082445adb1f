#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "lietrip/matrix.hpp"

namespace lietrip {

struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form; pivot columns strictly increasing.
EchelonForm rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Particular solution of m*x = rhs with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Left null vector y with y^T m = 0 and y . rhs != 0. Its existence proves
/// that m*x = rhs has no solution.
struct Inconsistency {
  Vector witness;
};

std::variant<Vector, Inconsistency> solve_or_certify(const Matrix& m, const Vector& rhs);

/// Subspace of F^n stored by its canonical RREF basis, so equal subspaces
/// have equal representations.
class Subspace {
 public:
  /// Row span of `generators` (any number of rows, any rank).
  explicit Subspace(const Matrix& generators);

  static Subspace span(FieldSpec f, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace zero(FieldSpec f, std::size_t ambient);
  static Subspace full(FieldSpec f, std::size_t ambient);
  /// Span of the unit vectors e_first .. e_{first+count-1}.
  static Subspace coordinate(FieldSpec f, std::size_t ambient, std::size_t first, std::size_t count);

  FieldSpec field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  /// Rows form the RREF basis.
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Coordinates of v in the RREF basis, nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}
Subspace kernel_basis(const Matrix& m);
/// Column span of m.
Subspace image(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);

/// Quotient F^n / kernel. Coset representatives are the unit vectors at the
/// non-pivot columns of the kernel's RREF basis.
class QuotientSpace {
 public:
  QuotientSpace(std::size_t ambient, Subspace kernel);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return free_columns_.size(); }
  const Subspace& kernel() const { return kernel_; }
  /// dim x ambient; row k is the representative of quotient basis vector k.
  const Matrix& coset_reps() const { return reps_; }
  /// dim x ambient
  const Matrix& projection() const { return projection_; }
  /// ambient x dim
  const Matrix& section() const { return section_; }
  const std::vector<std::size_t>& free_columns() const { return free_columns_; }

  Vector project(const Vector& v) const { return projection_ * v; }
  Vector lift(const Vector& coords) const { return section_ * coords; }

 private:
  std::size_t ambient_;
  Subspace kernel_;
  std::vector<std::size_t> free_columns_;
  Matrix reps_;
  Matrix projection_;
  Matrix section_;
};

QuotientSpace quotient(std::size_t ambient, const Subspace& a);

}  // namespace lietrip
