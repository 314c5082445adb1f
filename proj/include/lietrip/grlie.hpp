#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lietrip/linalg.hpp"
#include "lietrip/lts.hpp"

namespace lietrip {

/// Z2-graded Lie algebra by structure constants over the global basis
/// (even basis vectors 0..n0-1, then odd n0..n0+n1-1):
/// [e_i, e_j] = sum_k at(i, j, k) e_k.
class GradedLieAlgebra {
 public:
  using Tensor = std::vector<Scalar>;

  /// Validated construction; throws InvalidStructure with a witness.
  static GradedLieAlgebra make(FieldSpec f, std::size_t n0, std::size_t n1, Tensor t);
  static GradedLieAlgebra unchecked(FieldSpec f, std::size_t n0, std::size_t n1, Tensor t);
  static GradedLieAlgebra abelian(FieldSpec f, std::size_t n0, std::size_t n1);

  FieldSpec field() const { return field_; }
  std::size_t even_dim() const { return n0_; }
  std::size_t odd_dim() const { return n1_; }
  std::size_t dim() const { return n0_ + n1_; }
  const Tensor& tensor() const { return t_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return t_[(i * dim() + j) * dim() + k];
  }
  /// 0 for even basis indices, 1 for odd.
  int degree(std::size_t i) const { return i < n0_ ? 0 : 1; }

  Vector basis_bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of y -> [x, y].
  Matrix ad(const Vector& x) const;

  Subspace even_part() const;
  Subspace odd_part() const;

  friend bool operator==(const GradedLieAlgebra&, const GradedLieAlgebra&) = default;

 private:
  GradedLieAlgebra(FieldSpec f, std::size_t n0, std::size_t n1, Tensor t);

  FieldSpec field_;
  std::size_t n0_;
  std::size_t n1_;
  Tensor t_;
};

enum class LieIdentity { Alternating, Antisymmetry, Jacobi, Grading };

std::string to_string(LieIdentity id);

struct LieViolation {
  LieIdentity identity;
  std::vector<std::size_t> witness;
};

struct LieReport {
  std::vector<LieViolation> violations;
  bool ok() const { return violations.empty(); }
};

LieReport check_graded_lie(const GradedLieAlgebra& l, std::size_t max_per_identity = 8);

/// Structure constants of an arbitrary Lie algebra rewritten in a new basis.
/// Columns of `basis` are the new basis vectors in old coordinates; the first
/// n0 of them span the even part. The result is validated.
GradedLieAlgebra change_basis(const GradedLieAlgebra& l, const Matrix& basis, std::size_t n0);

/// Graded homomorphism; matrix is target.dim() x source.dim().
struct GradedHom {
  GradedLieAlgebra source;
  GradedLieAlgebra target;
  Matrix matrix;

  /// Throws InvalidStructure unless the map is graded and a hom.
  static GradedHom make(GradedLieAlgebra source, GradedLieAlgebra target, Matrix matrix);
  static GradedHom identity(const GradedLieAlgebra& l);

  friend bool operator==(const GradedHom&, const GradedHom&) = default;
};

/// Empty string when `m` is a graded hom K -> L, otherwise a description of
/// the first failure.
std::string graded_hom_defect(const Matrix& m, const GradedLieAlgebra& k, const GradedLieAlgebra& l);
bool is_graded_hom(const Matrix& m, const GradedLieAlgebra& k, const GradedLieAlgebra& l);

/// psi o phi
GradedHom compose(const GradedHom& psi, const GradedHom& phi);

/// Graded module: action[i] is the endomorphism rho(e_i) of M, with M's
/// basis ordered even first.
class GradedModule {
 public:
  /// Validated: representation law and rho(L_i) M_j in M_{i+j}.
  static GradedModule make(GradedLieAlgebra algebra, std::size_t m0, std::size_t m1,
                           std::vector<Matrix> action);
  static GradedModule unchecked(GradedLieAlgebra algebra, std::size_t m0, std::size_t m1,
                                std::vector<Matrix> action);
  /// Zero action, M = M0 of dimension `dim`.
  static GradedModule trivial(const GradedLieAlgebra& algebra, std::size_t dim);
  static GradedModule adjoint(const GradedLieAlgebra& algebra);

  const GradedLieAlgebra& algebra() const { return algebra_; }
  std::size_t even_dim() const { return m0_; }
  std::size_t odd_dim() const { return m1_; }
  std::size_t dim() const { return m0_ + m1_; }
  int degree(std::size_t i) const { return i < m0_ ? 0 : 1; }
  const std::vector<Matrix>& action() const { return action_; }
  bool is_trivial() const;

  /// rho(x) for an arbitrary algebra element.
  Matrix rho(const Vector& x) const;

  friend bool operator==(const GradedModule&, const GradedModule&) = default;

 private:
  GradedModule(GradedLieAlgebra algebra, std::size_t m0, std::size_t m1, std::vector<Matrix> action);

  GradedLieAlgebra algebra_;
  std::size_t m0_;
  std::size_t m1_;
  std::vector<Matrix> action_;
};

/// Empty when the module axioms hold, else a description with a witness.
std::string module_defect(const GradedLieAlgebra& l, std::size_t m0, std::size_t m1,
                          const std::vector<Matrix>& action);

/// Smallest bracket-closed subspace containing s.
Subspace subalgebra_generated(const GradedLieAlgebra& l, const Subspace& s);
/// [L1, L1] + L1
Subspace odd_span_closure(const GradedLieAlgebra& l);
bool is_generated_by_odd(const GradedLieAlgebra& l);
Subspace center(const GradedLieAlgebra& l);

/// (K + U)_i = K_i + U_i; global order K0, U0, K1, U1.
GradedLieAlgebra direct_sum(const GradedLieAlgebra& k, const GradedLieAlgebra& u);

/// Coordinates of K + U in direct_sum(k, u) order.
Vector direct_sum_vector(const GradedLieAlgebra& k, const GradedLieAlgebra& u, const Vector& x,
                         const Vector& y);

/// Graded subalgebra spanned by the given even and odd vectors (which must
/// be linearly independent and lie in L0, L1 respectively). Throws
/// InvalidStructure if the span is not bracket closed.
struct InducedSubalgebra {
  GradedLieAlgebra algebra;
  Matrix inclusion;  // l.dim() x algebra.dim()
};

InducedSubalgebra induced_subalgebra(const GradedLieAlgebra& l, const std::vector<Vector>& even,
                                     const std::vector<Vector>& odd);

struct Pullback {
  GradedLieAlgebra algebra;
  GradedHom to_k;
  GradedHom to_u;
};

/// A = {k + u : phi(k) = upsilon(u)} inside K + U with its two projections.
Pullback graded_pullback(const GradedHom& phi, const GradedHom& upsilon);

struct CentralQuotient {
  GradedLieAlgebra algebra;
  GradedHom projection;
  QuotientSpace space;
};

/// L / I for I central and inside L0.
CentralQuotient quotient_by_graded_central_ideal(const GradedLieAlgebra& l, const Subspace& ideal);

/// The restriction to odd parts, as a hom of the odd-part triple systems.
LtsHom restrict_hom_to_odd(const GradedHom& phi);

/// `v` padded into a graded algebra's coordinates: even part of length n0,
/// odd part of length n1.
Vector graded_vector(const GradedLieAlgebra& l, const Vector& even, const Vector& odd);

}  // namespace lietrip
