#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lietrip/linalg.hpp"

namespace lietrip {

class GradedLieAlgebra;

/// Lie triple system given by structure constants:
/// [e_i, e_j, e_k] = sum_l at(i, j, k, l) e_l.
class LieTripleSystem {
 public:
  /// Dense n^4 tensor, index ((i*n + j)*n + k)*n + l.
  using Tensor = std::vector<Scalar>;

  /// Validated construction; throws InvalidStructure with a witness when an
  /// axiom fails.
  static LieTripleSystem make(FieldSpec f, std::size_t n, Tensor t);
  /// Stores the tensor as given. Used for negative tests and `--unchecked`.
  static LieTripleSystem unchecked(FieldSpec f, std::size_t n, Tensor t);
  static LieTripleSystem abelian(FieldSpec f, std::size_t n);

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return n_; }
  const Tensor& tensor() const { return t_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return t_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  Vector basis_bracket(std::size_t i, std::size_t j, std::size_t k) const;

  friend bool operator==(const LieTripleSystem&, const LieTripleSystem&) = default;

 private:
  LieTripleSystem(FieldSpec f, std::size_t n, Tensor t);

  FieldSpec field_;
  std::size_t n_;
  Tensor t_;
};

/// Trilinear extension of the structure tensor.
Vector triple_bracket(const LieTripleSystem& t, const Vector& a, const Vector& b, const Vector& c);

enum class LtsIdentity {
  Alternating,  // [a,a,b] = 0
  Linearized,   // [a,b,c] + [b,a,c] = 0
  Cyclic,       // [a,b,c] + [b,c,a] + [c,a,b] = 0
  Derivation,   // [a,b,[c,d,e]] = [[a,b,c],d,e] + [c,[a,b,d],e] + [c,d,[a,b,e]]
};

std::string to_string(LtsIdentity id);

struct AxiomViolation {
  LtsIdentity identity;
  std::vector<std::size_t> witness;  // basis indices
  Vector defect;                     // lhs - rhs on the witness
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every identity on all basis tuples. At most `max_per_identity`
/// witnesses are recorded for each identity.
AxiomReport check_lts_axioms(const LieTripleSystem& t, std::size_t max_per_identity = 8);

/// Matrix of c -> [a, b, c].
Matrix inner_derivation(const LieTripleSystem& t, const Vector& a, const Vector& b);
Matrix inner_derivation(const LieTripleSystem& t, std::size_t i, std::size_t j);

bool is_derivation(const LieTripleSystem& t, const Matrix& d);

/// The Lie algebra Der(T) of all derivations, with a deterministic basis
/// (RREF of the solution space, matrices flattened row-major) and its
/// commutator table.
struct DerivationAlgebra {
  std::vector<Matrix> basis;
  /// [basis[i], basis[j]] = sum_k bracket[(i*d + j)*d + k] basis[k]
  std::vector<Scalar> bracket;
  Subspace span;  // flattened basis, ambient n^2

  std::size_t dim() const { return basis.size(); }
  Vector coordinates(const Matrix& d) const;
};

DerivationAlgebra derivation_algebra(const LieTripleSystem& t);

/// Inner derivations as a subspace of End(T) (flattened), with the result
/// of checking [D, D_{a,b}] = D_{Da,b} + D_{a,Db} inside the span for every
/// derivation basis element D and basis pair (a, b).
struct InnerDerivations {
  Subspace span;
  bool ideal_certified = false;

  std::size_t dim() const { return span.dim(); }
};

InnerDerivations inder_algebra(const LieTripleSystem& t, const DerivationAlgebra& der);
InnerDerivations inder_algebra(const LieTripleSystem& t);

/// alpha([e_i,e_j,e_k]) = [alpha e_i, alpha e_j, alpha e_k] on all basis triples.
/// alpha is target.dim() x source.dim().
bool is_lts_hom(const Matrix& alpha, const LieTripleSystem& source, const LieTripleSystem& target);

struct LtsHom {
  LieTripleSystem source;
  LieTripleSystem target;
  Matrix matrix;

  /// Throws InvalidStructure when the hom law fails.
  static LtsHom make(LieTripleSystem source, LieTripleSystem target, Matrix matrix);
  static LtsHom identity(const LieTripleSystem& t);

  friend bool operator==(const LtsHom&, const LtsHom&) = default;
};

/// beta o alpha
LtsHom compose(const LtsHom& beta, const LtsHom& alpha);

/// [a,b,c] = [[a,b],c] on the whole algebra (the grading is ignored).
LieTripleSystem lts_of_lie(const GradedLieAlgebra& l);

/// The odd component with [a,b,c] = [[a,b],c].
LieTripleSystem odd_part_lts(const GradedLieAlgebra& l);

}  // namespace lietrip
