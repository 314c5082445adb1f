#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lietrip/embed.hpp"
#include "lietrip/grlie.hpp"
#include "lietrip/linalg.hpp"

namespace lietrip {

/// Strictly increasing index tuples of length n from {0..count-1}, in
/// lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t count, std::size_t n);

/// Alternating n-cochain L^n -> M stored on increasing basis tuples:
/// values[t] = f(e_{t_1}, ..., e_{t_n}) in module coordinates, with t running
/// over increasing_tuples(L.dim(), n).
struct Cochain {
  std::size_t degree;
  GradedModule module;
  std::vector<Vector> values;

  const GradedLieAlgebra& algebra() const { return module.algebra(); }
  /// f on an arbitrary basis tuple (zero on repeats, sign on permutations).
  Vector evaluate(const std::vector<std::size_t>& args) const;
  /// f(L_{i1}, ..., L_{in}) inside M_{i1+...+in}.
  bool is_graded() const;
  /// values concatenated, length C(N, n) * dim M.
  Vector flat() const;
  static Cochain from_flat(const GradedModule& m, std::size_t degree, const Vector& flat);
  static Cochain zero(const GradedModule& m, std::size_t degree);

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Basis of GrHom(^n L, M): unit cochains at grade-compatible (tuple, module
/// index) positions, ordered by tuple then module index. n in {1,2,3}.
std::vector<Cochain> graded_cochain_basis(const GradedModule& m, std::size_t n);
/// The same space as a coordinate subspace of the flat cochain space.
Subspace graded_cochain_space(const GradedModule& m, std::size_t n);

/// Matrix of delta: C^n -> C^{n+1} on flat coordinates, n in {1,2}.
Matrix coboundary_matrix(const GradedModule& m, std::size_t n);
Cochain coboundary(const Cochain& f);

struct H2Result {
  std::size_t dim;
  Subspace cocycles;     // Z^2_gr, flat coordinates
  Subspace coboundaries; // B^2_gr
  std::vector<Cochain> representatives;
};

H2Result h2_gr(const GradedModule& m);
/// Trivial coefficients k with k = k_0.
H2Result h2_gr(const GradedLieAlgebra& l);

/// A surjective graded hom K -> L with Ker in K_0 and central in K.
struct CentralExtensionProblem {
  GradedLieAlgebra total;
  GradedLieAlgebra base;
  GradedHom phi;
  Subspace kernel;

  /// Throws InvalidStructure unless phi is a central 0-extension.
  static CentralExtensionProblem make(const GradedHom& phi);
};

/// L x_sigma M with [x+m, y+n] = [x,y] + sigma(x,y), graded (L0 + M) + L1.
/// Global order: L0, M, L1. M must be trivial with M = M0 and sigma a graded
/// 2-cocycle, otherwise InvalidStructure.
CentralExtensionProblem cocycle_extension(const Cochain& sigma);

struct SplitResult {
  std::optional<GradedHom> psi;
  /// Defect cocycle sigma(x,y) = [eta x, eta y] - eta[x,y] in kernel
  /// coordinates, as a 2-cochain with trivial coefficients of dim Ker.
  Cochain sigma;
  /// Left null vector of the linear system sigma = tau o [,] when no
  /// splitting exists.
  std::optional<Vector> certificate;

  bool split() const { return psi.has_value(); }
};

SplitResult split_central_0_extension(const CentralExtensionProblem& prob);

bool is_0_centrally_closed(const GradedLieAlgebra& l);

struct TheoremAReport {
  bool generated_by_odd;
  std::size_t h2_dim;
  bool verdict;
  /// upsilon_hat: A(L1) -> L, present whenever L is generated by L1.
  std::optional<UniversalCentralExtension> extension;
  /// Present when verdict holds: the isomorphism A(L1) -> L.
  std::optional<GradedHom> witness;
};

TheoremAReport theorem_a_predicate(const GradedLieAlgebra& l);

}  // namespace lietrip
