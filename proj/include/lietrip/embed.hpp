#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lietrip/grlie.hpp"
#include "lietrip/linalg.hpp"
#include "lietrip/lts.hpp"

namespace lietrip {

/// Ste(T) = Inder(T) + T with [X+a, Y+b] = ([X,Y] + D_{a,b}) + (Xb - Ya).
/// Even basis: the RREF basis of Inder(T) inside End(T).
struct StandardImbedding {
  LieTripleSystem lts;
  InnerDerivations inder;
  std::vector<Matrix> even_basis;  // endomorphisms of T
  GradedLieAlgebra algebra;
  Matrix inclusion;  // algebra.dim() x n, T onto the odd part

  /// Coordinates of an inner derivation in even_basis.
  Vector inder_coordinates(const Matrix& d) const;
};

StandardImbedding standard_imbedding(const LieTripleSystem& t);

/// Generic quotient construction for a module hom lambda: M -> L.
/// A(M) = span{lambda(m).m}; Q = M/A(M) with [p,q] = mu(p).q.
struct LemmaModResult {
  Subspace a;
  QuotientSpace space;
  GradedLieAlgebra algebra;  // Q, trivially graded
  Matrix mu;                 // L.dim() x Q.dim()
};

/// `module` is a module over a trivially graded algebra L and `lambda` is
/// L.dim() x module.dim(). Throws InvalidStructure with a witness pair when
/// lambda(l.m) = [l, lambda(m)] fails; throws InternalError if a conclusion
/// of the construction fails to hold.
LemmaModResult lemma_mod(const GradedModule& module, const Matrix& lambda);

/// Index of e_i ^ e_j (i < j) in the wedge basis ordered lexicographically.
std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n);

/// T ^ T as a module over Der(T) with D.(a^b) = Da^b + a^Db, and
/// lambda(a^b) = D_{a,b} in Der(T) coordinates.
struct WedgeModule {
  DerivationAlgebra der;
  GradedLieAlgebra der_algebra;  // Der(T), trivially graded
  GradedModule module;
  Matrix lambda;  // der.dim() x n(n-1)/2
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

WedgeModule wedge_module(const LieTripleSystem& t);

/// Action of an endomorphism of T on T ^ T.
Matrix wedge_action(const Matrix& endo);

/// <T,T> = (T^T)/A(T^T) with [<a,b>,<c,d>] = <D_{a,b}c,d> + <c,D_{a,b}d>.
struct AngleAlgebra {
  Subspace a;            // A(T^T) in wedge coordinates
  QuotientSpace space;   // (T^T) -> <T,T>
  GradedLieAlgebra algebra;
  std::vector<Matrix> mu;  // mu(<basis k>) as endomorphisms of T
};

/// A(T^T) spanned by D_u(u) over wedge basis vectors u and
/// D_u(v) + D_v(u) over pairs of wedge basis vectors.
Subspace wedge_relations(const LieTripleSystem& t);

AngleAlgebra angle_algebra(const LieTripleSystem& t);

/// A(T) = <T,T> + T with [X+a, Y+b] = ([X,Y] + <a,b>) + (mu(X)b - mu(Y)a),
/// together with upsilon: A(T) -> Ste(T), upsilon(X+a) = mu(X) + a.
struct UniversalImbedding {
  LieTripleSystem lts;
  AngleAlgebra angle;
  GradedLieAlgebra algebra;
  Matrix iota;  // algebra.dim() x n
  StandardImbedding ste;
  GradedHom upsilon;
  Subspace upsilon_kernel;
};

UniversalImbedding universal_algebra(const LieTripleSystem& t);

/// L + M with [x+m, y+n] = ([x,y] + <m,n>) + (x.n - y.m), where pair[i*dim M + j]
/// is <m_i, m_j> in L coordinates. L must be trivially graded (L = L0) and
/// M is placed in the odd part. Throws InvalidStructure with a witness when
/// a hypothesis fails.
GradedLieAlgebra lemma_wed(const GradedLieAlgebra& l, const GradedModule& m, const std::vector<Vector>& pair);

/// The unique graded hom A(T) -> L extending alpha: T -> L1 (alpha is
/// L.odd_dim() x n). Throws InvalidStructure if alpha is not an LTS hom into
/// the odd part of L.
GradedHom extend_hom(const UniversalImbedding& u, const GradedLieAlgebra& l, const Matrix& alpha);
GradedHom extend_hom(const LieTripleSystem& t, const GradedLieAlgebra& l, const Matrix& alpha);

/// A(alpha): A(T) -> A(S).
GradedHom functor_a_on_hom(const UniversalImbedding& source, const UniversalImbedding& target, const LtsHom& alpha);
GradedHom functor_a_on_hom(const LtsHom& alpha);

/// upsilon_hat: A(L1) -> L extending id on L1.
struct UniversalCentralExtension {
  UniversalImbedding cover;
  GradedHom map;
  Subspace kernel;
};

/// Throws InvalidStructure unless L is generated by L1.
UniversalCentralExtension universal_central_0_extension(const GradedLieAlgebra& l);

}  // namespace lietrip
