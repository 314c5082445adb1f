#include "lietrip/embed.hpp"

#include <string>

#include "lietrip/error.hpp"

namespace lietrip {

namespace {

std::string pair_string(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::size_t wedge_index(std::size_t n, std::size_t i, std::size_t j) {
  // position of (i, j), i < j, in lexicographic order
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Coordinates of u ^ v in the wedge basis.
Vector wedge(const Vector& u, const Vector& v) {
  const std::size_t n = u.size();
  const auto f = u.front().field();
  Vector out = zero_vector(f, n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out[wedge_index(n, a, b)] = u[a] * v[b] - u[b] * v[a];
  return out;
}

void set_tensor(GradedLieAlgebra::Tensor& t, std::size_t n, std::size_t i, std::size_t j, const Vector& v) {
  for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = v[k];
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

Matrix wedge_action(const Matrix& endo) {
  const std::size_t n = endo.rows();
  const auto f = endo.field();
  const auto pairs = wedge_pairs(n);
  Matrix out(f, pairs.size(), pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto [i, j] = pairs[c];
    const Vector ei = unit_vector(f, n, i), ej = unit_vector(f, n, j);
    out.set_column(c, wedge(endo.column(i), ej) + wedge(ei, endo.column(j)));
  }
  return out;
}

Vector StandardImbedding::inder_coordinates(const Matrix& d) const {
  auto c = inder.span.coordinates(d.flatten());
  if (!c) throw InvalidStructure("endomorphism is not an inner derivation");
  return *c;
}

StandardImbedding standard_imbedding(const LieTripleSystem& t) {
  const auto f = t.field();
  const std::size_t n = t.dim();
  InnerDerivations inder = inder_algebra(t);
  std::vector<Matrix> even;
  for (std::size_t i = 0; i < inder.dim(); ++i)
    even.push_back(Matrix::unflatten(f, n, n, inder.span.basis_vector(i)));
  const std::size_t d = even.size(), total = d + n;
  auto coords = [&](const Matrix& m) { return *inder.span.coordinates(m.flatten()); };

  GradedLieAlgebra::Tensor tensor(total * total * total, Scalar::zero(f));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Vector v = zero_vector(f, total);
      const Vector c = coords(commutator(even[a], even[b]));
      for (std::size_t k = 0; k < d; ++k) v[k] = c[k];
      set_tensor(tensor, total, a, b, v);
    }
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = zero_vector(f, total);
      const Vector xb = even[a].column(j);
      for (std::size_t k = 0; k < n; ++k) v[d + k] = xb[k];
      set_tensor(tensor, total, a, d + j, v);
      set_tensor(tensor, total, d + j, a, -v);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = zero_vector(f, total);
      const Vector c = coords(inner_derivation(t, i, j));
      for (std::size_t k = 0; k < d; ++k) v[k] = c[k];
      set_tensor(tensor, total, d + i, d + j, v);
    }
  GradedLieAlgebra algebra = GradedLieAlgebra::make(f, d, n, std::move(tensor));
  Matrix inclusion(f, total, n);
  for (std::size_t j = 0; j < n; ++j) inclusion(d + j, j) = Scalar::one(f);
  return {t, std::move(inder), std::move(even), std::move(algebra), std::move(inclusion)};
}

LemmaModResult lemma_mod(const GradedModule& module, const Matrix& lambda) {
  const GradedLieAlgebra& l = module.algebra();
  const auto f = l.field();
  const std::size_t m = module.dim();
  if (lambda.rows() != l.dim() || lambda.cols() != m)
    throw DimensionError("lemma_mod: lambda must be " + std::to_string(l.dim()) + "x" + std::to_string(m));
  for (std::size_t x = 0; x < l.dim(); ++x)
    for (std::size_t u = 0; u < m; ++u) {
      const Vector lhs = lambda * module.action()[x].column(u);
      const Vector rhs = l.bracket(unit_vector(f, l.dim(), x), lambda.column(u));
      if (!(lhs == rhs))
        throw InvalidStructure("lambda is not a module homomorphism at (algebra, module) basis pair " +
                               pair_string(x, u));
    }

  std::vector<Matrix> acting;  // rho(lambda(e_u))
  for (std::size_t u = 0; u < m; ++u) acting.push_back(module.rho(lambda.column(u)));
  std::vector<Vector> gens;
  for (std::size_t u = 0; u < m; ++u) {
    gens.push_back(acting[u].column(u));
    for (std::size_t v = u + 1; v < m; ++v) gens.push_back(acting[u].column(v) + acting[v].column(u));
  }
  Subspace a = Subspace::span(f, m, gens);

  const Subspace ker = kernel_basis(lambda);
  if (!a.is_subspace_of(ker)) throw InternalError("lemma_mod: A(M) is not inside Ker(lambda)");
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t k = 0; k < ker.dim(); ++k)
      if (!a.contains(acting[u] * ker.basis_vector(k)))
        throw InternalError("lemma_mod: Im(lambda).Ker(lambda) is not inside A(M)");

  QuotientSpace space(m, a);
  const std::size_t q = space.dim();
  Matrix mu = lambda * space.section();
  GradedLieAlgebra::Tensor tensor(q * q * q, Scalar::zero(f));
  for (std::size_t p = 0; p < q; ++p) {
    const Matrix act = module.rho(mu.column(p));
    for (std::size_t r = 0; r < q; ++r)
      set_tensor(tensor, q, p, r, space.project(act * space.section().column(r)));
  }
  GradedLieAlgebra algebra = GradedLieAlgebra::make(f, q, 0, std::move(tensor));
  if (!kernel_basis(mu).is_subspace_of(center(algebra)))
    throw InternalError("lemma_mod: Ker(mu) is not central");
  return {std::move(a), std::move(space), std::move(algebra), std::move(mu)};
}

WedgeModule wedge_module(const LieTripleSystem& t) {
  const auto f = t.field();
  const std::size_t n = t.dim();
  DerivationAlgebra der = derivation_algebra(t);
  GradedLieAlgebra der_algebra = GradedLieAlgebra::make(f, der.dim(), 0, der.bracket);
  std::vector<Matrix> action;
  for (const auto& d : der.basis) action.push_back(wedge_action(d));
  auto pairs = wedge_pairs(n);
  GradedModule module = GradedModule::make(der_algebra, pairs.size(), 0, std::move(action));
  Matrix lambda(f, der.dim(), pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c)
    lambda.set_column(c, der.coordinates(inner_derivation(t, pairs[c].first, pairs[c].second)));
  return {std::move(der), std::move(der_algebra), std::move(module), std::move(lambda), std::move(pairs)};
}

Subspace wedge_relations(const LieTripleSystem& t) {
  const auto f = t.field();
  const auto pairs = wedge_pairs(t.dim());
  const std::size_t m = pairs.size();
  std::vector<Matrix> acting;
  for (const auto& [i, j] : pairs) acting.push_back(wedge_action(inner_derivation(t, i, j)));
  std::vector<Vector> gens;
  for (std::size_t u = 0; u < m; ++u) {
    gens.push_back(acting[u].column(u));
    for (std::size_t v = u + 1; v < m; ++v) gens.push_back(acting[u].column(v) + acting[v].column(u));
  }
  return Subspace::span(f, m, gens);
}

AngleAlgebra angle_algebra(const LieTripleSystem& t) {
  const auto f = t.field();
  const std::size_t n = t.dim();
  WedgeModule w = wedge_module(t);
  LemmaModResult r = lemma_mod(w.module, w.lambda);
  std::vector<Matrix> mu;
  for (std::size_t k = 0; k < r.space.dim(); ++k) {
    Matrix e(f, n, n);
    const Vector c = r.mu.column(k);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) e = e + c[i] * w.der.basis[i];
    mu.push_back(std::move(e));
  }
  return {std::move(r.a), std::move(r.space), std::move(r.algebra), std::move(mu)};
}

UniversalImbedding universal_algebra(const LieTripleSystem& t) {
  const auto f = t.field();
  const std::size_t n = t.dim();
  AngleAlgebra angle = angle_algebra(t);
  const std::size_t q = angle.space.dim(), total = q + n;

  GradedLieAlgebra::Tensor tensor(total * total * total, Scalar::zero(f));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      Vector v = zero_vector(f, total);
      const Vector c = angle.algebra.basis_bracket(a, b);
      for (std::size_t k = 0; k < q; ++k) v[k] = c[k];
      set_tensor(tensor, total, a, b, v);
    }
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = zero_vector(f, total);
      const Vector xb = angle.mu[a].column(j);
      for (std::size_t k = 0; k < n; ++k) v[q + k] = xb[k];
      set_tensor(tensor, total, a, q + j, v);
      set_tensor(tensor, total, q + j, a, -v);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Vector v = zero_vector(f, total);
      const Vector c = angle.space.project(wedge(unit_vector(f, n, i), unit_vector(f, n, j)));
      for (std::size_t k = 0; k < q; ++k) v[k] = c[k];
      set_tensor(tensor, total, q + i, q + j, v);
    }
  GradedLieAlgebra algebra = GradedLieAlgebra::make(f, q, n, std::move(tensor));

  Matrix iota(f, total, n);
  for (std::size_t j = 0; j < n; ++j) iota(q + j, j) = Scalar::one(f);

  StandardImbedding ste = standard_imbedding(t);
  const std::size_t d = ste.algebra.even_dim();
  Matrix up(f, d + n, total);
  for (std::size_t a = 0; a < q; ++a) {
    const Vector c = ste.inder_coordinates(angle.mu[a]);
    for (std::size_t k = 0; k < d; ++k) up(k, a) = c[k];
  }
  for (std::size_t j = 0; j < n; ++j) up(d + j, q + j) = Scalar::one(f);
  const auto defect = graded_hom_defect(up, algebra, ste.algebra);
  if (!defect.empty()) throw InternalError("universal_algebra: upsilon is not a graded hom: " + defect);
  GradedHom upsilon{algebra, ste.algebra, up};
  Subspace kernel = kernel_basis(up);
  if (rank(up) != d + n) throw InternalError("universal_algebra: upsilon is not surjective");
  if (!kernel.is_subspace_of(intersect(algebra.even_part(), center(algebra))))
    throw InternalError("universal_algebra: Ker(upsilon) is not even and central");
  return {t,           std::move(angle), std::move(algebra), std::move(iota),
          std::move(ste), std::move(upsilon), std::move(kernel)};
}

GradedLieAlgebra lemma_wed(const GradedLieAlgebra& l, const GradedModule& m, const std::vector<Vector>& pair) {
  const auto f = l.field();
  const std::size_t dl = l.dim(), dm = m.dim(), total = dl + dm;
  if (l.odd_dim() != 0 || m.odd_dim() != 0)
    throw DimensionError("lemma_wed: expects a trivially graded algebra and module");
  if (!(m.algebra() == l)) throw DimensionError("lemma_wed: module is over a different algebra");
  if (pair.size() != dm * dm) throw DimensionError("lemma_wed: pairing must have dim(M)^2 values");
  for (const auto& v : pair)
    if (v.size() != dl) throw DimensionError("lemma_wed: pairing values must lie in L");

  auto bracket_mm = [&](const Vector& u, const Vector& v) {
    Vector out = zero_vector(f, dl);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dm; ++j)
        if (!u[i].is_zero() && !v[j].is_zero()) axpy(out, u[i] * v[j], pair[i * dm + j]);
    return out;
  };
  for (std::size_t i = 0; i < dm; ++i) {
    if (!is_zero(pair[i * dm + i])) throw InvalidStructure("lemma_wed: pairing not alternating at " + pair_string(i, i));
    for (std::size_t j = i + 1; j < dm; ++j)
      if (!is_zero(pair[i * dm + j] + pair[j * dm + i]))
        throw InvalidStructure("lemma_wed: pairing not antisymmetric at " + pair_string(i, j));
  }
  for (std::size_t x = 0; x < dl; ++x) {
    const Vector ex = unit_vector(f, dl, x);
    const Matrix& act = m.action()[x];
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = i + 1; j < dm; ++j) {
        const Vector ei = unit_vector(f, dm, i), ej = unit_vector(f, dm, j);
        const Vector lhs = l.bracket(ex, pair[i * dm + j]);
        const Vector rhs = bracket_mm(act * ei, ej) + bracket_mm(ei, act * ej);
        if (!(lhs == rhs))
          throw InvalidStructure("lemma_wed: pairing is not a module hom at (" + std::to_string(x) + "," +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dm; ++j)
      for (std::size_t k = 0; k < dm; ++k) {
        const Vector s = m.rho(pair[i * dm + j]).column(k) + m.rho(pair[j * dm + k]).column(i) +
                         m.rho(pair[k * dm + i]).column(j);
        if (!is_zero(s))
          throw InvalidStructure("lemma_wed: cyclic condition fails at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
      }

  GradedLieAlgebra::Tensor tensor(total * total * total, Scalar::zero(f));
  for (std::size_t a = 0; a < dl; ++a) {
    for (std::size_t b = 0; b < dl; ++b) {
      Vector v = zero_vector(f, total);
      const Vector c = l.basis_bracket(a, b);
      for (std::size_t k = 0; k < dl; ++k) v[k] = c[k];
      set_tensor(tensor, total, a, b, v);
    }
    for (std::size_t j = 0; j < dm; ++j) {
      Vector v = zero_vector(f, total);
      const Vector xn = m.action()[a].column(j);
      for (std::size_t k = 0; k < dm; ++k) v[dl + k] = xn[k];
      set_tensor(tensor, total, a, dl + j, v);
      set_tensor(tensor, total, dl + j, a, -v);
    }
  }
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dm; ++j) {
      Vector v = zero_vector(f, total);
      for (std::size_t k = 0; k < dl; ++k) v[k] = pair[i * dm + j][k];
      set_tensor(tensor, total, dl + i, dl + j, v);
    }
  return GradedLieAlgebra::make(f, dl, dm, std::move(tensor));
}

GradedHom extend_hom(const UniversalImbedding& u, const GradedLieAlgebra& l, const Matrix& alpha) {
  const auto f = u.lts.field();
  const std::size_t n = u.lts.dim();
  if (!(l.field() == f)) throw DimensionError("extend_hom: field mismatch");
  if (alpha.rows() != l.odd_dim() || alpha.cols() != n)
    throw DimensionError("extend_hom: alpha must be " + std::to_string(l.odd_dim()) + "x" + std::to_string(n));
  if (!is_lts_hom(alpha, u.lts, odd_part_lts(l)))
    throw InvalidStructure("extend_hom: alpha is not a homomorphism into the odd part");

  const std::size_t l0 = l.even_dim(), q = u.angle.space.dim();
  const auto pairs = wedge_pairs(n);
  auto embed_odd = [&](const Vector& odd) { return graded_vector(l, zero_vector(f, l0), odd); };
  // zeta(e_i ^ e_j) = [alpha e_i, alpha e_j]
  Matrix zeta(f, l.dim(), pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c)
    zeta.set_column(c, l.bracket(embed_odd(alpha.column(pairs[c].first)), embed_odd(alpha.column(pairs[c].second))));
  if (!(zeta * u.angle.a.basis().transpose()).is_zero())
    throw InternalError("extend_hom: relations A(T^T) are not annihilated");

  const Matrix even_block = zeta * u.angle.space.section();
  Matrix hat(f, l.dim(), q + n);
  for (std::size_t a = 0; a < q; ++a) hat.set_column(a, even_block.column(a));
  for (std::size_t j = 0; j < n; ++j) hat.set_column(q + j, embed_odd(alpha.column(j)));
  const auto defect = graded_hom_defect(hat, u.algebra, l);
  if (!defect.empty()) throw InternalError("extend_hom: extension is not a graded hom: " + defect);
  return GradedHom{u.algebra, l, std::move(hat)};
}

GradedHom extend_hom(const LieTripleSystem& t, const GradedLieAlgebra& l, const Matrix& alpha) {
  return extend_hom(universal_algebra(t), l, alpha);
}

GradedHom functor_a_on_hom(const UniversalImbedding& source, const UniversalImbedding& target, const LtsHom& alpha) {
  if (!(alpha.source == source.lts) || !(alpha.target == target.lts))
    throw DimensionError("functor_a_on_hom: hom does not match the given imbeddings");
  // iota_S is the identity onto the odd part of A(S)
  return extend_hom(source, target.algebra, alpha.matrix);
}

GradedHom functor_a_on_hom(const LtsHom& alpha) {
  return functor_a_on_hom(universal_algebra(alpha.source), universal_algebra(alpha.target), alpha);
}

UniversalCentralExtension universal_central_0_extension(const GradedLieAlgebra& l) {
  if (!is_generated_by_odd(l)) throw InvalidStructure("universal_central_0_extension: L is not generated by L1");
  UniversalImbedding cover = universal_algebra(odd_part_lts(l));
  GradedHom map = extend_hom(cover, l, Matrix::identity(l.field(), l.odd_dim()));
  Subspace kernel = kernel_basis(map.matrix);
  if (rank(map.matrix) != l.dim()) throw InternalError("universal_central_0_extension: map is not surjective");
  if (!kernel.is_subspace_of(intersect(cover.algebra.even_part(), center(cover.algebra))))
    throw InternalError("universal_central_0_extension: kernel is not even and central");
  return {std::move(cover), std::move(map), std::move(kernel)};
}

}  // namespace lietrip
