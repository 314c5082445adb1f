#include "lietrip/lts.hpp"

#include <sstream>

#include "lietrip/error.hpp"
#include "lietrip/grlie.hpp"

namespace lietrip {

namespace {

std::string tuple_string(const std::vector<std::size_t>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

std::string first_violation(const AxiomReport& r) {
  const auto& v = r.violations.front();
  return to_string(v.identity) + " identity fails at basis tuple " + tuple_string(v.witness);
}

}  // namespace

LieTripleSystem::LieTripleSystem(FieldSpec f, std::size_t n, Tensor t)
    : field_(f), n_(n), t_(std::move(t)) {
  if (t_.size() != n * n * n * n)
    throw DimensionError("triple system tensor has " + std::to_string(t_.size()) + " entries, expected " +
                         std::to_string(n * n * n * n));
  for (const auto& x : t_)
    if (!(x.field() == f)) throw DimensionError("triple system tensor entry outside " + f.tag());
}

LieTripleSystem LieTripleSystem::make(FieldSpec f, std::size_t n, Tensor t) {
  LieTripleSystem out(f, n, std::move(t));
  const auto report = check_lts_axioms(out, 1);
  if (!report.ok()) throw InvalidStructure("not a Lie triple system: " + first_violation(report));
  return out;
}

LieTripleSystem LieTripleSystem::unchecked(FieldSpec f, std::size_t n, Tensor t) {
  return LieTripleSystem(f, n, std::move(t));
}

LieTripleSystem LieTripleSystem::abelian(FieldSpec f, std::size_t n) {
  return LieTripleSystem(f, n, Tensor(n * n * n * n, Scalar::zero(f)));
}

Vector LieTripleSystem::basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
  const auto* p = &t_[((i * n_ + j) * n_ + k) * n_];
  return Vector(p, p + n_);
}

Vector triple_bracket(const LieTripleSystem& t, const Vector& a, const Vector& b, const Vector& c) {
  const std::size_t n = t.dim();
  if (a.size() != n || b.size() != n || c.size() != n)
    throw DimensionError("triple_bracket: vectors must have length " + std::to_string(n));
  Vector out = zero_vector(t.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k].is_zero()) continue;
        axpy(out, ab * c[k], t.basis_bracket(i, j, k));
      }
    }
  }
  return out;
}

std::string to_string(LtsIdentity id) {
  switch (id) {
    case LtsIdentity::Alternating: return "alternating";
    case LtsIdentity::Linearized: return "linearized";
    case LtsIdentity::Cyclic: return "cyclic";
    case LtsIdentity::Derivation: return "derivation";
  }
  return "unknown";
}

AxiomReport check_lts_axioms(const LieTripleSystem& t, std::size_t max_per_identity) {
  const std::size_t n = t.dim();
  const auto f = t.field();
  AxiomReport report;
  std::size_t count = 0;
  auto record = [&](LtsIdentity id, std::vector<std::size_t> w, Vector defect) {
    if (count++ < max_per_identity) report.violations.push_back({id, std::move(w), std::move(defect)});
  };

  // [a,a,b] = 0 is not implied by the linearized form in characteristic 2,
  // so both are checked.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Vector v = t.basis_bracket(i, i, k);
      if (!is_zero(v)) record(LtsIdentity::Alternating, {i, i, k}, std::move(v));
    }

  count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = t.basis_bracket(i, j, k) + t.basis_bracket(j, i, k);
        if (!is_zero(v)) record(LtsIdentity::Linearized, {i, j, k}, std::move(v));
      }

  count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = t.basis_bracket(i, j, k) + t.basis_bracket(j, k, i) + t.basis_bracket(k, i, j);
        if (!is_zero(v)) record(LtsIdentity::Cyclic, {i, j, k}, std::move(v));
      }

  count = 0;
  std::vector<Matrix> inner;
  inner.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) inner.push_back(inner_derivation(t, a, b));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Matrix& dab = inner[a * n + b];
      if (dab.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e) {
            const Vector cde = t.basis_bracket(c, d, e);
            Vector defect = dab * cde;
            const Vector dc = dab.column(c);
            const Vector dd = dab.column(d);
            const Vector de = dab.column(e);
            const Vector ec = unit_vector(f, n, c);
            const Vector ed = unit_vector(f, n, d);
            const Vector ee = unit_vector(f, n, e);
            defect = defect - triple_bracket(t, dc, ed, ee) - triple_bracket(t, ec, dd, ee) -
                     triple_bracket(t, ec, ed, de);
            if (!is_zero(defect)) record(LtsIdentity::Derivation, {a, b, c, d, e}, std::move(defect));
          }
    }
  return report;
}

Matrix inner_derivation(const LieTripleSystem& t, std::size_t i, std::size_t j) {
  const std::size_t n = t.dim();
  Matrix m(t.field(), n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) m(l, k) = t.at(i, j, k, l);
  return m;
}

Matrix inner_derivation(const LieTripleSystem& t, const Vector& a, const Vector& b) {
  const std::size_t n = t.dim();
  if (a.size() != n || b.size() != n)
    throw DimensionError("inner_derivation: vectors must have length " + std::to_string(n));
  Matrix m(t.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar s = a[i] * b[j];
      if (!s.is_zero()) m = m + s * inner_derivation(t, i, j);
    }
  return m;
}

bool is_derivation(const LieTripleSystem& t, const Matrix& d) {
  const std::size_t n = t.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionError("is_derivation: shape mismatch");
  const auto f = t.field();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vector ea = unit_vector(f, n, a), eb = unit_vector(f, n, b), ec = unit_vector(f, n, c);
        const Vector lhs = d * t.basis_bracket(a, b, c);
        const Vector rhs = triple_bracket(t, d.column(a), eb, ec) + triple_bracket(t, ea, d.column(b), ec) +
                           triple_bracket(t, ea, eb, d.column(c));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

Vector DerivationAlgebra::coordinates(const Matrix& d) const {
  auto c = span.coordinates(d.flatten());
  if (!c) throw InvalidStructure("endomorphism is not a derivation");
  return *c;
}

DerivationAlgebra derivation_algebra(const LieTripleSystem& t) {
  const std::size_t n = t.dim();
  const auto f = t.field();
  // unknown D[r][s] sits at column r*n + s
  Matrix system(f, n * n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t l = 0; l < n; ++l, ++row) {
          for (std::size_t s = 0; s < n; ++s) system(row, l * n + s) += t.at(a, b, c, s);
          for (std::size_t r = 0; r < n; ++r) {
            system(row, r * n + a) -= t.at(r, b, c, l);
            system(row, r * n + b) -= t.at(a, r, c, l);
            system(row, r * n + c) -= t.at(a, b, r, l);
          }
        }
  Subspace span = kernel_basis(system);
  DerivationAlgebra der{{}, {}, span};
  for (std::size_t i = 0; i < span.dim(); ++i)
    der.basis.push_back(Matrix::unflatten(f, n, n, span.basis_vector(i)));
  const std::size_t d = der.dim();
  der.bracket.assign(d * d * d, Scalar::zero(f));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector c = der.coordinates(commutator(der.basis[i], der.basis[j]));
      for (std::size_t k = 0; k < d; ++k) der.bracket[(i * d + j) * d + k] = c[k];
    }
  return der;
}

InnerDerivations inder_algebra(const LieTripleSystem& t, const DerivationAlgebra& der) {
  const std::size_t n = t.dim();
  const auto f = t.field();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(inner_derivation(t, i, j).flatten());
  InnerDerivations out{Subspace::span(f, n * n, gens), true};
  for (const auto& d : der.basis)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Matrix c = commutator(d, inner_derivation(t, i, j));
        const Matrix expected = inner_derivation(t, d.column(i), unit_vector(f, n, j)) +
                                inner_derivation(t, unit_vector(f, n, i), d.column(j));
        if (!(c == expected) || !out.span.contains(c.flatten())) out.ideal_certified = false;
      }
  return out;
}

InnerDerivations inder_algebra(const LieTripleSystem& t) { return inder_algebra(t, derivation_algebra(t)); }

bool is_lts_hom(const Matrix& alpha, const LieTripleSystem& source, const LieTripleSystem& target) {
  const std::size_t n = source.dim();
  if (alpha.rows() != target.dim() || alpha.cols() != n || !(alpha.field() == source.field()) ||
      !(source.field() == target.field()))
    throw DimensionError("is_lts_hom: expected a " + std::to_string(target.dim()) + "x" + std::to_string(n) +
                         " matrix over " + source.field().tag());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = alpha * source.basis_bracket(i, j, k);
        const Vector rhs = triple_bracket(target, alpha.column(i), alpha.column(j), alpha.column(k));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

LtsHom LtsHom::make(LieTripleSystem source, LieTripleSystem target, Matrix matrix) {
  if (!is_lts_hom(matrix, source, target))
    throw InvalidStructure("matrix is not a homomorphism of Lie triple systems");
  return LtsHom{std::move(source), std::move(target), std::move(matrix)};
}

LtsHom LtsHom::identity(const LieTripleSystem& t) {
  return LtsHom{t, t, Matrix::identity(t.field(), t.dim())};
}

LtsHom compose(const LtsHom& beta, const LtsHom& alpha) {
  if (!(alpha.target == beta.source)) throw DimensionError("compose: triple systems do not match");
  return LtsHom{alpha.source, beta.target, beta.matrix * alpha.matrix};
}

LieTripleSystem lts_of_lie(const GradedLieAlgebra& l) {
  const auto report = check_graded_lie(l, 1);
  for (const auto& v : report.violations)
    if (v.identity != LieIdentity::Grading)
      throw InvalidStructure("not a Lie algebra: " + to_string(v.identity) + " fails at " + tuple_string(v.witness));
  const std::size_t n = l.dim();
  LieTripleSystem::Tensor t(n * n * n * n, Scalar::zero(l.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = l.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector v = l.bracket(ij, unit_vector(l.field(), n, k));
        for (std::size_t m = 0; m < n; ++m) t[((i * n + j) * n + k) * n + m] = v[m];
      }
    }
  return LieTripleSystem::make(l.field(), n, std::move(t));
}

LieTripleSystem odd_part_lts(const GradedLieAlgebra& l) {
  const std::size_t n0 = l.even_dim(), n1 = l.odd_dim(), n = l.dim();
  const auto f = l.field();
  LieTripleSystem::Tensor t(n1 * n1 * n1 * n1, Scalar::zero(f));
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b) {
      const Vector ab = l.basis_bracket(n0 + a, n0 + b);
      for (std::size_t c = 0; c < n1; ++c) {
        const Vector v = l.bracket(ab, unit_vector(f, n, n0 + c));
        for (std::size_t m = 0; m < n0; ++m)
          if (!v[m].is_zero()) throw InvalidStructure("odd part is not closed under [[.,.],.]");
        for (std::size_t m = 0; m < n1; ++m) t[((a * n1 + b) * n1 + c) * n1 + m] = v[n0 + m];
      }
    }
  return LieTripleSystem::make(f, n1, std::move(t));
}

}  // namespace lietrip
