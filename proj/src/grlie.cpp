#include "lietrip/grlie.hpp"

#include <sstream>

#include "lietrip/error.hpp"

namespace lietrip {

namespace {

std::string tuple_string(const std::vector<std::size_t>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

}  // namespace

GradedLieAlgebra::GradedLieAlgebra(FieldSpec f, std::size_t n0, std::size_t n1, Tensor t)
    : field_(f), n0_(n0), n1_(n1), t_(std::move(t)) {
  const std::size_t n = n0 + n1;
  if (t_.size() != n * n * n)
    throw DimensionError("Lie algebra tensor has " + std::to_string(t_.size()) + " entries, expected " +
                         std::to_string(n * n * n));
  for (const auto& x : t_)
    if (!(x.field() == f)) throw DimensionError("Lie algebra tensor entry outside " + f.tag());
}

GradedLieAlgebra GradedLieAlgebra::make(FieldSpec f, std::size_t n0, std::size_t n1, Tensor t) {
  GradedLieAlgebra out(f, n0, n1, std::move(t));
  const auto report = check_graded_lie(out, 1);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InvalidStructure("not a graded Lie algebra: " + to_string(v.identity) + " fails at basis tuple " +
                           tuple_string(v.witness));
  }
  return out;
}

GradedLieAlgebra GradedLieAlgebra::unchecked(FieldSpec f, std::size_t n0, std::size_t n1, Tensor t) {
  return GradedLieAlgebra(f, n0, n1, std::move(t));
}

GradedLieAlgebra GradedLieAlgebra::abelian(FieldSpec f, std::size_t n0, std::size_t n1) {
  const std::size_t n = n0 + n1;
  return GradedLieAlgebra(f, n0, n1, Tensor(n * n * n, Scalar::zero(f)));
}

Vector GradedLieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const auto* p = &t_[(i * dim() + j) * dim()];
  return Vector(p, p + dim());
}

Vector GradedLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw DimensionError("bracket: vectors must have length " + std::to_string(n));
  Vector out = zero_vector(field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!y[j].is_zero()) axpy(out, x[i] * y[j], basis_bracket(i, j));
  }
  return out;
}

Matrix GradedLieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  Matrix m(field_, n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, bracket(x, unit_vector(field_, n, j)));
  return m;
}

Subspace GradedLieAlgebra::even_part() const { return Subspace::coordinate(field_, dim(), 0, n0_); }

Subspace GradedLieAlgebra::odd_part() const { return Subspace::coordinate(field_, dim(), n0_, n1_); }

std::string to_string(LieIdentity id) {
  switch (id) {
    case LieIdentity::Alternating: return "alternating";
    case LieIdentity::Antisymmetry: return "antisymmetry";
    case LieIdentity::Jacobi: return "jacobi";
    case LieIdentity::Grading: return "grading";
  }
  return "unknown";
}

LieReport check_graded_lie(const GradedLieAlgebra& l, std::size_t max_per_identity) {
  const std::size_t n = l.dim();
  const auto f = l.field();
  LieReport report;
  std::size_t count = 0;
  auto record = [&](LieIdentity id, std::vector<std::size_t> w) {
    if (count++ < max_per_identity) report.violations.push_back({id, std::move(w)});
  };

  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(l.basis_bracket(i, i))) record(LieIdentity::Alternating, {i});

  count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero(l.basis_bracket(i, j) + l.basis_bracket(j, i))) record(LieIdentity::Antisymmetry, {i, j});

  count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = unit_vector(f, n, i), ej = unit_vector(f, n, j), ek = unit_vector(f, n, k);
        const Vector s = l.bracket(l.basis_bracket(i, j), ek) + l.bracket(l.basis_bracket(j, k), ei) +
                         l.bracket(l.basis_bracket(k, i), ej);
        if (!is_zero(s)) record(LieIdentity::Jacobi, {i, j, k});
      }

  count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!l.at(i, j, k).is_zero() && l.degree(k) != (l.degree(i) + l.degree(j)) % 2)
          record(LieIdentity::Grading, {i, j, k});
  return report;
}

GradedLieAlgebra change_basis(const GradedLieAlgebra& l, const Matrix& basis, std::size_t n0) {
  const std::size_t n = l.dim();
  if (basis.rows() != n || basis.cols() != n || n0 > n) throw DimensionError("change_basis: shape mismatch");
  if (rank(basis) != n) throw InvalidStructure("change_basis: basis matrix is singular");
  GradedLieAlgebra::Tensor t(n * n * n, Scalar::zero(l.field()));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = solve(basis, l.bracket(basis.column(a), basis.column(b)));
      for (std::size_t k = 0; k < n; ++k) t[(a * n + b) * n + k] = (*c)[k];
    }
  return GradedLieAlgebra::make(l.field(), n0, n - n0, std::move(t));
}

std::string graded_hom_defect(const Matrix& m, const GradedLieAlgebra& k, const GradedLieAlgebra& l) {
  if (m.rows() != l.dim() || m.cols() != k.dim() || !(m.field() == k.field()) || !(k.field() == l.field()))
    return "shape: expected a " + std::to_string(l.dim()) + "x" + std::to_string(k.dim()) + " matrix over " +
           k.field().tag();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && l.degree(r) != k.degree(c))
        return "grading: basis vector " + std::to_string(c) + " has a component of the wrong degree at " +
               std::to_string(r);
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = i + 1; j < k.dim(); ++j)
      if (!(m * k.basis_bracket(i, j) == l.bracket(m.column(i), m.column(j))))
        return "hom law fails at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
  return {};
}

bool is_graded_hom(const Matrix& m, const GradedLieAlgebra& k, const GradedLieAlgebra& l) {
  return graded_hom_defect(m, k, l).empty();
}

GradedHom GradedHom::make(GradedLieAlgebra source, GradedLieAlgebra target, Matrix matrix) {
  const auto defect = graded_hom_defect(matrix, source, target);
  if (!defect.empty()) throw InvalidStructure("not a graded homomorphism: " + defect);
  return GradedHom{std::move(source), std::move(target), std::move(matrix)};
}

GradedHom GradedHom::identity(const GradedLieAlgebra& l) {
  return GradedHom{l, l, Matrix::identity(l.field(), l.dim())};
}

GradedHom compose(const GradedHom& psi, const GradedHom& phi) {
  if (!(phi.target == psi.source)) throw DimensionError("compose: algebras do not match");
  return GradedHom{phi.source, psi.target, psi.matrix * phi.matrix};
}

std::string module_defect(const GradedLieAlgebra& l, std::size_t m0, std::size_t m1,
                          const std::vector<Matrix>& action) {
  const std::size_t m = m0 + m1;
  if (action.size() != l.dim())
    return "action has " + std::to_string(action.size()) + " matrices, expected " + std::to_string(l.dim());
  for (const auto& a : action)
    if (a.rows() != m || a.cols() != m || !(a.field() == l.field()))
      return "action matrices must be " + std::to_string(m) + "x" + std::to_string(m);
  auto deg = [m0](std::size_t i) { return i < m0 ? 0 : 1; };
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        if (!action[i](r, c).is_zero() && deg(r) != (l.degree(i) + deg(c)) % 2)
          return "grading fails for algebra basis " + std::to_string(i) + " on module basis " + std::to_string(c);
  auto rho = [&](const Vector& x) {
    Matrix out(l.field(), m, m);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) out = out + x[i] * action[i];
    return out;
  };
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (!(rho(l.basis_bracket(i, j)) == commutator(action[i], action[j])))
        return "representation law fails at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
  return {};
}

GradedModule::GradedModule(GradedLieAlgebra algebra, std::size_t m0, std::size_t m1, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), m0_(m0), m1_(m1), action_(std::move(action)) {}

GradedModule GradedModule::make(GradedLieAlgebra algebra, std::size_t m0, std::size_t m1,
                                std::vector<Matrix> action) {
  const auto defect = module_defect(algebra, m0, m1, action);
  if (!defect.empty()) throw InvalidStructure("not a graded module: " + defect);
  return GradedModule(std::move(algebra), m0, m1, std::move(action));
}

GradedModule GradedModule::unchecked(GradedLieAlgebra algebra, std::size_t m0, std::size_t m1,
                                     std::vector<Matrix> action) {
  if (action.size() != algebra.dim()) throw DimensionError("module action count mismatch");
  return GradedModule(std::move(algebra), m0, m1, std::move(action));
}

GradedModule GradedModule::trivial(const GradedLieAlgebra& algebra, std::size_t dim) {
  return GradedModule(algebra, dim, 0, std::vector<Matrix>(algebra.dim(), Matrix(algebra.field(), dim, dim)));
}

GradedModule GradedModule::adjoint(const GradedLieAlgebra& algebra) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    action.push_back(algebra.ad(unit_vector(algebra.field(), algebra.dim(), i)));
  return GradedModule(algebra, algebra.even_dim(), algebra.odd_dim(), std::move(action));
}

bool GradedModule::is_trivial() const {
  for (const auto& a : action_)
    if (!a.is_zero()) return false;
  return true;
}

Matrix GradedModule::rho(const Vector& x) const {
  if (x.size() != algebra_.dim()) throw DimensionError("rho: vector length mismatch");
  Matrix out(algebra_.field(), dim(), dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out = out + x[i] * action_[i];
  return out;
}

Subspace subalgebra_generated(const GradedLieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw DimensionError("subalgebra_generated: ambient mismatch");
  Subspace v = s;
  for (;;) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < v.dim(); ++i) gens.push_back(v.basis_vector(i));
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = i + 1; j < v.dim(); ++j) gens.push_back(l.bracket(v.basis_vector(i), v.basis_vector(j)));
    Subspace w = Subspace::span(l.field(), l.dim(), gens);
    if (w.dim() == v.dim()) return w;
    v = std::move(w);
  }
}

Subspace odd_span_closure(const GradedLieAlgebra& l) {
  const auto f = l.field();
  const std::size_t n0 = l.even_dim(), n = l.dim();
  std::vector<Vector> gens;
  for (std::size_t i = n0; i < n; ++i) {
    gens.push_back(unit_vector(f, n, i));
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(l.basis_bracket(i, j));
  }
  return Subspace::span(f, n, gens);
}

bool is_generated_by_odd(const GradedLieAlgebra& l) {
  return subalgebra_generated(l, l.odd_part()).dim() == l.dim();
}

Subspace center(const GradedLieAlgebra& l) {
  const std::size_t n = l.dim();
  Matrix stacked(l.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) stacked(i * n + k, j) = l.at(j, i, k);
  return kernel_basis(stacked);
}

namespace {

struct SumLayout {
  std::size_t k0, k1, u0, u1;
  std::size_t k_index(std::size_t i) const { return i < k0 ? i : k0 + u0 + (i - k0); }
  std::size_t u_index(std::size_t i) const { return i < u0 ? k0 + i : k0 + u0 + k1 + (i - u0); }
};

SumLayout layout(const GradedLieAlgebra& k, const GradedLieAlgebra& u) {
  return {k.even_dim(), k.odd_dim(), u.even_dim(), u.odd_dim()};
}

}  // namespace

GradedLieAlgebra direct_sum(const GradedLieAlgebra& k, const GradedLieAlgebra& u) {
  if (!(k.field() == u.field())) throw DimensionError("direct_sum: field mismatch");
  const auto s = layout(k, u);
  const std::size_t n = k.dim() + u.dim();
  GradedLieAlgebra::Tensor t(n * n * n, Scalar::zero(k.field()));
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = 0; j < k.dim(); ++j)
      for (std::size_t c = 0; c < k.dim(); ++c)
        t[(s.k_index(i) * n + s.k_index(j)) * n + s.k_index(c)] = k.at(i, j, c);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j)
      for (std::size_t c = 0; c < u.dim(); ++c)
        t[(s.u_index(i) * n + s.u_index(j)) * n + s.u_index(c)] = u.at(i, j, c);
  return GradedLieAlgebra::make(k.field(), s.k0 + s.u0, s.k1 + s.u1, std::move(t));
}

Vector direct_sum_vector(const GradedLieAlgebra& k, const GradedLieAlgebra& u, const Vector& x, const Vector& y) {
  if (x.size() != k.dim() || y.size() != u.dim()) throw DimensionError("direct_sum_vector: length mismatch");
  const auto s = layout(k, u);
  Vector v = zero_vector(k.field(), k.dim() + u.dim());
  for (std::size_t i = 0; i < k.dim(); ++i) v[s.k_index(i)] = x[i];
  for (std::size_t i = 0; i < u.dim(); ++i) v[s.u_index(i)] = y[i];
  return v;
}

InducedSubalgebra induced_subalgebra(const GradedLieAlgebra& l, const std::vector<Vector>& even,
                                     const std::vector<Vector>& odd) {
  const auto f = l.field();
  const std::size_t n = l.dim();
  std::vector<Vector> cols = even;
  cols.insert(cols.end(), odd.begin(), odd.end());
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t i = 0; i < n; ++i)
      if (!cols[a][i].is_zero() && (l.degree(i) == 1) != (a >= even.size()))
        throw InvalidStructure("induced_subalgebra: basis vector " + std::to_string(a) + " is not homogeneous");
  const Matrix incl = Matrix::from_columns(f, n, cols);
  if (rank(incl) != cols.size()) throw InvalidStructure("induced_subalgebra: basis is linearly dependent");
  const std::size_t m = cols.size();
  GradedLieAlgebra::Tensor t(m * m * m, Scalar::zero(f));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto c = solve(incl, l.bracket(cols[a], cols[b]));
      if (!c)
        throw InvalidStructure("induced_subalgebra: span not closed at pair (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
      for (std::size_t k = 0; k < m; ++k) t[(a * m + b) * m + k] = (*c)[k];
    }
  return {GradedLieAlgebra::make(f, even.size(), odd.size(), std::move(t)), incl};
}

Pullback graded_pullback(const GradedHom& phi, const GradedHom& upsilon) {
  if (!(phi.target == upsilon.target)) throw DimensionError("graded_pullback: codomains differ");
  const GradedLieAlgebra& k = phi.source;
  const GradedLieAlgebra& u = upsilon.source;
  const GradedLieAlgebra& l = phi.target;
  const auto f = l.field();
  const GradedLieAlgebra sum_algebra = direct_sum(k, u);
  const auto s = layout(k, u);

  // solve phi(k) = upsilon(u) separately in each degree
  auto solutions = [&](int deg) {
    const std::size_t lk = deg == 0 ? 0 : s.k0, nk = deg == 0 ? s.k0 : s.k1;
    const std::size_t lu = deg == 0 ? 0 : s.u0, nu = deg == 0 ? s.u0 : s.u1;
    const std::size_t ll = deg == 0 ? 0 : l.even_dim(), nl = deg == 0 ? l.even_dim() : l.odd_dim();
    const Matrix system =
        hstack({phi.matrix.block(ll, lk, nl, nk), (-Scalar::one(f)) * upsilon.matrix.block(ll, lu, nl, nu)});
    const Subspace sol = kernel_basis(system);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < sol.dim(); ++i) {
      const Vector xy = sol.basis_vector(i);
      Vector x = zero_vector(f, k.dim()), y = zero_vector(f, u.dim());
      for (std::size_t j = 0; j < nk; ++j) x[lk + j] = xy[j];
      for (std::size_t j = 0; j < nu; ++j) y[lu + j] = xy[nk + j];
      out.push_back(direct_sum_vector(k, u, x, y));
    }
    return out;
  };
  auto sub = induced_subalgebra(sum_algebra, solutions(0), solutions(1));

  Matrix select_k(f, k.dim(), sum_algebra.dim()), select_u(f, u.dim(), sum_algebra.dim());
  for (std::size_t i = 0; i < k.dim(); ++i) select_k(i, s.k_index(i)) = Scalar::one(f);
  for (std::size_t i = 0; i < u.dim(); ++i) select_u(i, s.u_index(i)) = Scalar::one(f);
  GradedHom to_k = GradedHom::make(sub.algebra, k, select_k * sub.inclusion);
  GradedHom to_u = GradedHom::make(sub.algebra, u, select_u * sub.inclusion);
  return {sub.algebra, std::move(to_k), std::move(to_u)};
}

CentralQuotient quotient_by_graded_central_ideal(const GradedLieAlgebra& l, const Subspace& ideal) {
  if (ideal.ambient_dim() != l.dim()) throw DimensionError("quotient: ideal ambient mismatch");
  if (!ideal.is_subspace_of(center(l))) throw InvalidStructure("quotient: ideal is not central");
  if (!ideal.is_subspace_of(l.even_part())) throw InvalidStructure("quotient: ideal is not inside the even part");
  QuotientSpace q(l.dim(), ideal);
  const std::size_t m = q.dim();
  const std::size_t m0 = l.even_dim() - ideal.dim();
  GradedLieAlgebra::Tensor t(m * m * m, Scalar::zero(l.field()));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector v = q.project(l.bracket(q.section().column(a), q.section().column(b)));
      for (std::size_t c = 0; c < m; ++c) t[(a * m + b) * m + c] = v[c];
    }
  GradedLieAlgebra algebra = GradedLieAlgebra::make(l.field(), m0, m - m0, std::move(t));
  GradedHom projection = GradedHom::make(l, algebra, q.projection());
  return {std::move(algebra), std::move(projection), std::move(q)};
}

LtsHom restrict_hom_to_odd(const GradedHom& phi) {
  const auto& k = phi.source;
  const auto& l = phi.target;
  return LtsHom::make(odd_part_lts(k), odd_part_lts(l),
                      phi.matrix.block(l.even_dim(), k.even_dim(), l.odd_dim(), k.odd_dim()));
}

Vector graded_vector(const GradedLieAlgebra& l, const Vector& even, const Vector& odd) {
  if (even.size() != l.even_dim() || odd.size() != l.odd_dim())
    throw DimensionError("graded_vector: component length mismatch");
  Vector v = even;
  v.insert(v.end(), odd.begin(), odd.end());
  return v;
}

}  // namespace lietrip
