#include "lietrip/cohom.hpp"

#include <algorithm>
#include <string>

#include "lietrip/error.hpp"

namespace lietrip {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Lexicographic rank of an increasing tuple among increasing_tuples(count, n).
std::size_t tuple_rank(std::size_t count, const std::vector<std::size_t>& t) {
  const std::size_t n = t.size();
  std::size_t rank = 0, start = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t v = start; v < t[p]; ++v) rank += binomial(count - 1 - v, n - 1 - p);
    start = t[p] + 1;
  }
  return rank;
}

/// Sorts `t` in place; returns 0 on a repeated index, else the sign.
int sort_with_sign(std::vector<std::size_t>& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] == t[i]) return 0;
  return sign;
}

int tuple_degree(const GradedLieAlgebra& l, const std::vector<std::size_t>& t) {
  int d = 0;
  for (auto i : t) d += l.degree(i);
  return d % 2;
}

void check_degree(std::size_t n, std::size_t max) {
  if (n < 1 || n > max) throw DimensionError("cochain degree " + std::to_string(n) + " is not supported");
}

}  // namespace

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t count, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n > count) return out;
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t p = n;
    while (p > 0 && t[p - 1] == count - n + p - 1) --p;
    if (p == 0) break;
    ++t[p - 1];
    for (std::size_t q = p; q < n; ++q) t[q] = t[q - 1] + 1;
  }
  return out;
}

Vector Cochain::evaluate(const std::vector<std::size_t>& args) const {
  if (args.size() != degree) throw DimensionError("cochain evaluated on the wrong number of arguments");
  std::vector<std::size_t> t = args;
  const int sign = sort_with_sign(t);
  if (sign == 0) return zero_vector(algebra().field(), module.dim());
  const Vector& v = values[tuple_rank(algebra().dim(), t)];
  return sign > 0 ? v : -v;
}

bool Cochain::is_graded() const {
  const auto tuples = increasing_tuples(algebra().dim(), degree);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const int d = tuple_degree(algebra(), tuples[t]);
    for (std::size_t m = 0; m < module.dim(); ++m)
      if (module.degree(m) != d && !values[t][m].is_zero()) return false;
  }
  return true;
}

Vector Cochain::flat() const {
  Vector out;
  out.reserve(values.size() * module.dim());
  for (const auto& v : values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Cochain Cochain::from_flat(const GradedModule& m, std::size_t degree, const Vector& flat) {
  const std::size_t count = binomial(m.algebra().dim(), degree), dm = m.dim();
  if (flat.size() != count * dm) throw DimensionError("cochain: flat vector has the wrong length");
  std::vector<Vector> values;
  for (std::size_t t = 0; t < count; ++t)
    values.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(t * dm),
                        flat.begin() + static_cast<std::ptrdiff_t>((t + 1) * dm));
  return Cochain{degree, m, std::move(values)};
}

Cochain Cochain::zero(const GradedModule& m, std::size_t degree) {
  const std::size_t count = binomial(m.algebra().dim(), degree);
  return Cochain{degree, m, std::vector<Vector>(count, zero_vector(m.algebra().field(), m.dim()))};
}

Subspace graded_cochain_space(const GradedModule& m, std::size_t n) {
  check_degree(n, 3);
  const auto f = m.algebra().field();
  const auto tuples = increasing_tuples(m.algebra().dim(), n);
  const std::size_t dm = m.dim(), total = tuples.size() * dm;
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const int d = tuple_degree(m.algebra(), tuples[t]);
    for (std::size_t k = 0; k < dm; ++k)
      if (m.degree(k) == d) gens.push_back(unit_vector(f, total, t * dm + k));
  }
  return Subspace::span(f, total, gens);
}

std::vector<Cochain> graded_cochain_basis(const GradedModule& m, std::size_t n) {
  const Subspace s = graded_cochain_space(m, n);
  std::vector<Cochain> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(Cochain::from_flat(m, n, s.basis_vector(i)));
  return out;
}

Cochain coboundary(const Cochain& f) {
  check_degree(f.degree, 2);
  const GradedLieAlgebra& l = f.algebra();
  const auto field = l.field();
  const std::size_t n = f.degree, dim = l.dim();
  const auto tuples = increasing_tuples(dim, n + 1);
  std::vector<Vector> values;
  values.reserve(tuples.size());
  for (const auto& x : tuples) {
    Vector acc = zero_vector(field, f.module.dim());
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t q = 0; q <= n; ++q)
        if (q != i) rest.push_back(x[q]);
      const Vector term = f.module.action()[x[i]] * f.evaluate(rest);
      acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::vector<std::size_t> args(1);
        for (std::size_t q = 0; q <= n; ++q)
          if (q != i && q != j) args.push_back(x[q]);
        const Vector br = l.basis_bracket(x[i], x[j]);
        Vector term = zero_vector(field, f.module.dim());
        for (std::size_t k = 0; k < dim; ++k) {
          if (br[k].is_zero()) continue;
          args[0] = k;
          axpy(term, br[k], f.evaluate(args));
        }
        acc = ((i + j) % 2 == 0) ? acc + term : acc - term;
      }
    values.push_back(std::move(acc));
  }
  return Cochain{n + 1, f.module, std::move(values)};
}

Matrix coboundary_matrix(const GradedModule& m, std::size_t n) {
  check_degree(n, 2);
  const auto f = m.algebra().field();
  const std::size_t cols = binomial(m.algebra().dim(), n) * m.dim();
  const std::size_t rows = binomial(m.algebra().dim(), n + 1) * m.dim();
  Matrix out(f, rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    out.set_column(c, coboundary(Cochain::from_flat(m, n, unit_vector(f, cols, c))).flat());
  return out;
}

H2Result h2_gr(const GradedModule& m) {
  const auto f = m.algebra().field();
  const Subspace c1 = graded_cochain_space(m, 1), c2 = graded_cochain_space(m, 2);
  const Matrix g1 = c1.basis().transpose(), g2 = c2.basis().transpose();
  const std::size_t flat2 = g2.rows();

  const Subspace z_coords = kernel_basis(coboundary_matrix(m, 2) * g2);
  std::vector<Vector> z_gens;
  for (std::size_t i = 0; i < z_coords.dim(); ++i) z_gens.push_back(g2 * z_coords.basis_vector(i));
  Subspace cocycles = Subspace::span(f, flat2, z_gens);
  Subspace coboundaries = image(coboundary_matrix(m, 1) * g1);
  if (coboundaries.ambient_dim() != flat2) coboundaries = Subspace::zero(f, flat2);
  if (!coboundaries.is_subspace_of(cocycles)) throw InternalError("h2_gr: coboundaries are not cocycles");

  std::vector<Cochain> reps;
  Subspace running = coboundaries;
  for (std::size_t i = 0; i < cocycles.dim(); ++i) {
    const Vector z = cocycles.basis_vector(i);
    if (running.contains(z)) continue;
    reps.push_back(Cochain::from_flat(m, 2, z));
    running = sum(running, Subspace::span(f, flat2, {z}));
  }
  const std::size_t dim = cocycles.dim() - coboundaries.dim();
  if (reps.size() != dim) throw InternalError("h2_gr: complement has the wrong dimension");
  return {dim, std::move(cocycles), std::move(coboundaries), std::move(reps)};
}

H2Result h2_gr(const GradedLieAlgebra& l) { return h2_gr(GradedModule::trivial(l, 1)); }

CentralExtensionProblem CentralExtensionProblem::make(const GradedHom& phi) {
  const auto defect = graded_hom_defect(phi.matrix, phi.source, phi.target);
  if (!defect.empty()) throw InvalidStructure("central extension: " + defect);
  if (rank(phi.matrix) != phi.target.dim()) throw InvalidStructure("central extension: map is not surjective");
  Subspace kernel = kernel_basis(phi.matrix);
  for (std::size_t i = 0; i < kernel.dim(); ++i) {
    const Vector v = kernel.basis_vector(i);
    if (!phi.source.even_part().contains(v))
      throw InvalidStructure("central extension: kernel basis vector " + std::to_string(i) + " is not even");
    for (std::size_t j = 0; j < phi.source.dim(); ++j)
      if (!is_zero(phi.source.bracket(v, unit_vector(phi.source.field(), phi.source.dim(), j))))
        throw InvalidStructure("central extension: kernel basis vector " + std::to_string(i) +
                               " does not commute with basis element " + std::to_string(j));
  }
  return {phi.source, phi.target, phi, std::move(kernel)};
}

CentralExtensionProblem cocycle_extension(const Cochain& sigma) {
  const GradedModule& m = sigma.module;
  const GradedLieAlgebra& l = sigma.algebra();
  if (sigma.degree != 2) throw InvalidStructure("cocycle_extension: sigma must have degree 2");
  if (!m.is_trivial() || m.odd_dim() != 0)
    throw InvalidStructure("cocycle_extension: coefficients must be trivial with M = M0");
  if (!sigma.is_graded()) throw InvalidStructure("cocycle_extension: sigma is not graded");
  if (!is_zero(coboundary(sigma).flat())) throw InvalidStructure("cocycle_extension: sigma is not a cocycle");

  const auto f = l.field();
  const std::size_t n0 = l.even_dim(), n1 = l.odd_dim(), dm = m.dim();
  const std::size_t total = l.dim() + dm;
  auto pos = [&](std::size_t i) { return i < n0 ? i : i + dm; };
  GradedLieAlgebra::Tensor tensor(total * total * total, Scalar::zero(f));
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      const Vector br = l.basis_bracket(i, j);
      const Vector s = sigma.evaluate({i, j});
      const std::size_t base = (pos(i) * total + pos(j)) * total;
      for (std::size_t k = 0; k < l.dim(); ++k) tensor[base + pos(k)] = br[k];
      for (std::size_t k = 0; k < dm; ++k) tensor[base + n0 + k] = s[k];
    }
  GradedLieAlgebra k = GradedLieAlgebra::make(f, n0 + dm, n1, std::move(tensor));
  Matrix proj(f, l.dim(), total);
  for (std::size_t i = 0; i < l.dim(); ++i) proj(i, pos(i)) = Scalar::one(f);
  return CentralExtensionProblem::make(GradedHom{std::move(k), l, std::move(proj)});
}

SplitResult split_central_0_extension(const CentralExtensionProblem& prob) {
  const GradedLieAlgebra& k = prob.total;
  const GradedLieAlgebra& l = prob.base;
  const auto f = l.field();
  const std::size_t n0 = l.even_dim(), r = prob.kernel.dim();

  // graded linear section eta with phi o eta = id
  Matrix eta(f, k.dim(), l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j) {
    const std::size_t first = l.degree(j) == 0 ? 0 : k.even_dim();
    const std::size_t count = l.degree(j) == 0 ? k.even_dim() : k.odd_dim();
    const Matrix block = prob.phi.matrix.block(0, first, l.dim(), count);
    auto x = solve(block, unit_vector(f, l.dim(), j));
    if (!x) throw InvalidStructure("split: map is not surjective in degree " + std::to_string(l.degree(j)));
    for (std::size_t c = 0; c < count; ++c) eta(first + c, j) = (*x)[c];
  }

  const GradedModule coeff = GradedModule::trivial(l, r);
  Cochain sigma = Cochain::zero(coeff, 2);
  const auto pairs = increasing_tuples(l.dim(), 2);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const std::size_t i = pairs[p][0], j = pairs[p][1];
    const Vector s = k.bracket(eta.column(i), eta.column(j)) - eta * l.basis_bracket(i, j);
    auto c = prob.kernel.coordinates(s);
    if (!c) throw InternalError("split: section defect leaves the kernel");
    sigma.values[p] = *c;
  }

  // tau: L0 -> Ker, unknown tau[q][c] at q * n0 + c; sigma(x,y) = tau([x,y]_0)
  Matrix system(f, pairs.size() * r, r * n0);
  Vector rhs(pairs.size() * r, Scalar::zero(f));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Vector br = l.basis_bracket(pairs[p][0], pairs[p][1]);
    for (std::size_t q = 0; q < r; ++q) {
      for (std::size_t c = 0; c < n0; ++c) system(p * r + q, q * n0 + c) = br[c];
      rhs[p * r + q] = sigma.values[p][q];
    }
  }
  auto sol = solve_or_certify(system, rhs);
  if (auto* bad = std::get_if<Inconsistency>(&sol)) return {std::nullopt, std::move(sigma), bad->witness};

  const Vector& tau = std::get<Vector>(sol);
  Matrix psi = eta;
  for (std::size_t c = 0; c < n0; ++c)
    for (std::size_t q = 0; q < r; ++q)
      if (!tau[q * n0 + c].is_zero()) {
        const Vector kv = prob.kernel.basis_vector(q);
        for (std::size_t row = 0; row < k.dim(); ++row) psi(row, c) += tau[q * n0 + c] * kv[row];
      }
  const auto defect = graded_hom_defect(psi, l, k);
  if (!defect.empty()) throw InternalError("split: psi is not a graded hom: " + defect);
  if (!(prob.phi.matrix * psi).is_identity()) throw InternalError("split: phi o psi is not the identity");
  return {GradedHom{l, k, std::move(psi)}, std::move(sigma), std::nullopt};
}

bool is_0_centrally_closed(const GradedLieAlgebra& l) { return h2_gr(l).dim == 0; }

TheoremAReport theorem_a_predicate(const GradedLieAlgebra& l) {
  TheoremAReport report{is_generated_by_odd(l), h2_gr(l).dim, false, std::nullopt, std::nullopt};
  report.verdict = report.generated_by_odd && report.h2_dim == 0;
  if (report.generated_by_odd) report.extension = universal_central_0_extension(l);
  if (report.verdict) {
    if (report.extension->kernel.dim() != 0)
      throw InternalError("theorem_a_predicate: closed algebra with a nontrivial universal kernel");
    report.witness = report.extension->map;
  }
  return report;
}

}  // namespace lietrip
