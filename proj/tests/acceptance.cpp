#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lietrip/cli.hpp"
#include "lietrip/io.hpp"
#include "support.hpp"

using namespace lietrip;
using support::kQ;

namespace {

/// Collects failed checks of one criterion.
class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::vector<GradedLieAlgebra> random_abelian_quotients() {
  std::mt19937_64 rng(97);
  const auto u = universal_algebra(corpus::abl(kQ, 3)).algebra;
  std::vector<GradedLieAlgebra> out;
  while (out.size() < 10) {
    const std::size_t k = rng() % 4;
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < k; ++i)
      gens.push_back(graded_vector(u, support::random_vector(kQ, u.even_dim(), rng), zero_vector(kQ, u.odd_dim())));
    const Subspace c = Subspace::span(kQ, u.dim(), gens);
    out.push_back(quotient_by_graded_central_ideal(u, c).algebra);
  }
  return out;
}

void axioms(Criterion& c) {
  for (const auto& f : {kQ, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (const auto& [name, t] : support::corpus_lts(f)) c.require(check_lts_axioms(t).ok(), name + " over " + f.tag());
  const auto base = corpus::sl2lts(kQ);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto tensor = base.tensor();
    const std::size_t pos = rng() % tensor.size();
    tensor[pos] += Scalar::one(kQ);
    const auto broken = LieTripleSystem::unchecked(kQ, 3, tensor);
    const auto report = check_lts_axioms(broken);
    c.require(!report.ok(), "mutation at " + std::to_string(pos) + " not detected");
    for (const auto& v : report.violations)
      c.require(support::identity_fails(broken, v.identity, v.witness),
                "witness for mutation at " + std::to_string(pos) + " does not reproduce");
  }
}

void constructions(Criterion& c) {
  std::vector<std::pair<std::string, LieTripleSystem>> systems = support::corpus_lts();
  int i = 0;
  for (const auto& q : random_abelian_quotients()) systems.emplace_back("quotient " + std::to_string(i++), odd_part_lts(q));
  for (const auto& [name, t] : systems) {
    const auto u = universal_algebra(t);
    c.require(check_graded_lie(u.ste.algebra).ok(), "Ste " + name);
    c.require(check_graded_lie(u.algebra).ok(), "A " + name);
  }
}

void central_extension(Criterion& c) {
  for (const auto& [name, t] : support::corpus_lts()) {
    const auto u = universal_algebra(t);
    const Matrix& m = u.upsilon.matrix;
    c.require(rank(m) == u.ste.algebra.dim(), name + " surjective");
    c.require(is_graded_hom(m, u.algebra, u.ste.algebra), name + " graded hom");
    c.require(u.upsilon_kernel == kernel_basis(m), name + " kernel");
    c.require(u.upsilon_kernel.is_subspace_of(intersect(u.algebra.even_part(), center(u.algebra))), name + " kernel central even");
  }
}

void universality(Criterion& c) {
  struct Case {
    std::string name;
    LieTripleSystem t;
    GradedLieAlgebra l;
    Matrix alpha;
  };
  const std::vector<Case> cases = {
      {"odd2 -> sl2", corpus::odd2(kQ), corpus::sl2graded(kQ), Matrix::identity(kQ, 2)},
      {"abl(2) -> heis", corpus::abl(kQ, 2), corpus::heis(kQ), Matrix::identity(kQ, 2)},
      {"sl2lts -> sl2+sl2", corpus::sl2lts(kQ), corpus::sl2pair(kQ), Matrix::identity(kQ, 3)},
  };
  for (const auto& k : cases) {
    const auto u = universal_algebra(k.t);
    const GradedHom hat = extend_hom(u, k.l, k.alpha);
    c.require(is_graded_hom(hat.matrix, u.algebra, k.l), k.name + " hom");
    Matrix placed(kQ, k.l.dim(), k.t.dim());
    for (std::size_t r = 0; r < k.l.odd_dim(); ++r)
      for (std::size_t j = 0; j < k.t.dim(); ++j) placed(k.l.even_dim() + r, j) = k.alpha(r, j);
    c.require(hat.matrix * u.iota == placed, k.name + " restriction");
    const auto [g, freedom] = support::solve_even_block(u, k.l, k.alpha);
    c.require(g.has_value() && freedom == 0, k.name + " second route solvable and unique");
    if (g) c.require(*g == hat.matrix.block(0, 0, k.l.even_dim(), u.algebra.even_dim()), k.name + " routes agree");
  }
}

void round_trip(Criterion& c) {
  for (const auto& [name, t] : support::corpus_lts()) c.require(odd_part_lts(universal_algebra(t).algebra) == t, name);
}

void cohomology(Criterion& c) {
  struct Case {
    std::string name;
    GradedLieAlgebra l;
    oracle::Algebra o;
    std::size_t expected;
  };
  const std::vector<Case> cases = {{"ab2", corpus::ab2(kQ), oracle::ab2(), 1},
                                   {"heis", corpus::heis(kQ), oracle::heis(), 0},
                                   {"sl2graded", corpus::sl2graded(kQ), oracle::sl2graded(), 0}};
  for (const auto& k : cases) {
    const std::size_t oracle_dim = oracle::h2_trivial(k.o);
    const std::size_t dim = h2_gr(k.l).dim;
    c.require(oracle_dim == k.expected, k.name + " oracle");
    c.require(dim == oracle_dim, k.name + " library vs oracle");
    const std::size_t kernel = universal_central_0_extension(k.l).kernel.dim();
    c.require(kernel == k.expected, k.name + " kernel of upsilon hat");
    const bool closed = is_0_centrally_closed(k.l);
    c.require(closed == (dim == 0) && closed == (kernel == 0), k.name + " closedness cross-check");
  }
}

void splitting(Criterion& c) {
  for (const auto& f : {kQ, FieldSpec::prime(3)})
    for (const auto& l : {corpus::ab2(f), corpus::heis(f)}) {
      const auto k = GradedModule::trivial(l, 1);
      const auto h2 = h2_gr(k);
      std::vector<Cochain> samples;
      for (std::size_t i = 0; i < h2.cocycles.dim(); ++i) samples.push_back(Cochain::from_flat(k, 2, h2.cocycles.basis_vector(i)));
      for (std::size_t i = 0; i < h2.coboundaries.dim(); ++i)
        samples.push_back(Cochain::from_flat(k, 2, h2.coboundaries.basis_vector(i)));
      for (const auto& sigma : samples) {
        const auto prob = cocycle_extension(sigma);
        const auto s = split_central_0_extension(prob);
        const std::string tag = "dims " + std::to_string(l.even_dim()) + "," + std::to_string(l.odd_dim()) + " over " + f.tag();
        c.require(s.split() == h2.coboundaries.contains(sigma.flat()), tag + " dichotomy");
        if (s.split()) {
          c.require((prob.phi.matrix * s.psi->matrix).is_identity(), tag + " section");
          c.require(is_graded_hom(s.psi->matrix, l, prob.total), tag + " hom law");
        } else {
          c.require(s.certificate.has_value(), tag + " certificate");
        }
      }
    }
}

io::Json thm_a(const std::string& name, int& code) {
  std::ostringstream out, err;
  code = cli::run({"thm-a", name}, out, err);
  return code == cli::kInvalid ? io::Json() : io::Json::parse(out.str());
}

void theorem_a(Criterion& c) {
  std::vector<std::string> positive = {"heis", "sl2graded"};
  for (const auto& [name, t] : support::corpus_lts()) positive.push_back("a_of(" + name + ")");
  for (const auto& name : positive) {
    int code = 0;
    const io::Json r = thm_a(name, code);
    c.require(code == cli::kTrue, name + " verdict");
    if (code != cli::kTrue) continue;
    const io::Json& w = r["witnesses"].back()["isomorphism"];
    const auto hom = std::get<GradedHom>(io::from_json(w).object);
    const auto target = std::get<GradedLieAlgebra>(corpus::lookup(name, kQ));
    c.require(hom.target == target && support::is_graded_iso(hom.matrix, hom.source, target), name + " witness");
  }
  const std::vector<std::pair<std::string, std::string>> negative = {{"ab2", "H2_gr dim 1"},
                                                                     {"sl2line", "not generated by L1"}};
  for (const auto& [name, obstruction] : negative) {
    int code = 0;
    const io::Json r = thm_a(name, code);
    c.require(code == cli::kFalse, name + " verdict");
    if (code == cli::kFalse) c.require(r["witnesses"][0]["obstruction"] == obstruction, name + " obstruction");
  }
}

void coboundary_square(Criterion& c) {
  for (const auto& f : {kQ, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (const auto& [name, l] : support::corpus_graded(f)) {
      const auto k = GradedModule::trivial(l, 1);
      for (const auto& g : graded_cochain_basis(k, 1))
        c.require(is_zero(coboundary(coboundary(g)).flat()), name + " over " + f.tag());
    }
}

void functoriality(Criterion& c) {
  for (const auto& [name, t] : support::corpus_lts())
    c.require(functor_a_on_hom(LtsHom::identity(t)).matrix.is_identity(), name + " identity");

  const auto odd2 = corpus::odd2(kQ), sl2lts = corpus::sl2lts(kQ);
  const auto abl2 = corpus::abl(kQ, 2), abl3 = corpus::abl(kQ, 3);
  const auto scale3 = [](std::size_t n, std::size_t e, std::size_t f) {
    Matrix d = Matrix::identity(kQ, n);
    d(e, e) = Scalar(kQ, 3);
    d(f, f) = Scalar::parse(kQ, "1/3");
    return d;
  };
  const auto incl = LtsHom::make(odd2, sl2lts, Matrix::from_ints(kQ, {{0, 0}, {1, 0}, {0, 1}}));
  const auto swap = LtsHom::make(odd2, odd2, Matrix::from_ints(kQ, {{0, 1}, {1, 0}}));
  const auto odd_scale = LtsHom::make(odd2, odd2, scale3(2, 0, 1));
  const auto neg = LtsHom::make(sl2lts, sl2lts, Scalar(kQ, -1) * Matrix::identity(kQ, 3));
  const auto chev = LtsHom::make(sl2lts, sl2lts, Matrix::from_ints(kQ, {{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}));
  const auto scale = LtsHom::make(sl2lts, sl2lts, scale3(3, 1, 2));
  const auto up = LtsHom::make(abl2, abl3, Matrix::from_ints(kQ, {{1, 0}, {2, 1}, {0, -1}}));
  const auto down = LtsHom::make(abl3, abl2, Matrix::from_ints(kQ, {{1, 1, 0}, {0, 2, 1}}));

  const std::vector<std::pair<LtsHom, LtsHom>> pairs = {
      {incl, neg}, {swap, incl}, {odd_scale, incl}, {chev, scale}, {up, down}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [alpha, beta] = pairs[i];
    const Matrix lhs = functor_a_on_hom(compose(beta, alpha)).matrix;
    const Matrix rhs = functor_a_on_hom(beta).matrix * functor_a_on_hom(alpha).matrix;
    c.require(lhs == rhs, "pair " + std::to_string(i));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"axiom suite", axioms},
      {"construction validity", constructions},
      {"central extension contract", central_extension},
      {"universality", universality},
      {"round trip", round_trip},
      {"cohomology values", cohomology},
      {"splitting dichotomy", splitting},
      {"thm-a end to end", theorem_a},
      {"coboundary squares to zero", coboundary_square},
      {"functoriality", functoriality},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << '\n';
    for (const auto& f : c.failures()) std::cout << "    " << f << '\n';
    failed += c.ok() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
