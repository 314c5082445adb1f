#include <gtest/gtest.h>

#include "lietrip/error.hpp"
#include "support.hpp"

using namespace lietrip;
using support::kQ;

namespace {

const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);

}  // namespace

TEST(Field, ParseAndTag) {
  EXPECT_EQ(FieldSpec::parse("Q"), kQ);
  EXPECT_EQ(FieldSpec::parse("Fp:7").characteristic(), 7u);
  EXPECT_EQ(FieldSpec::prime(5).tag(), "Fp:5");
  EXPECT_THROW(FieldSpec::prime(4), std::invalid_argument);
  EXPECT_THROW(FieldSpec::parse("R"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::prime(1ull << 31), std::invalid_argument);
}

TEST(Field, RationalArithmetic) {
  const Scalar a = Scalar::parse(kQ, "6/4");
  EXPECT_EQ(a.to_string(), "3/2");
  EXPECT_EQ((a * Scalar(kQ, 2)).to_string(), "3");
  EXPECT_EQ((a - a).is_zero(), true);
  EXPECT_EQ((a / a).is_one(), true);
  EXPECT_EQ(Scalar::parse(kQ, "-2/-4").to_string(), "1/2");
  EXPECT_THROW(Scalar::zero(kQ).inverse(), std::domain_error);
}

TEST(Field, PrimeArithmetic) {
  const FieldSpec f7 = FieldSpec::prime(7);
  EXPECT_EQ(Scalar(f7, -1).to_string(), "6");
  EXPECT_EQ((Scalar(f7, 3) * Scalar(f7, 5)).to_string(), "1");
  EXPECT_EQ(Scalar(f7, 3).inverse().to_string(), "5");
  EXPECT_EQ(Scalar::parse(f7, "1/2").to_string(), "4");
  EXPECT_THROW(Scalar::parse(f7, "1/7"), std::domain_error);
  EXPECT_TRUE((Scalar(kF2, 1) + Scalar(kF2, 1)).is_zero());
  EXPECT_THROW(Scalar(kF2, 1) + Scalar(kF3, 1), DimensionError);
}

TEST(Rref, Examples) {
  const auto id = rref(Matrix::identity(kQ, 2));
  EXPECT_EQ(id.reduced, Matrix::identity(kQ, 2));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));

  const auto zero = rref(Matrix(kQ, 3, 3));
  EXPECT_TRUE(zero.reduced.is_zero());
  EXPECT_TRUE(zero.pivots.empty());

  const auto r = rref(Matrix::from_ints(kQ, {{2, 4}, {1, 2}}));
  EXPECT_EQ(r.reduced, Matrix::from_ints(kQ, {{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix::identity(kQ, 4)).dim(), 0u);
  EXPECT_EQ(kernel_basis(Matrix(kQ, 2, 3)), Subspace::full(kQ, 3));

  const Subspace k = kernel_basis(Matrix::from_ints(kF2, {{1, 1}}));
  // enumerate F2^2
  std::vector<Vector> found;
  for (long a = 0; a < 2; ++a)
    for (long b = 0; b < 2; ++b)
      if (((a + b) % 2) == 0 && (a || b)) found.push_back(vector_from_ints(kF2, {a, b}));
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(k, Subspace::span(kF2, 2, found));
}

TEST(Solve, Examples) {
  const Vector v = vector_from_ints(kQ, {3, -1, 2});
  EXPECT_EQ(*solve(Matrix::identity(kQ, 3), v), v);
  EXPECT_FALSE(solve(Matrix::from_ints(kQ, {{1, 1}, {1, 1}}), vector_from_ints(kQ, {1, 2})).has_value());
  const Matrix m = Matrix::from_ints(kQ, {{1, 1}});
  const auto x = solve(m, vector_from_ints(kQ, {1}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, vector_from_ints(kQ, {1, 0}));
  EXPECT_EQ(m * *x, vector_from_ints(kQ, {1}));
  EXPECT_THROW(solve(m, vector_from_ints(kQ, {1, 2})), DimensionError);
}

TEST(Solve, InconsistencyCertificate) {
  const Matrix m = Matrix::from_ints(kQ, {{1, 1}, {1, 1}, {0, 1}});
  const Vector rhs = vector_from_ints(kQ, {1, 2, 0});
  const auto r = solve_or_certify(m, rhs);
  ASSERT_TRUE(std::holds_alternative<Inconsistency>(r));
  const Vector& y = std::get<Inconsistency>(r).witness;
  EXPECT_TRUE(is_zero(m.transpose() * y));
  Scalar dot = Scalar::zero(kQ);
  for (std::size_t i = 0; i < y.size(); ++i) dot += y[i] * rhs[i];
  EXPECT_FALSE(dot.is_zero());
  EXPECT_TRUE(std::holds_alternative<Vector>(solve_or_certify(Matrix::identity(kQ, 2), vector_from_ints(kQ, {1, 1}))));
}

TEST(Subspaces, Examples) {
  const Subspace x = Subspace::span(kQ, 2, {vector_from_ints(kQ, {1, 0})});
  const Subspace y = Subspace::span(kQ, 2, {vector_from_ints(kQ, {0, 1})});
  EXPECT_EQ(sum(x, y), Subspace::full(kQ, 2));
  EXPECT_EQ(intersect(x, y).dim(), 0u);
  EXPECT_TRUE(contains(sum(x, y), vector_from_ints(kQ, {5, 7})));
  EXPECT_THROW(sum(x, Subspace::full(kQ, 3)), DimensionError);

  const Subspace a = Subspace::span(kQ, 3, {vector_from_ints(kQ, {1, 1, 1})});
  const QuotientSpace q = quotient(3, a);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_TRUE(is_zero(q.projection() * vector_from_ints(kQ, {1, 1, 1})));
  EXPECT_TRUE((q.projection() * q.section()).is_identity());
}

TEST(Subspaces, CanonicalEquality) {
  const Subspace a = Subspace::span(kQ, 3, {vector_from_ints(kQ, {1, 2, 3}), vector_from_ints(kQ, {0, 1, 1})});
  const Subspace b = Subspace::span(kQ, 3, {vector_from_ints(kQ, {1, 3, 4}), vector_from_ints(kQ, {2, 5, 7})});
  EXPECT_EQ(a, b);
  const auto c = a.coordinates(vector_from_ints(kQ, {1, 3, 4}));
  ASSERT_TRUE(c);
  EXPECT_FALSE(a.coordinates(vector_from_ints(kQ, {0, 0, 1})).has_value());
}

class ExactlinProperties : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(ExactlinProperties, RankNullityAndIdempotence) {
  const FieldSpec f = GetParam();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
    const Matrix m = support::random_matrix(f, r, c, rng);
    EXPECT_EQ(rank(m) + kernel_basis(m).dim(), c);
    const auto e = rref(m);
    EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
    const Subspace k = kernel_basis(m);
    for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero(m * k.basis_vector(i)));
  }
}

TEST_P(ExactlinProperties, Grassmann) {
  const FieldSpec f = GetParam();
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const Subspace a(support::random_matrix(f, rng() % (n + 1), n, rng));
    const Subspace b(support::random_matrix(f, rng() % (n + 1), n, rng));
    const Subspace i = intersect(a, b);
    EXPECT_EQ(a.dim() + b.dim(), sum(a, b).dim() + i.dim());
    EXPECT_TRUE(i.is_subspace_of(a));
    EXPECT_TRUE(i.is_subspace_of(b));
  }
}

TEST_P(ExactlinProperties, QuotientSection) {
  const FieldSpec f = GetParam();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const Subspace a(support::random_matrix(f, rng() % (n + 1), n, rng));
    const QuotientSpace q(n, a);
    EXPECT_EQ(q.dim() + a.dim(), n);
    EXPECT_TRUE((q.projection() * q.section()).is_identity());
    EXPECT_EQ(kernel_basis(q.projection()), a);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector e = unit_vector(f, n, j);
      EXPECT_TRUE(a.contains(q.lift(q.project(e)) - e));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, ExactlinProperties,
                         ::testing::Values(FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
                                           FieldSpec::prime(101)),
                         [](const auto& info) { return info.param.is_rational() ? std::string("Q")
                                                                                : "F" + std::to_string(info.param.characteristic()); });
