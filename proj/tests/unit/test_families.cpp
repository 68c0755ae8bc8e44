#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "fourier_l1/error.hpp"
#include "fourier_l1/families.hpp"
#include "fourier_l1/summability.hpp"
#include "support.hpp"

using namespace fourier_l1;

TEST(Families, GeometricZeroRadius) {
  const CoefficientGrid g = build(GeometricFamily{0.0, 0.0}, 3, 3);
  for (int j = -3; j <= 3; ++j)
    for (int k = -3; k <= 3; ++k) EXPECT_EQ(g(j, k), cplx(j == 0 && k == 0 ? 1.0 : 0.0));
  const SampleGrid f = *closed_form(GeometricFamily{0.0, 0.0}, 8, 8);
  for (cplx v : f.values()) EXPECT_EQ(v, cplx(1));
}

TEST(Families, FiniteList) {
  const CoefficientGrid g = build(FiniteFamily{{{1, 2, {3, 0}}}}, 4, 4);
  int nonzero = 0;
  for (cplx v : g.values()) nonzero += v != cplx{};
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(g(1, 2), cplx(3));
  EXPECT_EQ(reference_truncation(FiniteFamily{{{1, 2, {3, 0}}, {-4, 0, {1, 1}}}}, 1e-12), std::pair(4, 2));
}

TEST(Families, RandomSparseIsDeterministic) {
  const RandomSparseFamily spec{42, 12, 9, 0.3, 1.5};
  const CoefficientGrid a = build(spec, 12, 9), b = build(spec, 12, 9);
  EXPECT_TRUE(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  const CoefficientGrid sub = build(spec, 5, 4);
  for (int j = -5; j <= 5; ++j)
    for (int k = -4; k <= 4; ++k) EXPECT_EQ(sub(j, k), a(j, k));
  int nonzero = 0;
  for (cplx v : a.values()) nonzero += v != cplx{};
  EXPECT_GT(nonzero, 0);
  EXPECT_LT(nonzero, int(a.values().size()));
  const CoefficientGrid other = build(RandomSparseFamily{43, 12, 9, 0.3, 1.5}, 12, 9);
  EXPECT_FALSE(std::equal(a.values().begin(), a.values().end(), other.values().begin()));
}

TEST(Families, PoissonClosedForm) {
  const SampleGrid f = *closed_form(GeometricFamily{0.5, 0.5}, 4, 4);
  // Node (2, 2) is (0, 0): P_{1/2}(0) = 0.75 / 0.25 = 3.
  EXPECT_NEAR(f(2, 2).real(), 9.0, 1e-14);

  const GeometricFamily spec{0.7, 0.3};
  const SampleGrid exact = *closed_form(spec, 64, 64);
  const SampleGrid series = partial_sum(build(spec, 200, 200), 200, 200, 64, 64);
  EXPECT_LE(max_deviation(exact, series).value, 1e-10);
  double lo = 1e300;
  for (cplx v : exact.values()) lo = std::min(lo, v.real());
  EXPECT_GE(lo, -1e-12);
}

TEST(Families, GeometricGridsAreConjugateSymmetric) {
  const CoefficientGrid g = build(GeometricFamily{0.6, 0.2}, 6, 6);
  for (int j = -6; j <= 6; ++j)
    for (int k = -6; k <= 6; ++k) {
      EXPECT_EQ(g(-j, -k), std::conj(g(j, k)));
      EXPECT_GE(g(j, k).real(), 0.0);
      EXPECT_EQ(g(j, k).imag(), 0.0);
    }
}

TEST(Families, ProductClosedForms) {
  const ProductFamily both{GeometricSequence{0.4}, FiniteSequence{{{1, {0.5, 0}}, {-1, {0.5, 0}}}}};
  const SampleGrid f = *closed_form(both, 16, 16);
  const SampleGrid s = partial_sum(build(both, 120, 1), 120, 1, 16, 16);
  EXPECT_LE(max_deviation(f, s).value, 1e-12);
  EXPECT_FALSE(closed_form(ProductFamily{GeometricSequence{0.4}, PowerSequence{2.0}}, 8, 8));
  EXPECT_FALSE(closed_form(RandomSparseFamily{1, 4, 4, 0.5, 0.0}, 8, 8));
}

TEST(Families, GeometricTruncationDoublingCheck) {
  const GeometricFamily spec{0.5, 0.5};
  const auto [J, K] = reference_truncation(spec, 1e-12);
  EXPECT_EQ(J, K);
  const SampleGrid sj = partial_sum(build(spec, 2 * J, 2 * K), J, K, 32, 32);
  const SampleGrid s2j = partial_sum(build(spec, 2 * J, 2 * K), 2 * J, 2 * K, 32, 32);
  EXPECT_LE(max_deviation(sj, s2j).value, 1e-12);
  const auto [J1, K1] = reference_truncation(spec, 1e-6);
  EXPECT_LT(J1, J);
  (void)K1;
}

TEST(Families, TruncationAvailability) {
  try {
    reference_truncation(RandomSparseFamily{1, 50, 50, 0.5, 0.0}, 1e-8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unavailable);
  }
  const auto [J, K] = reference_truncation(RandomSparseFamily{1, 50, 40, 0.5, 3.0}, 1e-3);
  EXPECT_LE(J, 50);
  EXPECT_LE(K, 40);
  EXPECT_THROW(reference_truncation(ProductFamily{PowerSequence{1.0}, GeometricSequence{0.1}}, 1e-6), Error);
}

TEST(Families, Validation) {
  EXPECT_THROW(build(GeometricFamily{1.0, 0.2}, 2, 2), Error);
  EXPECT_THROW(build(RandomSparseFamily{1, 3, 3, 0.0, 1.0}, 2, 2), Error);
  EXPECT_THROW(build(GeometricFamily{0.2, 0.2}, 0, 2), Error);
}

TEST(Families, JsonAndShorthand) {
  const std::vector<FamilySpec> specs = {
      FiniteFamily{{{1, -2, {0.25, -1.5}}}}, GeometricFamily{0.7, 0.3},
      ProductFamily{PowerSequence{2.5}, FiniteSequence{{{0, {1, 0}}}}},
      RandomSparseFamily{9, 4, 5, 0.5, 1.25}};
  for (const FamilySpec& s : specs) {
    nlohmann::json j;
    to_json(j, s);
    nlohmann::json back;
    to_json(back, family_from_json(j));
    EXPECT_EQ(j, back);
  }
  const auto g = std::get<GeometricFamily>(parse_family_shorthand("geometric:0.7,0.3"));
  EXPECT_EQ(g.rx, 0.7);
  EXPECT_EQ(g.ry, 0.3);
  EXPECT_EQ(std::get<GeometricFamily>(parse_family_shorthand("geometric:0.5")).ry, 0.5);
  EXPECT_TRUE(std::get<FiniteFamily>(parse_family_shorthand("zero")).entries.empty());
  EXPECT_EQ(std::get<RandomSparseFamily>(parse_family_shorthand("randomSparse:3,4,5,0.5,2")).bound_k, 5);
  EXPECT_THROW(parse_family_shorthand("geometric:abc"), Error);
  EXPECT_THROW(parse_family_shorthand("spiral:1"), Error);
  EXPECT_THROW(family_from_json(nlohmann::json{{"kind", "geometric"}, {"rx", 0.5}}), Error);
}
