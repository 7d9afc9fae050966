#include <gtest/gtest.h>

#include "tori/torus.hpp"

using namespace tori;

namespace {
TorusClassDescriptor desc(Family f, int n, std::uint64_t q, const std::string& cls, bool filter = true) {
  return make_descriptor(f, n, q, cls, filter);
}
} // namespace

TEST(TorusFactors, SymplecticMixedSigns) {
  auto t = torus_factor_orders(desc(Family::C, 3, 2, "(1)(2-)"));
  ASSERT_EQ(t.factors.size(), 2u);
  EXPECT_EQ(t.factors[0].order, 1u);
  EXPECT_EQ(t.factors[0].sign, 1);
  EXPECT_EQ(t.factors[1].order, 5u);
  EXPECT_EQ(t.factors[1].sign, -1);
  EXPECT_EQ(t.full_order, 5u);
  EXPECT_EQ(t.constraint, TorusConstraint::None);
}

TEST(TorusFactors, SingerAndUnitary) {
  auto a = torus_factor_orders(desc(Family::A, 3, 2, "(3)"));
  EXPECT_EQ(a.full_order, 7u);
  EXPECT_EQ(a.constraint, TorusConstraint::DeterminantOne);
  EXPECT_EQ(a.intersected_order, 7u);
  auto u = torus_factor_orders(desc(Family::A2, 3, 2, "(3)", false));
  EXPECT_EQ(u.full_order, 9u);
  EXPECT_EQ(u.intersected_order, 3u);
  auto u2 = torus_factor_orders(desc(Family::A2, 4, 2, "(2)(2)"));
  EXPECT_EQ(u2.factors[0].order, 3u);
  EXPECT_EQ(u2.intersected_order, 3u);
}

TEST(TorusIntersection, Examples) {
  EXPECT_EQ(intersected_torus_order(desc(Family::A, 4, 2, "(1)(1)(2)")), 3u);
  EXPECT_EQ(intersected_torus_order(desc(Family::D, 2, 3, "(1)(1)", false)), 2u);
  EXPECT_EQ(intersected_torus_order(desc(Family::C, 2, 2, "(1)(1)")), 1u);
  EXPECT_EQ(intersected_torus_order(desc(Family::A, 3, 3, "(1)(1)(1)")), 4u);
  EXPECT_EQ(intersected_torus_order(desc(Family::A, 2, 5, "(1)(1)")), 4u);
}

TEST(TorusIntersection, EvenSumRuleOnlyInOddCharacteristic) {
  auto odd = torus_factor_orders(desc(Family::B, 3, 3, "(1)(2-)"));
  EXPECT_EQ(odd.constraint, TorusConstraint::EvenExponentSum);
  EXPECT_EQ(odd.intersected_order * 2, odd.full_order);
  auto even = torus_factor_orders(desc(Family::D, 4, 4, "(1)(3)"));
  EXPECT_EQ(even.constraint, TorusConstraint::None);
  EXPECT_EQ(torus_factor_orders(desc(Family::B, 3, 2, "(3)")).constraint, TorusConstraint::None);
}

TEST(TorusIntersection, DividesFullOrder) {
  for (auto f : {Family::A, Family::A2, Family::B, Family::C, Family::D, Family::D2})
    for (std::uint64_t q : {2u, 3u, 4u, 5u})
      for (int n = simple_range_min(f); n <= 5; ++n)
        for (auto& d : enumerate_torus_classes(f, n, q, false)) {
          auto t = torus_factor_orders(d);
          EXPECT_EQ(t.full_order % t.intersected_order, 0u) << d.str();
          bool all_odd = std::all_of(t.factors.begin(), t.factors.end(), [](auto& x) { return x.order % 2 == 1; });
          if (t.constraint == TorusConstraint::EvenExponentSum && all_odd) {
            EXPECT_EQ(t.intersected_order, t.full_order);
          }
        }
}

TEST(TorusFactors, MonotoneInQ) {
  for (auto& d : enumerate_torus_classes(Family::C, 4, 2)) {
    std::uint64_t prev = 0;
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
      auto dq = d;
      dq.q = q;
      auto full = torus_factor_orders(dq).full_order;
      EXPECT_GT(full, prev);
      prev = full;
    }
  }
}

TEST(AlgebraicNormaliser, Examples) {
  EXPECT_EQ(algebraic_normaliser_order(desc(Family::A, 3, 2, "(3)")), 21u);
  EXPECT_EQ(algebraic_normaliser_order(desc(Family::A, 3, 2, "(1)(1)(1)")), 6u);
  EXPECT_EQ(algebraic_normaliser_order(desc(Family::C, 2, 3, "(1-)(1-)")), 128u);
}

TEST(AlgebraicNormaliser, TwistedBeyondOracleIsUnsupported) {
  EXPECT_THROW(algebraic_normaliser_order(desc(Family::D2, 8, 3, "(8-)")), UnsupportedError);
  EXPECT_NO_THROW(algebraic_normaliser_order(desc(Family::D2, 5, 3, "(5-)")));
}

TEST(ClassEquation, SumsToWeylOrderForEveryFamily) {
  for (auto f : {Family::A, Family::A2, Family::B, Family::C, Family::D, Family::D2})
    for (int n = simple_range_min(f); n <= 7; ++n) {
      std::uint64_t w = weyl_group_order(is_type_d(f) ? Family::D : f, n);
      std::uint64_t sum = 0;
      for (auto& d : enumerate_torus_classes(f, n, 3, false))
        sum += w / centralizer_order(d);
      EXPECT_EQ(sum, w) << to_string(f) << " n=" << n;
    }
}
