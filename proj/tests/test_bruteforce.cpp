#include <gtest/gtest.h>

#include "tori/bruteforce.hpp"

using namespace tori;

namespace {

const BruteForceRow& row(const BruteForceReport& rep, const std::string& cls) {
  for (auto& r : rep.rows)
    if (r.descriptor.class_string() == cls)
      return r;
  throw std::runtime_error("missing class " + cls);
}

} // namespace

TEST(BruteForce, SL3Of2) {
  auto rep = brute_force_normalizers(Family::A, 3, 2);
  EXPECT_EQ(rep.group_order, 168u);
  auto& split = row(rep, "(1)(1)(1)");
  EXPECT_EQ(split.torus_order, 1u);
  EXPECT_EQ(split.algebraic_order, 6u);
  EXPECT_EQ(split.normaliser_order, 168u);
  EXPECT_TRUE(split.oracle_degenerate());
  auto& singer = row(rep, "(3)");
  EXPECT_EQ(singer.torus_order, 7u);
  EXPECT_EQ(singer.algebraic_order, 21u);
  EXPECT_EQ(singer.normaliser_order, 21u);
  EXPECT_FALSE(singer.oracle_degenerate());
  EXPECT_TRUE(rep.agrees());
}

TEST(BruteForce, SL4Of2) {
  auto rep = brute_force_normalizers(Family::A, 4, 2);
  EXPECT_EQ(rep.group_order, 20160u);
  EXPECT_EQ(row(rep, "(1)(1)(2)").normaliser_order, 36u);
  EXPECT_TRUE(rep.agrees());
}

TEST(BruteForce, Sp4Of2AndDerived) {
  auto full = brute_force_normalizers(Family::C, 2, 2);
  EXPECT_EQ(full.group_order, 720u);
  EXPECT_TRUE(full.agrees());

  auto derived = brute_force_normalizers(Family::C, 2, 2, true);
  EXPECT_EQ(derived.group_order, 360u);
  EXPECT_TRUE(derived.agrees());
  std::vector<std::string> degenerate;
  for (auto& r : derived.rows)
    if (r.oracle_degenerate())
      degenerate.push_back(r.descriptor.class_string());
  EXPECT_EQ(degenerate, (std::vector<std::string>{"(1)(1)", "(2)", "(1)(1-)"}));
}

TEST(BruteForce, Sp4Of3) {
  auto rep = brute_force_normalizers(Family::C, 2, 3);
  EXPECT_EQ(rep.group_order, 51840u);
  EXPECT_TRUE(rep.agrees());
  EXPECT_TRUE(row(rep, "(1)(1-)").oracle_degenerate());
  EXPECT_FALSE(row(rep, "(2)").oracle_degenerate());
}

TEST(BruteForce, ConjugatorIntertwinesFrobenius) {
  auto r = realize_torus(make_descriptor(Family::C, 2, 3, "(2-)", false), 8);
  Matrix C = torus_conjugator(r);
  EXPECT_EQ(C.frobenius(3), C * weyl_lift(r.layout, r.field, r.descriptor.type));
}

TEST(BruteForce, RejectsUnsupported) {
  EXPECT_THROW(brute_force_normalizers(Family::D, 4, 2), UnsupportedError);
  EXPECT_THROW(brute_force_normalizers(Family::A, 2, 4), UnsupportedError);
}
