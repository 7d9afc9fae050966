#include <gtest/gtest.h>

#include <random>

#include "tori/group.hpp"

using namespace tori;

TEST(Field, SmallFacts) {
  auto f2 = field(2);
  EXPECT_EQ(f2->add(1, 1), 0u);
  auto f4 = field(4);
  Elt w = f4->primitive_element();
  EXPECT_EQ(f4->mul(w, w), f4->add(w, 1));
  EXPECT_EQ(f4->modulus(), (std::vector<Elt>{1, 1, 1}));
  auto f9 = field(9);
  EXPECT_EQ(f9->order(f9->primitive_element()), 8u);
  EXPECT_THROW(field(6), ParameterError);
  EXPECT_THROW(field(1u << 17), BudgetError);
}

TEST(Field, ElementOfOrder) {
  auto f7 = field(7);
  Elt e = f7->element_of_order(3);
  EXPECT_EQ(f7->order(e), 3u);
  EXPECT_EQ(f7->element_of_order(1), 1u);
  auto f4 = field(4);
  EXPECT_EQ(f4->element_of_order(3), f4->primitive_element());
  EXPECT_THROW(f7->element_of_order(4), ParameterError);
}

TEST(Field, AxiomsPerField) {
  std::mt19937 rng(11);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 64u, 81u, 243u, 256u, 625u, 4096u, 6561u, 65536u}) {
    auto F = field(q);
    std::uniform_int_distribution<Elt> d(0, F->q() - 1);
    EXPECT_EQ(F->order(F->primitive_element()), q - 1) << q;
    for (int it = 0; it < 300; ++it) {
      Elt a = d(rng), b = d(rng), c = d(rng);
      ASSERT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c))) << q;
      ASSERT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c))) << q;
      ASSERT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c))) << q;
      ASSERT_EQ(F->add(a, F->neg(a)), 0u);
      if (a != 0) {
        ASSERT_EQ(F->mul(a, F->inv(a)), 1u);
      }
      // Frobenius is additive
      ASSERT_EQ(F->pow(F->add(a, b), F->p()), F->add(F->pow(a, F->p()), F->pow(b, F->p())));
    }
    // p * 1 == 0
    Elt s = 0;
    for (Elt i = 0; i < F->p(); ++i)
      s = F->add(s, 1);
    EXPECT_EQ(s, 0u);
  }
}

TEST(Matrix, InverseDeterminantRank) {
  auto F = field(5);
  Matrix m(F, 3, 3);
  Elt vals[] = {1, 2, 0, 3, 1, 4, 0, 2, 2};
  for (int i = 0; i < 9; ++i)
    m(i / 3, i % 3) = vals[i];
  Matrix inv = m.inverse();
  EXPECT_TRUE((m * inv).is_identity());
  EXPECT_EQ(F->mul(m.determinant(), inv.determinant()), 1u);
  Matrix sing = m;
  for (int j = 0; j < 3; ++j)
    sing(2, j) = F->add(m(0, j), m(1, j));
  EXPECT_EQ(sing.rank(), 2);
  EXPECT_EQ(sing.determinant(), 0u);
}

TEST(Dickson, Examples) {
  auto F = field(2);
  EXPECT_TRUE(dickson_even(Matrix::identity(F, 4)));
  // E + (e_{1,2} - e_{-2,-1}) in (1,2,-1,-2) coordinates
  EXPECT_TRUE(dickson_even(orthogonal_root_element(F, 2, 0, 1, 2, 1)));
  // n_0: swap coordinates 2 and -2
  Matrix n0 = Matrix::identity(F, 4);
  n0(1, 1) = n0(3, 3) = 0;
  n0(1, 3) = n0(3, 1) = 1;
  EXPECT_FALSE(dickson_even(n0));
}

TEST(Group, ClassicalOrders) {
  EXPECT_EQ(enumerate_group(special_linear_group(3, 2)).order(), 168u);
  EXPECT_EQ(enumerate_group(special_linear_group(4, 2)).order(), 20160u);
  EXPECT_EQ(enumerate_group(special_linear_group(3, 3)).order(), 5616u);
  EXPECT_EQ(enumerate_group(special_linear_group(2, 4)).order(), 60u);
  EXPECT_EQ(enumerate_group(symplectic_group(2, 2)).order(), 720u);
  EXPECT_EQ(enumerate_group(symplectic_group(2, 3)).order(), 51840u);
  EXPECT_EQ(derived_subgroup(symplectic_group(2, 2)).order(), 360u);
  EXPECT_EQ(enumerate_group(omega_plus_group(2, 2)).order(), 36u);
  EXPECT_EQ(enumerate_group(omega_plus_group(3, 2)).order(), 20160u);
}

TEST(Group, GeneratorsPreserveForms) {
  for (auto spec : {special_linear_group(3, 4), symplectic_group(3, 3), symplectic_group(2, 4), omega_plus_group(3, 4)})
    for (auto& g : spec.generators)
      EXPECT_TRUE(is_member(spec, g)) << spec.name;
}

TEST(Group, BudgetErrorCarriesPartialCount) {
  try {
    enumerate_group(special_linear_group(4, 2), 1000);
    FAIL();
  } catch (const BudgetError& e) {
    EXPECT_GT(e.partial_count, 1000u);
  }
}

TEST(Group, NormalizerExamples) {
  auto spec = special_linear_group(3, 2);
  auto G = enumerate_group(spec);
  auto F = spec.field;
  EXPECT_EQ(subgroup_normalizer_order(G, {Matrix::identity(F, 3)}), 168u);
  // companion matrix of x^3 + x + 1: a Singer cycle of order 7
  Matrix c(F, 3, 3);
  c(1, 0) = c(2, 1) = 1;
  c(0, 2) = 1;
  c(1, 2) = 1;
  EXPECT_EQ(enumerate_generated(F, 3, {c}).order(), 7u);
  EXPECT_EQ(subgroup_normalizer_order(G, {c}), 21u);
  // order-3 element acting on a 2-dim subspace, fixing a line
  Matrix t(F, 3, 3);
  t(0, 0) = 1;
  t(2, 1) = 1;
  t(1, 2) = 1;
  t(2, 2) = 1;
  EXPECT_EQ(enumerate_generated(F, 3, {t}).order(), 3u);
  EXPECT_EQ(subgroup_normalizer_order(G, {t}), 6u);
}
