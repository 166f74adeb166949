#include "kmroot/peterson.hpp"

#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "kmroot/errors.hpp"

namespace kmroot {
namespace {

TEST(RhoPairing, IsHeight) {
  const CartanMatrix a = paper_shape(1, 2);
  EXPECT_EQ(rho_pairing(a, {1, 0, 0}), 1);
  EXPECT_EQ(rho_pairing(a, {2, 2, 2}), 6);
  EXPECT_EQ(rho_pairing(a, {0, 0, 0}), 0);
  EXPECT_THROW(rho_pairing(CartanMatrix({{2, -1}, {-2, 2}}), {1, 1}), InvalidArgument);
}

TEST(PetersonMult, Examples) {
  MultiplicityTable a3(paper_shape(1, 1));
  EXPECT_EQ(peterson_mult(a3, {1, 1, 0}), 1);
  MultiplicityTable h(paper_shape(1, 2));
  EXPECT_EQ(peterson_mult(h, {2, 1, 0}), 0);
  EXPECT_EQ(peterson_mult(h, {1, 1, 1}), 1);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(peterson_mult(h, Weight::simple_root(3, i)), 1);
    EXPECT_EQ(peterson_mult(a3, Weight::simple_root(3, i)), 1);
  }
}

TEST(PetersonMult, RejectsZeroWeightAndRankMismatch) {
  MultiplicityTable t(paper_shape(1, 2));
  EXPECT_THROW(t.mult({0, 0, 0}), InvalidArgument);
  EXPECT_THROW(t.mult({1, 1}), InvalidArgument);
}

TEST(PetersonMult, FiniteTypeA3) {
  MultiplicityTable t(paper_shape(1, 1));
  const std::set<Weight> roots{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
  for (const Weight& w : weights_up_to_height(3, 1, 6)) {
    EXPECT_EQ(t.mult(w), roots.count(w) ? 1 : 0) << w.to_string();
  }
}

TEST(PetersonMult, SingularWeightHandling) {
  // (2,2,0) in A3: (λ,λ) − 2(ρ,λ) = 8 − 8 = 0.
  const Weight w{2, 2, 0};
  MultiplicityTable strict(paper_shape(1, 1), SingularPolicy::kThrow);
  EXPECT_THROW(strict.mult(w), RecurrenceSingular);

  MultiplicityTable t(paper_shape(1, 1));
  EXPECT_EQ(t.mult(w), 0);
  EXPECT_EQ(t.c_value(w), BigRational(1, 2));
  EXPECT_FALSE(t.singular_weights().empty());
}

TEST(PetersonMult, KnownHyperbolicValues) {
  MultiplicityTable t(paper_shape(1, 2));
  EXPECT_EQ(t.mult({2, 2, 2}), 1);
  EXPECT_EQ(t.mult({2, 3, 2}), 2);
  EXPECT_EQ(t.mult({3, 3, 3}), 1);
}

TEST(PetersonMult, AffineImaginaryRootsOfA1Tilde) {
  // [[2,-2],[-2,2]]: real roots mult 1, imaginary roots kδ mult 1.
  MultiplicityTable t(CartanMatrix({{2, -2}, {-2, 2}}));
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(t.mult({k, k}), 1);
    EXPECT_EQ(t.mult({k + 1, k}), 1);
    EXPECT_EQ(t.mult({k, k + 1}), 1);
    EXPECT_EQ(t.mult({k + 2, k}), 0);
  }
}

TEST(PetersonMult, FreshTablesAgree) {
  MultiplicityTable first(paper_shape(2, 2));
  const auto weights = weights_up_to_height(3, 1, 9);
  std::vector<BigInt> a;
  for (const Weight& w : weights) a.push_back(first.mult(w));
  MultiplicityTable second(paper_shape(2, 2));
  // Query in reverse to exercise a different fill order.
  for (std::size_t k = weights.size(); k-- > 0;) EXPECT_EQ(second.mult(weights[k]), a[k]);
}

TEST(PetersonMult, CachedValuesAreConsistentWithDivisors) {
  MultiplicityTable t(paper_shape(1, 2));
  t.mult({4, 4, 4});
  for (const Weight& w : weights_up_to_height(3, 1, 12)) {
    const BigInt* m = t.cached_mult(w);
    if (!m) continue;
    EXPECT_GE(*m, 0);
    BigRational c = 0;
    const int g = w.content();
    for (int k = 1; k <= g; ++k) {
      if (g % k) continue;
      const BigInt* sub = t.cached_mult(w.divided_by(k));
      ASSERT_NE(sub, nullptr);
      BigRational share(*sub, k);
      share.canonicalize();
      c += share;
    }
    EXPECT_EQ(c, t.c_value(w)) << w.to_string();
  }
}

TEST(SharedMultiplicityTable, MatchesPerWorkerTables) {
  const auto weights = weights_up_to_height(3, 1, 10);
  MultiplicityTable reference(paper_shape(1, 2));
  std::vector<BigInt> expected;
  for (const Weight& w : weights) expected.push_back(reference.mult(w));

  SharedMultiplicityTable shared(paper_shape(1, 2));
  std::vector<std::vector<BigInt>> got(3, std::vector<BigInt>(weights.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < got.size(); ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t k = t; k < weights.size() + t; ++k) {
        const std::size_t idx = k % weights.size();
        got[t][idx] = shared.mult(weights[idx]);
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& g : got) EXPECT_EQ(g, expected);
}

TEST(WeylDenominator, A3HasTwentyFourTerms) {
  // ρ − wρ ≤ (3,4,3) holds for every w in S4.
  const auto terms = weyl_denominator_terms(paper_shape(1, 1), {3, 4, 3});
  EXPECT_EQ(terms.size(), 24u);
  int sign_sum = 0;
  for (const auto& [w, s] : terms) sign_sum += s;
  EXPECT_EQ(sign_sum, 0);
}

}  // namespace
}  // namespace kmroot
