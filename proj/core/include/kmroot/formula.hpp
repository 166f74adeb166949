#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "kmroot/bigint.hpp"
#include "kmroot/gcm.hpp"

namespace kmroot {

/// Binomial coefficient with the convention C(n, k) = 0 whenever k < 0,
/// n < 0 or k > n.
BigInt binomial(long n, long k);

/// Ways to place n indistinguishable balls into l boxes: C(n + l − 1, l − 1).
BigInt stars_and_bars(long n, long l);

/// Parameters (a1, a2) of the rank-3 family and the weight (n1, n2, n3),
/// restricted to the closed formula's range n_i ≥ 2.
struct FormulaParams {
  int a1 = 1;
  int a2 = 1;
  int n1 = 2;
  int n2 = 2;
  int n3 = 2;

  /// Throws InvalidArgument (pointing at the oracles) when a_i < 1 or n_i < 2.
  static FormulaParams make(int a1, int a2, int n1, int n2, int n3);

  Weight weight() const { return Weight{n1, n2, n3}; }
  /// The closed formula assumes a1 ≤ a2.
  bool within_stated_hypothesis() const noexcept { return a1 <= a2; }
};

/// The three readings of the dependent-tuple count B.
enum class BVariant {
  kSection44,  // second product ends in C(n2+n3−2, n2−1)
  kLemma410,   // second product ends in C(n2+n3−2, n2−2)
  kGuarded,    // kLemma410, e1-term only if a1 ≥ 2, e3-term only if a2 ≥ 2
};

std::string_view to_string(BVariant v);
/// Accepts "section44", "lemma410" or "guarded".
BVariant parse_variant(std::string_view name);

/// Which trivial-tuple counts the piecewise rule subtracts. kC2Only arises
/// only for a1 > a2, where the middle branch is mirrored.
enum class Branch { kNeither, kC1Only, kC2Only, kBoth };

std::string_view to_string(Branch b);

struct FormulaBreakdown {
  BigInt A;
  BigInt B;
  BVariant variant = BVariant::kGuarded;
  BigInt C1;
  BigInt C2;
  Branch branch = Branch::kNeither;
  BigInt dim;
  bool within_stated_hypothesis = true;
};

BigInt compute_A(const FormulaParams& p);
BigInt compute_B(const FormulaParams& p, BVariant variant);
/// (C1, C2), unconditionally evaluated.
std::pair<BigInt, BigInt> compute_C(const FormulaParams& p);

/// The piecewise closed formula:
///   A − B               if n2 < min(1+a1, 1+a2)
///   A − B − C1          if 1+a1 ≤ n2 < 1+a2
///   A − B − C1 − C2     if n2 ≥ max(1+a1, 1+a2)
/// with C1/C2 exchanged in the middle branch when a1 > a2.
FormulaBreakdown theorem_dim(const FormulaParams& p, BVariant variant);

/// theorem_dim for (a1, a2) = (1, 2) with the guarded B.
FormulaBreakdown corollary_hyperbolic(int n1, int n2, int n3);

}  // namespace kmroot
