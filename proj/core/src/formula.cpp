#include "kmroot/formula.hpp"

#include <algorithm>

#include "kmroot/errors.hpp"

namespace kmroot {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt stars_and_bars(long n, long l) {
  if (l <= 0) throw InvalidArgument("stars_and_bars requires at least one box");
  if (n < 0) throw InvalidArgument("stars_and_bars requires a nonnegative ball count");
  return binomial(n + l - 1, l - 1);
}

FormulaParams FormulaParams::make(int a1, int a2, int n1, int n2, int n3) {
  if (a1 < 1 || a2 < 1) throw InvalidArgument("formula requires a1, a2 >= 1");
  if (n1 < 2 || n2 < 2 || n3 < 2) {
    throw InvalidArgument("closed formula requires n1, n2, n3 >= 2; use the peterson or quotient oracle for (" +
                          std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) + ")");
  }
  return FormulaParams{a1, a2, n1, n2, n3};
}

std::string_view to_string(BVariant v) {
  switch (v) {
    case BVariant::kSection44: return "section44";
    case BVariant::kLemma410: return "lemma410";
    case BVariant::kGuarded: return "guarded";
  }
  throw InvalidArgument("unknown B variant");
}

BVariant parse_variant(std::string_view name) {
  if (name == "section44") return BVariant::kSection44;
  if (name == "lemma410") return BVariant::kLemma410;
  if (name == "guarded") return BVariant::kGuarded;
  throw InvalidArgument("unknown B variant '" + std::string(name) + "'");
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::kNeither: return "neither";
    case Branch::kC1Only: return "C1only";
    case Branch::kC2Only: return "C2only";
    case Branch::kBoth: return "both";
  }
  return "?";
}

BigInt compute_A(const FormulaParams& p) {
  BigInt sum = 0;
  for (int i = 0; i <= p.a1; ++i) {
    for (int j = 0; j <= p.a2; ++j) {
      if (i == 0 && j == 0) continue;
      sum += binomial(p.n1 + p.n2 - i - 2, p.n2 - 2) * binomial(p.n2 + p.n3 - j - 2, p.n2 - 2);
    }
  }
  return sum;
}

BigInt compute_B(const FormulaParams& p, BVariant variant) {
  // (..., 2, 3, 3, 2)-type tuples and (..., 2, 1, 1, 2)-type tuples.
  const BigInt threes_first = binomial(p.n2 + p.n3 - 4, p.n2 - 2) * binomial(p.n1 + p.n2 - 2, p.n2 - 2);
  switch (variant) {
    case BVariant::kSection44:
      return threes_first + binomial(p.n1 + p.n2 - 4, p.n2 - 2) * binomial(p.n2 + p.n3 - 2, p.n2 - 1);
    case BVariant::kLemma410:
      return threes_first + binomial(p.n1 + p.n2 - 4, p.n2 - 2) * binomial(p.n2 + p.n3 - 2, p.n2 - 2);
    case BVariant::kGuarded: {
      BigInt b = 0;
      if (p.a1 >= 2) b += binomial(p.n1 + p.n2 - 4, p.n2 - 2) * binomial(p.n2 + p.n3 - 2, p.n2 - 2);
      if (p.a2 >= 2) b += threes_first;
      return b;
    }
  }
  throw InvalidArgument("unknown B variant");
}

std::pair<BigInt, BigInt> compute_C(const FormulaParams& p) {
  const int n = p.n1 + p.n2 + p.n3;
  return {binomial(n - p.a1 - 2, p.n2 - p.a1 - 1), binomial(n - p.a2 - 2, p.n2 - p.a2 - 1)};
}

FormulaBreakdown theorem_dim(const FormulaParams& p, BVariant variant) {
  const FormulaParams checked = FormulaParams::make(p.a1, p.a2, p.n1, p.n2, p.n3);
  FormulaBreakdown out;
  out.variant = variant;
  out.within_stated_hypothesis = checked.within_stated_hypothesis();
  out.A = compute_A(checked);
  out.B = compute_B(checked, variant);
  std::tie(out.C1, out.C2) = compute_C(checked);

  const bool c1 = p.n2 >= 1 + p.a1;
  const bool c2 = p.n2 >= 1 + p.a2;
  if (c1 && c2) {
    out.branch = Branch::kBoth;
  } else if (c1) {
    out.branch = Branch::kC1Only;
  } else if (c2) {
    out.branch = Branch::kC2Only;
  } else {
    out.branch = Branch::kNeither;
  }

  out.dim = out.A - out.B;
  if (out.branch == Branch::kC1Only || out.branch == Branch::kBoth) out.dim -= out.C1;
  if (out.branch == Branch::kC2Only || out.branch == Branch::kBoth) out.dim -= out.C2;
  return out;
}

FormulaBreakdown corollary_hyperbolic(int n1, int n2, int n3) {
  return theorem_dim(FormulaParams::make(1, 2, n1, n2, n3), BVariant::kGuarded);
}

}  // namespace kmroot
