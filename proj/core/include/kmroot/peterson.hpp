#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "kmroot/bigint.hpp"
#include "kmroot/gcm.hpp"

namespace kmroot {

/// (ρ, λ) for a symmetric GCM with diagonal 2, i.e. height(λ).
std::int64_t rho_pairing(const CartanMatrix& a, const Weight& lambda);

/// What to do when (λ,λ) − 2(ρ,λ) vanishes at a non-simple weight λ.
///
/// These weights include every ρ − wρ (w in the Weyl group), so they occur
/// already at height 4 in finite type. The recurrence then only says that its
/// right-hand side is 0; kWeylDenominator recovers c_λ as minus the
/// λ-coefficient of log Σ_w ε(w) e^{-(ρ - wρ)} instead.
enum class SingularPolicy { kWeylDenominator, kThrow };

/// Memoized root multiplicities of one symmetric Kac-Moody algebra via
///
///   ((λ,λ) − 2(ρ,λ)) c_λ = Σ_{μ+ν=λ; μ,ν>0} (μ,ν) c_μ c_ν,
///   c_λ = Σ_{k≥1, k|λ} mult(λ/k)/k.
///
/// Single-writer: one thread drives a table at a time. See
/// SharedMultiplicityTable for concurrent use.
class MultiplicityTable {
 public:
  explicit MultiplicityTable(CartanMatrix a, SingularPolicy policy = SingularPolicy::kWeylDenominator);

  const CartanMatrix& algebra() const noexcept { return algebra_; }

  /// mult(λ) for λ ≠ 0 in the positive cone; 0 for non-roots.
  BigInt mult(const Weight& lambda);
  BigRational c_value(const Weight& lambda);

  /// Cached value, or nullptr when λ has not been computed yet.
  const BigInt* cached_mult(const Weight& lambda) const;
  std::size_t size() const noexcept { return entries_.size(); }
  /// Weights where the recurrence was singular and the denominator identity was used.
  const std::vector<Weight>& singular_weights() const noexcept { return singular_; }

 private:
  struct Entry {
    BigRational c;
    BigInt mult;
  };

  void ensure(const Weight& lambda);
  BigRational weyl_c(const Weight& lambda);

  CartanMatrix algebra_;
  SingularPolicy policy_;
  std::unordered_map<Weight, Entry, WeightHash> entries_;
  std::vector<Weight> singular_;
  // Coefficients of log(Σ_w ε(w) e^{-(ρ-wρ)}), filled on demand.
  Weight log_bound_;
  std::map<Weight, BigRational> log_series_;
};

/// Convenience wrapper: table.mult(λ).
BigInt peterson_mult(MultiplicityTable& table, const Weight& lambda);

/// MultiplicityTable behind a readers-writer lock: cached lookups take a
/// shared lock, misses take the exclusive lock and extend the table.
class SharedMultiplicityTable {
 public:
  explicit SharedMultiplicityTable(CartanMatrix a, SingularPolicy policy = SingularPolicy::kWeylDenominator)
      : table_(std::move(a), policy) {}

  BigInt mult(const Weight& lambda);

 private:
  mutable std::shared_mutex mutex_;
  MultiplicityTable table_;
};

/// ρ − wρ paired with ε(w) for every Weyl group element w with ρ − wρ ≤ bound.
std::vector<std::pair<Weight, int>> weyl_denominator_terms(const CartanMatrix& a, const Weight& bound);

}  // namespace kmroot
