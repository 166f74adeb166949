#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace kmroot {

/// Nonnegative integer combination n_1 α_1 + ... + n_r α_r of simple roots.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coeffs);
  Weight(std::initializer_list<int> coeffs) : Weight(std::vector<int>(coeffs)) {}

  /// The weight α_{index} (0-based) in a lattice of the given rank.
  static Weight simple_root(std::size_t rank, std::size_t index);
  static Weight zero(std::size_t rank);

  std::size_t rank() const noexcept { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<int>& coeffs() const noexcept { return coeffs_; }

  int height() const noexcept;
  bool is_zero() const noexcept;
  bool is_simple_root() const noexcept;
  /// Componentwise ≤.
  bool dominated_by(const Weight& other) const;
  /// gcd of the coefficients; 0 for the zero weight.
  int content() const noexcept;

  Weight operator+(const Weight& other) const;
  /// Componentwise difference; throws when a coefficient would go negative.
  Weight operator-(const Weight& other) const;
  /// Exact division of every coefficient by `k`.
  Weight divided_by(int k) const;
  Weight with_added(std::size_t index, int delta) const;

  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<int> coeffs_;
};

/// Every weight μ with 0 ≤ μ ≤ bound componentwise, in lexicographic order.
std::vector<Weight> weights_in_box(const Weight& bound);

/// Every weight of the given rank whose height lies in [min_height, max_height].
std::vector<Weight> weights_up_to_height(std::size_t rank, int min_height, int max_height);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Generalized Cartan matrix: 2 on the diagonal, nonpositive off-diagonal
/// entries and a symmetric zero pattern. Immutable after construction.
class CartanMatrix {
 public:
  /// Validates the GCM invariants; throws InvalidArgument on violation.
  explicit CartanMatrix(std::vector<std::vector<int>> rows);

  std::size_t rank() const noexcept { return rank_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  bool is_symmetric() const noexcept;

  /// False only for paper_shape(1, 1), which lies outside the family's
  /// stated hypothesis max(a1, a2) ≥ 2.
  bool within_paper_hypothesis() const noexcept { return within_hypothesis_; }

  std::string to_string() const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }

 private:
  friend CartanMatrix paper_shape(int a1, int a2);

  std::size_t rank_ = 0;
  std::vector<int> entries_;
  bool within_hypothesis_ = true;
};

/// The rank-3 family [[2,-a1,0],[-a1,2,-a2],[0,-a2,2]] with a1, a2 ≥ 1.
CartanMatrix paper_shape(int a1, int a2);

/// λᵀ A μ for a symmetric GCM.
std::int64_t symmetric_form(const CartanMatrix& a, const Weight& lambda, const Weight& mu);

}  // namespace kmroot
