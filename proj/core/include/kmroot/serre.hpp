#pragma once

#include <cstddef>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "kmroot/bigint.hpp"
#include "kmroot/exact_rank.hpp"
#include "kmroot/freelie.hpp"
#include "kmroot/gcm.hpp"

namespace kmroot {

/// ad(e_i)^{1 - A_ij}(e_j) for an ordered pair i ≠ j (1-based indices).
struct SerreElement {
  int i = 0;
  int j = 0;
  StandardTuple tuple;  // (i, ..., i, j)
  Weight weight;

  BracketExpr expr() const { return tuple.to_expr(); }
};

/// One element per ordered pair (i, j), i ≠ j, except that for A_ij = 0 only
/// [e_i, e_j] with i < j is kept ([e_j, e_i] differs by sign).
std::vector<SerreElement> serre_elements(const CartanMatrix& a);

/// Basis in which ideal and quotient ranks are measured.
///
/// kFullTensor uses every word of the multidegree as a column. kLyndon keeps
/// only Lyndon-word columns: a Lie polynomial is determined by its Lyndon
/// coefficients (the Lyndon basis is unitriangular against them), so ranks of
/// Lie elements agree while the matrices are about `height` times narrower.
enum class Coordinates { kLyndon, kFullTensor };

struct QuotientOptions {
  int height_cap = 10;
  Coordinates coordinates = Coordinates::kLyndon;
};

/// Brute-force oracle for g_λ = FreeLie_λ / Ideal_λ, where Ideal is the ideal
/// generated by the Serre elements.
///
/// The ideal is spanned by iterated brackets [e_{i_1},[...,[e_{i_k}, s]...]]
/// with s a Serre element, since ad(e_i) generates the adjoint action of the
/// whole free Lie algebra. Hence Ideal_λ is spanned by the Serre elements of
/// weight λ together with [e_i, Ideal_{λ-α_i}]; each component keeps only an
/// independent subset of those rows. Components are cached per weight and
/// may be requested from several threads at once.
class QuotientOracle {
 public:
  explicit QuotientOracle(CartanMatrix a, QuotientOptions options = {});

  const CartanMatrix& algebra() const noexcept { return algebra_; }
  const QuotientOptions& options() const noexcept { return options_; }

  std::size_t ideal_component_dim(const Weight& lambda);
  /// free_lie_dim(λ) − ideal_component_dim(λ); throws OracleScaleExceeded
  /// above the height cap.
  std::size_t root_multiplicity(const Weight& lambda);
  /// Dimension of the image in g_λ of the span of the given tuples.
  std::size_t standard_form_rank(const Weight& lambda, const std::vector<StandardTuple>& tuples);
  /// Dimension of the image in g_λ of the span of the given combinations.
  std::size_t span_rank_in_quotient(const Weight& lambda, const std::vector<LieCombination>& elements);
  /// True when `element` vanishes in the quotient (zero counts as a member).
  bool in_ideal(const LieCombination& element);

  struct Component;

 private:
  std::shared_ptr<const Component> component(const Weight& lambda);
  std::shared_ptr<const Component> build_component(const Weight& lambda);

  CartanMatrix algebra_;
  QuotientOptions options_;
  std::vector<SerreElement> serre_;
  std::mutex mutex_;
  std::map<Weight, std::shared_future<std::shared_ptr<const Component>>> cache_;
};

std::size_t ideal_component_dim(const CartanMatrix& a, const Weight& lambda);
std::size_t root_multiplicity_quotient(const CartanMatrix& a, const Weight& lambda, int height_cap = 10);
std::size_t standard_form_rank(const CartanMatrix& a, const Weight& lambda,
                               const std::vector<StandardTuple>& tuples);

}  // namespace kmroot
