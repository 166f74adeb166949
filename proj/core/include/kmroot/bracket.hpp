#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "kmroot/gcm.hpp"

namespace kmroot {

/// Immutable bracket expression tree over generators e_1, e_2, ...
///
/// Leaves carry the generator index exactly as written; range checks against
/// a rank happen when the expression is evaluated (weight_of, expand_tensor).
/// Subtrees are shared, so copies are cheap.
class BracketExpr {
 public:
  static BracketExpr leaf(int generator);
  static BracketExpr bracket(BracketExpr left, BracketExpr right);

  bool is_leaf() const noexcept;
  /// Generator index of a leaf; throws for a bracket node.
  int generator() const;
  const BracketExpr& left() const;
  const BracketExpr& right() const;
  /// Number of leaves.
  std::size_t length() const noexcept;
  /// Largest generator index occurring in the tree.
  int max_generator() const noexcept;

  /// Prints the canonical form of the grammar, e.g. "[e1,[e2,e3]]".
  std::string to_string() const;

  friend bool operator==(const BracketExpr& a, const BracketExpr& b);

 private:
  struct Node;
  explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses `expr := atom | '[' expr ',' expr ']'`, `atom := 'e' digits`,
/// ignoring whitespace. Throws ParseError with the offending byte offset.
BracketExpr parse_bracket(std::string_view text);

/// Multidegree of `x`: coefficient i counts leaves e_{i+1}. Throws
/// InvalidArgument when a leaf index is 0 or exceeds `rank`.
Weight weight_of(const BracketExpr& x, std::size_t rank);

}  // namespace kmroot
