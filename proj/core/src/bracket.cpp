#include "kmroot/bracket.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "kmroot/errors.hpp"

namespace kmroot {

struct BracketExpr::Node {
  int generator = 0;
  std::size_t length = 1;
  int max_generator = 0;
  std::unique_ptr<BracketExpr> left;
  std::unique_ptr<BracketExpr> right;
};

BracketExpr BracketExpr::leaf(int generator) {
  auto node = std::make_shared<Node>();
  node->generator = generator;
  node->max_generator = generator;
  return BracketExpr(std::move(node));
}

BracketExpr BracketExpr::bracket(BracketExpr left, BracketExpr right) {
  auto node = std::make_shared<Node>();
  node->length = left.length() + right.length();
  node->max_generator = std::max(left.max_generator(), right.max_generator());
  node->left = std::make_unique<BracketExpr>(std::move(left));
  node->right = std::make_unique<BracketExpr>(std::move(right));
  return BracketExpr(std::move(node));
}

bool BracketExpr::is_leaf() const noexcept { return node_->left == nullptr; }

int BracketExpr::generator() const {
  if (!is_leaf()) throw InvalidArgument("generator() called on a bracket node");
  return node_->generator;
}

const BracketExpr& BracketExpr::left() const {
  if (is_leaf()) throw InvalidArgument("left() called on a leaf");
  return *node_->left;
}

const BracketExpr& BracketExpr::right() const {
  if (is_leaf()) throw InvalidArgument("right() called on a leaf");
  return *node_->right;
}

std::size_t BracketExpr::length() const noexcept { return node_->length; }

int BracketExpr::max_generator() const noexcept { return node_->max_generator; }

std::string BracketExpr::to_string() const {
  if (is_leaf()) return "e" + std::to_string(node_->generator);
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

bool operator==(const BracketExpr& a, const BracketExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.generator() == b.generator();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BracketExpr parse() {
    BracketExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  BracketExpr expr() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '[') {
      ++pos_;
      BracketExpr lhs = expr();
      expect(',');
      BracketExpr rhs = expr();
      expect(']');
      return BracketExpr::bracket(std::move(lhs), std::move(rhs));
    }
    if (text_[pos_] == 'e') {
      ++pos_;
      std::size_t start = pos_;
      long long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > std::numeric_limits<int>::max()) fail("generator index too large", start);
        ++pos_;
      }
      if (pos_ == start) fail("expected digits after 'e'");
      return BracketExpr::leaf(static_cast<int>(value));
    }
    fail(std::string("expected '[' or 'e', found '") + text_[pos_] + "'");
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError("bracket syntax error: " + what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void count_leaves(const BracketExpr& x, std::vector<int>& counts) {
  if (x.is_leaf()) {
    int g = x.generator();
    if (g < 1 || static_cast<std::size_t>(g) > counts.size()) {
      throw InvalidArgument("generator e" + std::to_string(g) + " out of range for rank " +
                            std::to_string(counts.size()));
    }
    ++counts[static_cast<std::size_t>(g - 1)];
    return;
  }
  count_leaves(x.left(), counts);
  count_leaves(x.right(), counts);
}

}  // namespace

BracketExpr parse_bracket(std::string_view text) { return Parser(text).parse(); }

Weight weight_of(const BracketExpr& x, std::size_t rank) {
  std::vector<int> counts(rank, 0);
  count_leaves(x, counts);
  return Weight(std::move(counts));
}

}  // namespace kmroot
