#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kmroot/bigint.hpp"
#include "kmroot/bracket.hpp"
#include "kmroot/gcm.hpp"
#include "kmroot/nc_polynomial.hpp"

namespace kmroot {

/// Left-normed bracket [e_{a_n},[e_{a_{n-1}},[...,[e_{a_2},e_{a_1}]...]]],
/// stored in written order: letters[0] = a_n is the outermost generator.
struct StandardTuple {
  Word letters;

  StandardTuple() = default;
  explicit StandardTuple(Word w) : letters(std::move(w)) {}
  StandardTuple(std::initializer_list<int> entries);

  std::size_t length() const noexcept { return letters.size(); }
  /// "[a_n,...,a_1]".
  std::string to_string() const;
  BracketExpr to_expr() const;

  friend bool operator==(const StandardTuple&, const StandardTuple&) = default;
  friend auto operator<=>(const StandardTuple& a, const StandardTuple& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() <=> b.letters.size();
    return a.letters <=> b.letters;
  }
};

/// Integer combination of standard tuples sharing one multidegree.
class LieCombination {
 public:
  using TermMap = std::map<StandardTuple, BigInt>;

  LieCombination() = default;

  void add_term(const StandardTuple& t, const BigInt& coeff);
  LieCombination& operator+=(const LieCombination& other);
  LieCombination& operator*=(const BigInt& scalar);
  friend LieCombination operator-(LieCombination a) { return a *= BigInt(-1); }
  friend bool operator==(const LieCombination& a, const LieCombination& b) { return a.terms_ == b.terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  BigInt coefficient(const StandardTuple& t) const;

  /// Common multidegree of every stored tuple; throws when empty.
  Weight weight(std::size_t rank) const;
  /// Σ coeff · expand_standard_tuple(t).
  NcPolynomial expand() const;
  /// "+1*[1,2,3,2] -1*[2,1,3,2]"; "0" when empty.
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Image of `x` under the commutator embedding [u,v] ↦ uv − vu.
NcPolynomial expand_tensor(const BracketExpr& x);

NcPolynomial expand_standard_tuple(const StandardTuple& t);

/// Rewrites `x` as a combination of standard tuples of the same length using
/// only free-Lie-algebra identities (anticommutativity and Jacobi). Tuples
/// whose two innermost letters coincide are zero and never emitted.
LieCombination to_standard_form(const BracketExpr& x);

/// Dimension of the λ-component of the free Lie algebra (multigraded Witt
/// formula). Requires height(λ) ≥ 1.
BigInt free_lie_dim(const Weight& lambda);

/// All words of multidegree λ in lexicographic order.
std::vector<Word> words_of_weight(const Weight& lambda);

/// All standard tuples of multidegree λ in lexicographic order.
std::vector<StandardTuple> tuples_of_weight(const Weight& lambda);

bool is_lyndon(const Word& w);

/// Lyndon words of multidegree λ in lexicographic order.
std::vector<Word> lyndon_words_of_weight(const Weight& lambda);

}  // namespace kmroot
