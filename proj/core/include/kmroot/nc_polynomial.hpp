#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kmroot/bigint.hpp"
#include "kmroot/gcm.hpp"

namespace kmroot {

/// A word over generator indices 1..rank (8-bit letters).
using Word = std::vector<std::uint8_t>;

/// Orders words by length first, then lexicographically.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Parses a word written as decimal digits, e.g. "121" (letters 1..9 only).
Word word_from_digits(std::string_view digits);
std::string word_to_string(const Word& w);

/// Multidegree of a word.
Weight word_weight(const Word& w, std::size_t rank);

/// Element of the free associative algebra Z<e_1, ..., e_r>: a sparse map
/// from words to nonzero big-integer coefficients.
class NcPolynomial {
 public:
  using TermMap = std::map<Word, BigInt, WordOrder>;

  NcPolynomial() = default;
  static NcPolynomial monomial(Word w, BigInt coeff = 1);
  static NcPolynomial generator(int index);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  BigInt coefficient(const Word& w) const;
  const TermMap& terms() const noexcept { return terms_; }
  TermMap::const_iterator begin() const { return terms_.begin(); }
  TermMap::const_iterator end() const { return terms_.end(); }

  /// Adds `coeff · w`, dropping the entry if it cancels to zero.
  void add_term(const Word& w, const BigInt& coeff);

  NcPolynomial& operator+=(const NcPolynomial& other);
  NcPolynomial& operator-=(const NcPolynomial& other);
  NcPolynomial& operator*=(const BigInt& scalar);

  friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
  friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
  friend NcPolynomial operator*(NcPolynomial a, const BigInt& s) { return a *= s; }
  friend NcPolynomial operator-(NcPolynomial a) { return a *= BigInt(-1); }
  /// Concatenation product.
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) { return a.terms_ == b.terms_; }

  BigInt coefficient_sum() const;
  /// "+1*12 -1*21"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// [a, b] = ab − ba.
NcPolynomial commutator(const NcPolynomial& a, const NcPolynomial& b);

}  // namespace kmroot
