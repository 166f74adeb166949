#include "kmroot/nc_polynomial.hpp"

#include "kmroot/errors.hpp"

namespace kmroot {

Word word_from_digits(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw InvalidArgument("word letters must be digits 1..9");
    w.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return w;
}

std::string word_to_string(const Word& w) {
  bool wide = false;
  for (std::uint8_t letter : w) wide = wide || letter >= 10;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i > 0) s += '.';
    s += std::to_string(w[i]);
  }
  return s;
}

Weight word_weight(const Word& w, std::size_t rank) {
  std::vector<int> c(rank, 0);
  for (std::uint8_t letter : w) {
    if (letter < 1 || letter > rank) throw InvalidArgument("word letter out of range");
    ++c[letter - 1u];
  }
  return Weight(std::move(c));
}

NcPolynomial NcPolynomial::monomial(Word w, BigInt coeff) {
  NcPolynomial p;
  p.add_term(w, coeff);
  return p;
}

NcPolynomial NcPolynomial::generator(int index) {
  if (index < 1 || index > 255) throw InvalidArgument("generator index must be in 1..255");
  return monomial(Word{static_cast<std::uint8_t>(index)});
}

BigInt NcPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void NcPolynomial::add_term(const Word& w, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NcPolynomial& NcPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial out;
  Word buf;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      buf.assign(wa.begin(), wa.end());
      buf.insert(buf.end(), wb.begin(), wb.end());
      out.add_term(buf, ca * cb);
    }
  }
  return out;
}

BigInt NcPolynomial::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

std::string NcPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += ' ';
    s += (c > 0 ? "+" : "") + c.get_str() + "*" + word_to_string(w);
  }
  return s;
}

NcPolynomial commutator(const NcPolynomial& a, const NcPolynomial& b) { return a * b - b * a; }

}  // namespace kmroot
