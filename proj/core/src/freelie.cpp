#include "kmroot/freelie.hpp"

#include <algorithm>
#include <numeric>

#include "kmroot/errors.hpp"

namespace kmroot {

namespace {

std::uint8_t letter_of(int generator) {
  if (generator < 1 || generator > 255) {
    throw InvalidArgument("generator index e" + std::to_string(generator) + " out of range");
  }
  return static_cast<std::uint8_t>(generator);
}

bool is_trivially_zero(const StandardTuple& t) {
  const auto n = t.letters.size();
  return n >= 2 && t.letters[n - 1] == t.letters[n - 2];
}

StandardTuple prepend(std::uint8_t a, const StandardTuple& t) {
  Word w;
  w.reserve(t.length() + 1);
  w.push_back(a);
  w.insert(w.end(), t.letters.begin(), t.letters.end());
  return StandardTuple(std::move(w));
}

LieCombination bracket_tuples(const StandardTuple& s, const StandardTuple& t);

// [s, t] with length(s) ≤ length(t). Peels the outermost generator of s:
// [[e_a, s'], t] = [e_a, [s', t]] − [s', [e_a, t]].
LieCombination bracket_oriented(const StandardTuple& s, const StandardTuple& t) {
  LieCombination out;
  if (s.length() == 1) {
    out.add_term(prepend(s.letters[0], t), 1);
    return out;
  }
  const std::uint8_t a = s.letters[0];
  const StandardTuple rest(Word(s.letters.begin() + 1, s.letters.end()));
  const LieCombination inner = bracket_tuples(rest, t);
  for (const auto& [u, c] : inner.terms()) out.add_term(prepend(a, u), c);
  const LieCombination outer = bracket_tuples(rest, prepend(a, t));
  for (const auto& [u, c] : outer.terms()) out.add_term(u, -c);
  return out;
}

// Shorter (then lexicographically smaller) operand goes on the left, so that
// [u, v] and [v, u] rewrite to exact negatives of each other. A bracket of two
// generators is already standard and is kept in the given order.
LieCombination bracket_tuples(const StandardTuple& s, const StandardTuple& t) {
  if (s == t) return {};
  if (s.length() == 1 && t.length() == 1) return bracket_oriented(s, t);
  if (t < s) return -bracket_oriented(t, s);
  return bracket_oriented(s, t);
}

BigInt factorial(int n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

StandardTuple::StandardTuple(std::initializer_list<int> entries) {
  letters.reserve(entries.size());
  for (int e : entries) letters.push_back(letter_of(e));
}

std::string StandardTuple::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i]);
  }
  return s + "]";
}

BracketExpr StandardTuple::to_expr() const {
  if (letters.empty()) throw InvalidArgument("empty standard tuple");
  BracketExpr e = BracketExpr::leaf(letters.back());
  for (std::size_t i = letters.size() - 1; i-- > 0;) {
    e = BracketExpr::bracket(BracketExpr::leaf(letters[i]), std::move(e));
  }
  return e;
}

void LieCombination::add_term(const StandardTuple& t, const BigInt& coeff) {
  if (coeff == 0 || is_trivially_zero(t)) return;
  auto [it, inserted] = terms_.try_emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LieCombination& LieCombination::operator+=(const LieCombination& other) {
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

LieCombination& LieCombination::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

BigInt LieCombination::coefficient(const StandardTuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Weight LieCombination::weight(std::size_t rank) const {
  if (terms_.empty()) throw InvalidArgument("weight of an empty combination is undefined");
  return word_weight(terms_.begin()->first.letters, rank);
}

NcPolynomial LieCombination::expand() const {
  NcPolynomial out;
  for (const auto& [t, c] : terms_) {
    NcPolynomial p = expand_standard_tuple(t);
    p *= c;
    out += p;
  }
  return out;
}

std::string LieCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (!s.empty()) s += ' ';
    s += (c > 0 ? "+" : "") + c.get_str() + "*" + t.to_string();
  }
  return s;
}

NcPolynomial expand_tensor(const BracketExpr& x) {
  if (x.is_leaf()) return NcPolynomial::monomial(Word{letter_of(x.generator())});
  return commutator(expand_tensor(x.left()), expand_tensor(x.right()));
}

NcPolynomial expand_standard_tuple(const StandardTuple& t) {
  if (t.letters.empty()) throw InvalidArgument("empty standard tuple");
  // Iterates e_a · P − P · e_a from the innermost letter outwards.
  std::map<Word, BigInt, WordOrder> cur;
  cur.emplace(Word{t.letters.back()}, 1);
  for (std::size_t i = t.letters.size() - 1; i-- > 0;) {
    const std::uint8_t a = t.letters[i];
    std::map<Word, BigInt, WordOrder> next;
    Word buf;
    for (const auto& [w, c] : cur) {
      buf.clear();
      buf.push_back(a);
      buf.insert(buf.end(), w.begin(), w.end());
      next[buf] += c;
      buf.assign(w.begin(), w.end());
      buf.push_back(a);
      next[buf] -= c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    cur = std::move(next);
  }
  NcPolynomial out;
  for (const auto& [w, c] : cur) out.add_term(w, c);
  return out;
}

LieCombination to_standard_form(const BracketExpr& x) {
  LieCombination out;
  if (x.is_leaf()) {
    out.add_term(StandardTuple(Word{letter_of(x.generator())}), 1);
    return out;
  }
  const LieCombination lhs = to_standard_form(x.left());
  const LieCombination rhs = to_standard_form(x.right());
  for (const auto& [s, cs] : lhs.terms()) {
    for (const auto& [t, ct] : rhs.terms()) {
      const BigInt c = cs * ct;
      const LieCombination st = bracket_tuples(s, t);
      for (const auto& [u, cu] : st.terms()) out.add_term(u, c * cu);
    }
  }
  return out;
}

BigInt free_lie_dim(const Weight& lambda) {
  const int n = lambda.height();
  if (n < 1) throw InvalidArgument("free_lie_dim requires height >= 1");
  const int g = lambda.content();
  BigInt sum = 0;
  for (int d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    BigInt term = factorial(n / d);
    for (int c : lambda.coeffs()) term /= factorial(c / d);
    sum += mu * term;
  }
  if (sum % n != 0) throw InternalConsistencyError("Witt formula produced a non-integer");
  return sum / n;
}

std::vector<Word> words_of_weight(const Weight& lambda) {
  Word w;
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    w.insert(w.end(), static_cast<std::size_t>(lambda[i]), letter_of(static_cast<int>(i) + 1));
  }
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<StandardTuple> tuples_of_weight(const Weight& lambda) {
  std::vector<StandardTuple> out;
  for (Word& w : words_of_weight(lambda)) out.emplace_back(std::move(w));
  return out;
}

bool is_lyndon(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t i = 1; i < n; ++i) {
    // Compare w against its rotation starting at i.
    for (std::size_t k = 0; k < n; ++k) {
      const auto x = w[k];
      const auto y = w[(i + k) % n];
      if (x < y) break;
      if (x > y) return false;
      if (k + 1 == n) return false;  // equal rotation: not primitive
    }
  }
  return true;
}

std::vector<Word> lyndon_words_of_weight(const Weight& lambda) {
  std::vector<Word> out;
  if (lambda.height() == 0) return out;
  for (Word& w : words_of_weight(lambda)) {
    if (is_lyndon(w)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace kmroot
