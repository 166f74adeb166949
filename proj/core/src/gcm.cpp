#include "kmroot/gcm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kmroot/errors.hpp"

namespace kmroot {

Weight::Weight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  for (int c : coeffs_) {
    if (c < 0) throw InvalidArgument("weight coefficients must be nonnegative: " + to_string());
  }
}

Weight Weight::simple_root(std::size_t rank, std::size_t index) {
  if (index >= rank) throw InvalidArgument("simple root index out of range");
  std::vector<int> c(rank, 0);
  c[index] = 1;
  return Weight(std::move(c));
}

Weight Weight::zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

int Weight::height() const noexcept { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Weight::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool Weight::is_simple_root() const noexcept { return height() == 1; }

bool Weight::dominated_by(const Weight& other) const {
  if (rank() != other.rank()) throw InvalidArgument("weight rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) {
    if (coeffs_[i] > other.coeffs_[i]) return false;
  }
  return true;
}

int Weight::content() const noexcept {
  int g = 0;
  for (int c : coeffs_) g = std::gcd(g, c);
  return g;
}

Weight Weight::operator+(const Weight& other) const {
  if (rank() != other.rank()) throw InvalidArgument("weight rank mismatch");
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
  return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& other) const {
  if (rank() != other.rank()) throw InvalidArgument("weight rank mismatch");
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coeffs_[i];
  return Weight(std::move(c));
}

Weight Weight::divided_by(int k) const {
  std::vector<int> c(coeffs_);
  for (int& x : c) {
    if (k <= 0 || x % k != 0) throw InvalidArgument("weight is not divisible by " + std::to_string(k));
    x /= k;
  }
  return Weight(std::move(c));
}

Weight Weight::with_added(std::size_t index, int delta) const {
  std::vector<int> c(coeffs_);
  c.at(index) += delta;
  return Weight(std::move(c));
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs_[i]);
  }
  return s + ")";
}

std::vector<Weight> weights_in_box(const Weight& bound) {
  std::vector<Weight> out;
  std::vector<int> cur(bound.rank(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == bound[i - 1]) {
      cur[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

std::vector<Weight> weights_up_to_height(std::size_t rank, int min_height, int max_height) {
  std::vector<Weight> out;
  if (max_height < 0) return out;
  for (const Weight& w : weights_in_box(Weight(std::vector<int>(rank, max_height)))) {
    int h = w.height();
    if (h >= min_height && h <= max_height) out.push_back(w);
  }
  return out;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int c : w.coeffs()) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ull;
  return h;
}

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> rows) : rank_(rows.size()) {
  if (rank_ == 0) throw InvalidArgument("Cartan matrix must have positive rank");
  entries_.reserve(rank_ * rank_);
  for (const auto& row : rows) {
    if (row.size() != rank_) throw InvalidArgument("Cartan matrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 2) throw InvalidArgument("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if ((*this)(i, j) > 0) throw InvalidArgument("Cartan matrix off-diagonal entries must be <= 0");
      if (((*this)(i, j) == 0) != ((*this)(j, i) == 0)) {
        throw InvalidArgument("Cartan matrix zero pattern must be symmetric");
      }
    }
  }
}

bool CartanMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = i + 1; j < rank_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::string CartanMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rank_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < rank_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

CartanMatrix paper_shape(int a1, int a2) {
  if (a1 <= 0 || a2 <= 0) throw InvalidArgument("paper_shape requires a1 >= 1 and a2 >= 1");
  CartanMatrix m({{2, -a1, 0}, {-a1, 2, -a2}, {0, -a2, 2}});
  m.within_hypothesis_ = std::max(a1, a2) >= 2;
  return m;
}

std::int64_t symmetric_form(const CartanMatrix& a, const Weight& lambda, const Weight& mu) {
  if (!a.is_symmetric()) throw InvalidArgument("symmetric_form requires a symmetric Cartan matrix");
  if (lambda.rank() != a.rank() || mu.rank() != a.rank()) {
    throw InvalidArgument("weight length does not match Cartan matrix rank");
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (lambda[i] == 0) continue;
    for (std::size_t j = 0; j < a.rank(); ++j) {
      sum += static_cast<std::int64_t>(lambda[i]) * a(i, j) * mu[j];
    }
  }
  return sum;
}

}  // namespace kmroot
