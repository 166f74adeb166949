#include "kmroot/serre.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>

#include "kmroot/errors.hpp"

namespace kmroot {

namespace {

// Words of one fixed length packed into 64 bits, first letter most
// significant, so integer order equals lexicographic order.
using PackedPoly = std::vector<std::pair<std::uint64_t, std::int64_t>>;

struct Codec {
  explicit Codec(std::size_t rank)
      : bits(static_cast<unsigned>(std::bit_width(rank))), max_length(64 / bits) {}

  std::uint64_t pack(const Word& w) const {
    std::uint64_t v = 0;
    for (std::uint8_t letter : w) v = (v << bits) | letter;
    return v;
  }

  void check_length(int length) const {
    if (length > static_cast<int>(max_length)) {
      throw OracleScaleExceeded("oracle scale exceeded: words of length " + std::to_string(length) +
                                " do not fit the packed representation");
    }
  }

  unsigned bits;
  std::size_t max_length;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OracleScaleExceeded("oracle scale exceeded: coefficient overflow");
  }
  return r;
}

// [e_a, P] for P homogeneous of word length `length`.
PackedPoly ad(const Codec& codec, std::uint8_t a, const PackedPoly& p, int length) {
  const std::uint64_t front = static_cast<std::uint64_t>(a) << (codec.bits * static_cast<unsigned>(length));
  auto left_key = [&](std::size_t i) { return front | p[i].first; };
  auto right_key = [&](std::size_t j) { return (p[j].first << codec.bits) | a; };
  PackedPoly out;
  out.reserve(2 * p.size());
  // Left terms a·w and right terms w·a are each already sorted.
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < p.size()) {
    if (j == p.size() || (i < p.size() && left_key(i) < right_key(j))) {
      out.emplace_back(left_key(i), p[i].second);
      ++i;
    } else if (i == p.size() || right_key(j) < left_key(i)) {
      out.emplace_back(right_key(j), -p[j].second);
      ++j;
    } else {
      const std::int64_t c = checked_add(p[i].second, -p[j].second);
      if (c != 0) out.emplace_back(left_key(i), c);
      ++i;
      ++j;
    }
  }
  return out;
}

PackedPoly expand_packed(const Codec& codec, const StandardTuple& t) {
  codec.check_length(static_cast<int>(t.length()));
  PackedPoly p{{t.letters.back(), 1}};
  int length = 1;
  for (std::size_t k = t.letters.size() - 1; k-- > 0;) p = ad(codec, t.letters[k], p, length++);
  return p;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OracleScaleExceeded("oracle scale exceeded: coefficient overflow");
  }
  return r;
}

// a + scale·b
PackedPoly add_scaled(const PackedPoly& a, const PackedPoly& b, std::int64_t scale) {
  PackedPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, checked_mul(b[j].second, scale));
      ++j;
    } else {
      const std::int64_t c = checked_add(a[i].second, checked_mul(b[j].second, scale));
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw OracleScaleExceeded("oracle scale exceeded: coefficient too large");
  return v.get_si();
}

}  // namespace

struct QuotientOracle::Component {
  Weight weight;
  std::size_t free_dim = 0;
  std::vector<std::uint64_t> columns;
  ExactRowSpace space;
  std::vector<PackedPoly> basis;
  bool full_tensor = false;

  SparseRow to_row(const PackedPoly& p) const {
    SparseRow row;
    row.reserve(std::min(p.size(), columns.size()));
    auto it = columns.begin();
    for (const auto& [w, c] : p) {
      it = std::lower_bound(it, columns.end(), w);
      if (it != columns.end() && *it == w) {
        row.emplace_back(static_cast<std::uint32_t>(it - columns.begin()), c);
      } else if (full_tensor) {
        throw InvalidArgument("polynomial has a word outside the multidegree " + weight.to_string());
      }
    }
    return row;
  }
};

std::vector<SerreElement> serre_elements(const CartanMatrix& a) {
  std::vector<SerreElement> out;
  const std::size_t r = a.rank();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (a(i, j) == 0 && i > j) continue;
      const int power = 1 - a(i, j);
      SerreElement s;
      s.i = static_cast<int>(i) + 1;
      s.j = static_cast<int>(j) + 1;
      s.tuple.letters.assign(static_cast<std::size_t>(power), static_cast<std::uint8_t>(i + 1));
      s.tuple.letters.push_back(static_cast<std::uint8_t>(j + 1));
      std::vector<int> c(r, 0);
      c[i] = power;
      c[j] = 1;
      s.weight = Weight(std::move(c));
      out.push_back(std::move(s));
    }
  }
  return out;
}

QuotientOracle::QuotientOracle(CartanMatrix a, QuotientOptions options)
    : algebra_(std::move(a)), options_(options), serre_(serre_elements(algebra_)) {
  if (algebra_.rank() > 255) throw InvalidArgument("rank above 255 is not supported");
}

std::shared_ptr<const QuotientOracle::Component> QuotientOracle::component(const Weight& lambda) {
  std::promise<std::shared_ptr<const Component>> promise;
  std::shared_future<std::shared_ptr<const Component>> pending;
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(lambda);
    if (it != cache_.end()) {
      pending = it->second;
    } else {
      cache_.emplace(lambda, promise.get_future().share());
    }
  }
  // Another thread may still be building it; components only depend on
  // strictly smaller weights, so waiting cannot deadlock.
  if (pending.valid()) return pending.get();
  try {
    auto built = build_component(lambda);
    promise.set_value(built);
    return built;
  } catch (...) {
    promise.set_exception(std::current_exception());
    throw;
  }
}

std::shared_ptr<const QuotientOracle::Component> QuotientOracle::build_component(const Weight& lambda) {
  if (lambda.rank() != algebra_.rank()) throw InvalidArgument("weight rank does not match the algebra");
  const Codec codec(algebra_.rank());
  const int height = lambda.height();
  codec.check_length(height);

  auto comp = std::make_shared<Component>();
  comp->weight = lambda;
  comp->full_tensor = options_.coordinates == Coordinates::kFullTensor;
  if (height == 0) return comp;

  const std::vector<Word> words = comp->full_tensor ? words_of_weight(lambda) : lyndon_words_of_weight(lambda);
  comp->columns.reserve(words.size());
  for (const Word& w : words) comp->columns.push_back(codec.pack(w));
  comp->space = ExactRowSpace(comp->columns.size());
  comp->free_dim = free_lie_dim(lambda).get_ui();
  if (height == 1) return comp;

  auto offer = [&](PackedPoly candidate) {
    if (comp->space.rank() == comp->free_dim) return;
    if (comp->space.insert(comp->to_row(candidate))) comp->basis.push_back(std::move(candidate));
  };

  for (const SerreElement& s : serre_) {
    if (s.weight == lambda) offer(expand_packed(codec, s.tuple));
  }
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    if (lambda[i] == 0) continue;
    const Weight sub = lambda.with_added(i, -1);
    if (sub.height() < 2) continue;
    const auto child = component(sub);
    for (const PackedPoly& b : child->basis) {
      if (comp->space.rank() == comp->free_dim) break;
      offer(ad(codec, static_cast<std::uint8_t>(i + 1), b, height - 1));
    }
  }
  return comp;
}

std::size_t QuotientOracle::ideal_component_dim(const Weight& lambda) { return component(lambda)->space.rank(); }

std::size_t QuotientOracle::root_multiplicity(const Weight& lambda) {
  if (lambda.height() < 1) throw InvalidArgument("root multiplicity requires height >= 1");
  if (lambda.height() > options_.height_cap) {
    throw OracleScaleExceeded("oracle scale exceeded: height " + std::to_string(lambda.height()) +
                              " of " + lambda.to_string() + " is above the cap " +
                              std::to_string(options_.height_cap));
  }
  const auto comp = component(lambda);
  return comp->free_dim - comp->space.rank();
}

std::size_t QuotientOracle::standard_form_rank(const Weight& lambda, const std::vector<StandardTuple>& tuples) {
  const Codec codec(algebra_.rank());
  for (const StandardTuple& t : tuples) {
    if (word_weight(t.letters, algebra_.rank()) != lambda) {
      throw InvalidArgument("tuple " + t.to_string() + " does not have multidegree " + lambda.to_string());
    }
  }
  if (tuples.empty()) return 0;
  const auto comp = component(lambda);
  ExactRowSpace space = comp->space;
  std::size_t added = 0;
  for (const StandardTuple& t : tuples) {
    if (space.rank() == comp->free_dim) break;
    if (space.insert(comp->to_row(expand_packed(codec, t)))) ++added;
  }
  return added;
}

std::size_t QuotientOracle::span_rank_in_quotient(const Weight& lambda,
                                                  const std::vector<LieCombination>& elements) {
  const Codec codec(algebra_.rank());
  std::vector<PackedPoly> polys;
  for (const LieCombination& e : elements) {
    PackedPoly sum;
    for (const auto& [t, c] : e.terms()) {
      if (word_weight(t.letters, algebra_.rank()) != lambda) {
        throw InvalidArgument("tuple " + t.to_string() + " does not have multidegree " + lambda.to_string());
      }
      sum = add_scaled(sum, expand_packed(codec, t), to_int64(c));
    }
    polys.push_back(std::move(sum));
  }
  if (polys.empty()) return 0;
  const auto comp = component(lambda);
  ExactRowSpace space = comp->space;
  std::size_t added = 0;
  for (const PackedPoly& p : polys) {
    if (space.insert(comp->to_row(p))) ++added;
  }
  return added;
}

bool QuotientOracle::in_ideal(const LieCombination& element) {
  if (element.is_zero()) return true;
  return span_rank_in_quotient(element.weight(algebra_.rank()), {element}) == 0;
}

std::size_t ideal_component_dim(const CartanMatrix& a, const Weight& lambda) {
  QuotientOracle oracle(a, {.height_cap = lambda.height()});
  return oracle.ideal_component_dim(lambda);
}

std::size_t root_multiplicity_quotient(const CartanMatrix& a, const Weight& lambda, int height_cap) {
  QuotientOracle oracle(a, {.height_cap = height_cap});
  return oracle.root_multiplicity(lambda);
}

std::size_t standard_form_rank(const CartanMatrix& a, const Weight& lambda, const std::vector<StandardTuple>& tuples) {
  QuotientOracle oracle(a, {.height_cap = lambda.height()});
  return oracle.standard_form_rank(lambda, tuples);
}

}  // namespace kmroot
