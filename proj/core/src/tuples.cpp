#include "kmroot/tuples.hpp"

#include "kmroot/errors.hpp"

namespace kmroot {

namespace {

void compositions_into(int n, int boxes, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (boxes == 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    prefix.push_back(k);
    compositions_into(n - k, boxes - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string IntervalConfig::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (i) s += ',';
    s += "(" + std::to_string(intervals[i].ones) + "," + std::to_string(intervals[i].threes) + ")";
  }
  return s + "]";
}

std::vector<std::vector<int>> compositions(int n, int boxes) {
  std::vector<std::vector<int>> out;
  if (n < 0 || boxes < 0) return out;
  if (boxes == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  compositions_into(n, boxes, prefix, out);
  return out;
}

bool is_valid_config(const IntervalConfig& c, const FormulaParams& p) {
  if (c.intervals.size() != static_cast<std::size_t>(p.n2)) return false;
  int ones = 0, threes = 0;
  for (const Interval& iv : c.intervals) {
    if (iv.ones < 0 || iv.threes < 0) return false;
    ones += iv.ones;
    threes += iv.threes;
  }
  const Interval& first = c.intervals.front();
  return ones == p.n1 && threes == p.n3 && first.ones <= p.a1 && first.threes <= p.a2 &&
         !(first.ones == 0 && first.threes == 0);
}

std::vector<IntervalConfig> enumerate_configs(const FormulaParams& p) {
  std::vector<IntervalConfig> out;
  const int rest_boxes = p.n2 - 1;
  for (int i = 0; i <= std::min(p.a1, p.n1); ++i) {
    for (int j = 0; j <= std::min(p.a2, p.n3); ++j) {
      if (i == 0 && j == 0) continue;
      const auto ones = compositions(p.n1 - i, rest_boxes);
      const auto threes = compositions(p.n3 - j, rest_boxes);
      for (const auto& o : ones) {
        for (const auto& t : threes) {
          IntervalConfig c;
          c.intervals.reserve(static_cast<std::size_t>(p.n2));
          c.intervals.push_back({i, j});
          for (int k = 0; k < rest_boxes; ++k) {
            c.intervals.push_back({o[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k)]});
          }
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

bool is_trivial_pattern(const IntervalConfig& c, const FormulaParams& p) {
  if (c.intervals.empty()) return false;
  auto empty_run = [&](int a) {
    // Intervals 2..a (1-based) must be empty.
    for (int k = 1; k < a; ++k) {
      if (static_cast<std::size_t>(k) >= c.intervals.size()) return false;
      if (!(c.intervals[static_cast<std::size_t>(k)] == Interval{})) return false;
    }
    return true;
  };
  const Interval& first = c.intervals.front();
  if (first == Interval{1, 0} && p.n2 >= p.a1 + 1 && empty_run(p.a1)) return true;
  if (first == Interval{0, 1} && p.n2 >= p.a2 + 1 && empty_run(p.a2)) return true;
  return false;
}

bool is_dependent_pattern(const IntervalConfig& c) {
  if (c.intervals.empty()) return false;
  const Interval& first = c.intervals.front();
  return first == Interval{2, 0} || first == Interval{0, 2};
}

CanonicalCount count_canonical(const FormulaParams& p) {
  CanonicalCount out;
  for (const IntervalConfig& c : enumerate_configs(p)) {
    ++out.raw;
    const bool trivial = is_trivial_pattern(c, p);
    const bool dependent = is_dependent_pattern(c);
    if (trivial && dependent) {
      throw InternalConsistencyError("config " + c.to_string() + " is both trivial and dependent");
    }
    if (trivial) ++out.trivial;
    if (dependent) ++out.dependent;
  }
  out.canonical = out.raw - out.trivial - out.dependent;
  return out;
}

StandardTuple config_to_tuple(const IntervalConfig& c) {
  // Built right to left, reversed at the end.
  Word reversed;
  for (const Interval& iv : c.intervals) {
    reversed.push_back(2);
    reversed.insert(reversed.end(), static_cast<std::size_t>(iv.ones), 1);
    reversed.insert(reversed.end(), static_cast<std::size_t>(iv.threes), 3);
  }
  return StandardTuple(Word(reversed.rbegin(), reversed.rend()));
}

std::vector<IntervalConfig> canonical_configs(const FormulaParams& p) {
  std::vector<IntervalConfig> out;
  for (IntervalConfig& c : enumerate_configs(p)) {
    if (!is_trivial_pattern(c, p) && !is_dependent_pattern(c)) out.push_back(std::move(c));
  }
  return out;
}

RankCheck independent_rank_check(QuotientOracle& oracle, const FormulaParams& p) {
  const Weight lambda = p.weight();
  std::vector<StandardTuple> tuples;
  for (const IntervalConfig& c : canonical_configs(p)) tuples.push_back(config_to_tuple(c));
  RankCheck out;
  out.canonical_count = tuples.size();
  out.oracle_mult = oracle.root_multiplicity(lambda);
  out.rank_in_quotient = oracle.standard_form_rank(lambda, tuples);
  return out;
}

RankCheck independent_rank_check(const CartanMatrix& a, const FormulaParams& p, int height_cap) {
  QuotientOracle oracle(a, {.height_cap = height_cap});
  return independent_rank_check(oracle, p);
}

}  // namespace kmroot
