#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kmroot/formula.hpp"
#include "kmroot/freelie.hpp"
#include "kmroot/gcm.hpp"
#include "kmroot/serre.hpp"

namespace kmroot {

/// Contents of one "2"-delimited interval: counts of e_1 and e_3.
struct Interval {
  int ones = 0;
  int threes = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Interval model of a standard tuple of weight (n1, n2, n3): each of the n2
/// occurrences of "2" owns the interval to its left. intervals[0] is the
/// first (rightmost) interval.
struct IntervalConfig {
  std::vector<Interval> intervals;

  /// "[(1,0),(1,2)]" listing (ones, threes) from the first interval on.
  std::string to_string() const;

  friend bool operator==(const IntervalConfig&, const IntervalConfig&) = default;
};

/// Every composition of n into `boxes` nonnegative parts, lexicographically
/// descending in the first part (n,0,...,0 first).
std::vector<std::vector<int>> compositions(int n, int boxes);

/// True when the config has n2 intervals holding n1 ones and n3 threes and
/// its first interval satisfies ones ≤ a1, threes ≤ a2, (ones, threes) ≠ (0, 0).
bool is_valid_config(const IntervalConfig& c, const FormulaParams& p);

/// All valid configurations, first interval in (i, j) lexicographic order,
/// then the remaining ones and threes in composition order.
std::vector<IntervalConfig> enumerate_configs(const FormulaParams& p);

/// First interval holds a single ball e_i followed by a_i − 1 empty intervals,
/// with at least a_i + 1 twos in total.
bool is_trivial_pattern(const IntervalConfig& c, const FormulaParams& p);

/// First interval holds exactly two identical balls.
bool is_dependent_pattern(const IntervalConfig& c);

struct CanonicalCount {
  std::size_t raw = 0;
  std::size_t trivial = 0;
  std::size_t dependent = 0;
  std::size_t canonical = 0;
};

CanonicalCount count_canonical(const FormulaParams& p);

/// Lays the config out right to left as 2, interval 1, 2, interval 2, ...;
/// written left to right each interval lists its 3s before its 1s.
StandardTuple config_to_tuple(const IntervalConfig& c);

/// Configurations that are neither trivial nor dependent.
std::vector<IntervalConfig> canonical_configs(const FormulaParams& p);

struct RankCheck {
  std::size_t canonical_count = 0;
  std::size_t rank_in_quotient = 0;
  std::size_t oracle_mult = 0;
};

/// Rank in g_λ of the canonical tuples next to dim g_λ from the quotient oracle.
RankCheck independent_rank_check(QuotientOracle& oracle, const FormulaParams& p);
RankCheck independent_rank_check(const CartanMatrix& a, const FormulaParams& p, int height_cap = 10);

}  // namespace kmroot
