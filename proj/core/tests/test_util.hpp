#pragma once

#include <random>

#include "kmroot/bracket.hpp"

namespace kmroot::testing {

/// Random bracket tree with exactly `length` leaves over e_1..e_rank.
inline BracketExpr random_bracket(std::mt19937& rng, int length, int rank) {
  if (length == 1) return BracketExpr::leaf(std::uniform_int_distribution<int>(1, rank)(rng));
  const int left = std::uniform_int_distribution<int>(1, length - 1)(rng);
  return BracketExpr::bracket(random_bracket(rng, left, rank), random_bracket(rng, length - left, rank));
}

}  // namespace kmroot::testing
