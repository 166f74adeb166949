#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kmroot/bigint.hpp"

namespace kmroot {

/// Sparse integer row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, BigInt>>;

/// Incrementally maintained row-echelon basis of a subspace of Q^columns.
///
/// Elimination is fraction-free: a row is reduced against a pivot row by
/// cross-multiplying with the two leading entries, and every stored row is
/// kept primitive (content 1, positive leading entry). All arithmetic is
/// exact, so the rank is the rank over the rationals.
class ExactRowSpace {
 public:
  explicit ExactRowSpace(std::size_t columns = 0) : pivot_of_column_(columns, -1) {}

  std::size_t columns() const noexcept { return pivot_of_column_.size(); }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds `row` to the spanning set; returns true when the rank grew.
  bool insert(SparseRow row);
  /// True when `row` already lies in the span.
  bool contains(SparseRow row) const;

 private:
  void reduce(SparseRow& row) const;

  std::vector<SparseRow> rows_;
  std::vector<int> pivot_of_column_;
};

/// Rank over Q of the given rows.
std::size_t exact_rank(const std::vector<SparseRow>& rows, std::size_t columns);

}  // namespace kmroot
