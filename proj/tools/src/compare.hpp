#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kmroot/bigint.hpp"

namespace kmroot::cli {

/// One grid point of the comparison report. Empty optionals print as "n/a"
/// (formula columns, agreement) or "skipped" (quotient above the cap).
struct ComparisonRow {
  int a1 = 0, a2 = 0;
  int n1 = 0, n2 = 0, n3 = 0;
  std::optional<BigInt> formula_section44;
  std::optional<BigInt> formula_lemma410;
  std::optional<BigInt> formula_guarded;
  std::optional<std::size_t> tuples_canonical;
  BigInt peterson;
  std::optional<std::size_t> quotient;
  std::optional<bool> agree_guarded_peterson;
};

struct CompareOptions {
  int a1 = 1, a2 = 2;
  int lo = 2, hi = 3;
  int height_cap = 10;
  unsigned jobs = 1;
};

enum class Format { kCsv, kJson };

extern const char* const kCsvHeader;

std::string csv_line(const ComparisonRow& r);
std::string json_line(const ComparisonRow& r);

/// True when the quotient column is present and differs from Peterson.
bool oracles_disagree(const ComparisonRow& r);

/// Computes every grid point n_i ∈ [lo, hi] (n1 outermost, zero weight
/// excluded) and streams rows to `out` in grid order. On an error the rows
/// before the failing point are written, followed by a truncation trailer,
/// and the error is rethrown.
std::vector<ComparisonRow> run_compare(const CompareOptions& options, Format format, std::ostream& out);

}  // namespace kmroot::cli
