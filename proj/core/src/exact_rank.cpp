#include "kmroot/exact_rank.hpp"

#include "kmroot/errors.hpp"

namespace kmroot {

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// row ← (pivot_lead/g)·row − (row_lead/g)·pivot, which cancels the leading entry.
void eliminate(SparseRow& row, const SparseRow& pivot) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
  BigInt row_scale, pivot_scale;
  mpz_divexact(row_scale.get_mpz_t(), pivot.front().second.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(pivot_scale.get_mpz_t(), row.front().second.get_mpz_t(), g.get_mpz_t());

  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;  // leading entries cancel
  BigInt tmp;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, row_scale * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(pivot_scale * pivot[j].second));
      ++j;
    } else {
      tmp = row_scale * row[i].second;
      mpz_submul(tmp.get_mpz_t(), pivot_scale.get_mpz_t(), pivot[j].second.get_mpz_t());
      if (tmp != 0) out.emplace_back(row[i].first, tmp);
      ++i;
      ++j;
    }
  }
  row = std::move(out);
  make_primitive(row);
}

}  // namespace

void ExactRowSpace::reduce(SparseRow& row) const {
  while (!row.empty()) {
    const auto lead = row.front().first;
    if (lead >= pivot_of_column_.size()) throw InvalidArgument("row column out of range");
    const int p = pivot_of_column_[lead];
    if (p < 0) return;
    eliminate(row, rows_[static_cast<std::size_t>(p)]);
  }
}

bool ExactRowSpace::insert(SparseRow row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  make_primitive(row);
  reduce(row);
  if (row.empty()) return false;
  pivot_of_column_[row.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool ExactRowSpace::contains(SparseRow row) const {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  make_primitive(row);
  reduce(row);
  return row.empty();
}

std::size_t exact_rank(const std::vector<SparseRow>& rows, std::size_t columns) {
  ExactRowSpace space(columns);
  for (const SparseRow& r : rows) space.insert(r);
  return space.rank();
}

}  // namespace kmroot
