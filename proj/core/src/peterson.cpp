#include "kmroot/peterson.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "kmroot/errors.hpp"

namespace kmroot {

namespace {

void require_symmetric(const CartanMatrix& a) {
  if (!a.is_symmetric()) throw InvalidArgument("the Peterson oracle requires a symmetric Cartan matrix");
}

// Odometer over the box 0 ≤ x ≤ bound in lexicographic order.
bool next_in_box(std::vector<int>& x, const std::vector<int>& bound) {
  std::size_t i = x.size();
  while (i > 0 && x[i - 1] == bound[i - 1]) {
    x[i - 1] = 0;
    --i;
  }
  if (i == 0) return false;
  ++x[i - 1];
  return true;
}

}  // namespace

std::int64_t rho_pairing(const CartanMatrix& a, const Weight& lambda) {
  require_symmetric(a);
  if (lambda.rank() != a.rank()) throw InvalidArgument("weight rank does not match the algebra");
  return lambda.height();
}

MultiplicityTable::MultiplicityTable(CartanMatrix a, SingularPolicy policy)
    : algebra_(std::move(a)), policy_(policy), log_bound_(Weight::zero(algebra_.rank())) {
  require_symmetric(algebra_);
}

BigInt MultiplicityTable::mult(const Weight& lambda) {
  ensure(lambda);
  return entries_.at(lambda).mult;
}

BigRational MultiplicityTable::c_value(const Weight& lambda) {
  ensure(lambda);
  return entries_.at(lambda).c;
}

const BigInt* MultiplicityTable::cached_mult(const Weight& lambda) const {
  auto it = entries_.find(lambda);
  return it == entries_.end() ? nullptr : &it->second.mult;
}

void MultiplicityTable::ensure(const Weight& lambda) {
  const std::size_t r = algebra_.rank();
  if (lambda.rank() != r) throw InvalidArgument("weight rank does not match the algebra");
  if (lambda.is_zero()) throw InvalidArgument("multiplicity of the zero weight is undefined");
  if (entries_.contains(lambda)) return;

  const std::vector<int>& bound = lambda.coeffs();
  std::vector<std::size_t> stride(r);
  std::size_t box_size = 1;
  for (std::size_t i = r; i-- > 0;) {
    stride[i] = box_size;
    box_size *= static_cast<std::size_t>(bound[i]) + 1;
  }
  // c-values of the box in index order; nullptr where c = 0.
  std::vector<const BigRational*> c_at(box_size, nullptr);

  std::vector<int> mu(r, 0);
  std::vector<int> nu(r, 0);
  std::vector<std::int64_t> a_mu(r);
  std::size_t mu_index = 0;
  BigRational rhs, term;
  while (next_in_box(mu, bound)) {
    ++mu_index;
    const Weight mu_w(mu);
    if (auto it = entries_.find(mu_w); it != entries_.end()) {
      if (it->second.c != 0) c_at[mu_index] = &it->second.c;
      continue;
    }

    Entry entry;
    const int height = mu_w.height();
    if (height == 1) {
      entry.c = 1;
      entry.mult = 1;
    } else {
      for (std::size_t i = 0; i < r; ++i) {
        a_mu[i] = 0;
        for (std::size_t j = 0; j < r; ++j) a_mu[i] += static_cast<std::int64_t>(algebra_(i, j)) * mu[j];
      }
      std::int64_t norm = 0;
      for (std::size_t i = 0; i < r; ++i) norm += a_mu[i] * mu[i];
      const std::int64_t denom = norm - 2 * height;

      // Σ over ordered pairs (ν, μ−ν), folded onto index(ν) ≤ index(μ−ν).
      rhs = 0;
      std::fill(nu.begin(), nu.end(), 0);
      std::size_t nu_index = 0;
      while (next_in_box(nu, mu)) {
        nu_index = 0;
        for (std::size_t i = 0; i < r; ++i) nu_index += static_cast<std::size_t>(nu[i]) * stride[i];
        const std::size_t rest_index = mu_index - nu_index;
        if (nu_index > rest_index) break;
        if (rest_index == 0 || c_at[nu_index] == nullptr || c_at[rest_index] == nullptr) continue;
        // (ν, μ−ν) = νᵀAμ − νᵀAν
        std::int64_t pairing = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (nu[i] == 0) continue;
          std::int64_t a_nu_i = 0;
          for (std::size_t j = 0; j < r; ++j) a_nu_i += static_cast<std::int64_t>(algebra_(i, j)) * nu[j];
          pairing += nu[i] * (a_mu[i] - a_nu_i);
        }
        if (pairing == 0) continue;
        term = *c_at[nu_index] * *c_at[rest_index];
        term *= (nu_index == rest_index ? pairing : 2 * pairing);
        rhs += term;
      }

      if (denom != 0) {
        entry.c = rhs / denom;
      } else {
        if (policy_ == SingularPolicy::kThrow) {
          throw RecurrenceSingular("recurrence singular at weight " + mu_w.to_string() +
                                   ": (λ,λ) − 2(ρ,λ) = 0");
        }
        if (rhs != 0) {
          throw InternalConsistencyError("Peterson recurrence inconsistent at singular weight " + mu_w.to_string());
        }
        entry.c = weyl_c(mu_w);
        singular_.push_back(mu_w);
      }

      BigRational m = entry.c;
      const int content = mu_w.content();
      for (int k = 2; k <= content; ++k) {
        if (content % k != 0) continue;
        const auto& sub = entries_.at(mu_w.divided_by(k));
        BigRational share(sub.mult, k);
        share.canonicalize();
        m -= share;
      }
      m.canonicalize();
      if (m.get_den() != 1 || m < 0) {
        throw InternalConsistencyError("non-integral or negative multiplicity " + m.get_str() + " at " +
                                       mu_w.to_string());
      }
      entry.mult = m.get_num();
    }
    auto [it, inserted] = entries_.emplace(mu_w, std::move(entry));
    if (it->second.c != 0) c_at[mu_index] = &it->second.c;
  }
}

std::vector<std::pair<Weight, int>> weyl_denominator_terms(const CartanMatrix& a, const Weight& bound) {
  require_symmetric(a);
  const std::size_t r = a.rank();
  std::vector<std::pair<Weight, int>> out;
  std::set<Weight> seen;
  std::vector<Weight> level{Weight::zero(r)};
  seen.insert(level.front());
  out.emplace_back(level.front(), 1);
  int sign = 1;
  while (!level.empty()) {
    sign = -sign;
    std::vector<Weight> next;
    for (const Weight& d : level) {
      for (std::size_t i = 0; i < r; ++i) {
        // ρ − s_i wρ = (ρ − wρ) + (wρ, α_i) α_i with (wρ, α_i) = 1 − (ρ − wρ, α_i).
        std::int64_t pairing = 0;
        for (std::size_t j = 0; j < r; ++j) pairing += static_cast<std::int64_t>(d[j]) * a(j, i);
        const std::int64_t t = 1 - pairing;
        if (t <= 0) continue;
        if (d[i] + t > bound[i]) continue;
        Weight next_d = d.with_added(i, static_cast<int>(t));
        if (seen.insert(next_d).second) {
          out.emplace_back(next_d, sign);
          next.push_back(std::move(next_d));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

BigRational MultiplicityTable::weyl_c(const Weight& lambda) {
  if (!lambda.dominated_by(log_bound_)) {
    std::vector<int> b(lambda.rank());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::max(lambda[i], log_bound_[i]);
    log_bound_ = Weight(std::move(b));
    log_series_.clear();

    std::vector<std::pair<Weight, int>> f = weyl_denominator_terms(algebra_, log_bound_);
    f.erase(f.begin());  // identity element
    // G = log(1 + F):  ht(μ) G_μ = ht(μ) F_μ − Σ_{ν ∈ supp F} ht(μ−ν) G_{μ−ν} F_ν.
    for (const Weight& mu : weights_in_box(log_bound_)) {
      if (mu.is_zero()) continue;
      BigRational acc = 0;
      for (const auto& [nu, sign] : f) {
        if (!nu.dominated_by(mu)) continue;
        if (nu == mu) {
          acc += BigRational(mu.height() * sign);
          continue;
        }
        const Weight rest = mu - nu;
        auto it = log_series_.find(rest);
        if (it == log_series_.end() || it->second == 0) continue;
        acc -= it->second * BigRational(rest.height() * sign);
      }
      acc /= mu.height();
      if (acc != 0) log_series_.emplace(mu, acc);
    }
  }
  auto it = log_series_.find(lambda);
  return it == log_series_.end() ? BigRational(0) : BigRational(-it->second);
}

BigInt peterson_mult(MultiplicityTable& table, const Weight& lambda) { return table.mult(lambda); }

BigInt SharedMultiplicityTable::mult(const Weight& lambda) {
  {
    std::shared_lock lock(mutex_);
    if (const BigInt* m = table_.cached_mult(lambda)) return *m;
  }
  std::unique_lock lock(mutex_);
  return table_.mult(lambda);
}

}  // namespace kmroot
