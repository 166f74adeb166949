#include "compare.hpp"

#include <atomic>
#include <exception>
#include <algorithm>
#include <thread>

#include <nlohmann/json.hpp>

#include "kmroot/formula.hpp"
#include "kmroot/gcm.hpp"
#include "kmroot/peterson.hpp"
#include "kmroot/serre.hpp"
#include "kmroot/tuples.hpp"

namespace kmroot::cli {

const char* const kCsvHeader =
    "a1,a2,n1,n2,n3,formula_section44,formula_lemma410,formula_guarded,tuples_canonical,peterson,quotient,"
    "agree_guarded_peterson";

namespace {

std::vector<Weight> grid(int lo, int hi) {
  std::vector<Weight> out;
  for (int n1 = lo; n1 <= hi; ++n1)
    for (int n2 = lo; n2 <= hi; ++n2)
      for (int n3 = lo; n3 <= hi; ++n3)
        if (n1 + n2 + n3 > 0) out.push_back(Weight{n1, n2, n3});
  return out;
}

struct Context {
  CartanMatrix algebra;
  SharedMultiplicityTable peterson;
  QuotientOracle quotient;
  int height_cap;
};

ComparisonRow compute_row(Context& ctx, int a1, int a2, const Weight& w) {
  ComparisonRow r;
  r.a1 = a1;
  r.a2 = a2;
  r.n1 = w[0];
  r.n2 = w[1];
  r.n3 = w[2];
  if (r.n1 >= 2 && r.n2 >= 2 && r.n3 >= 2) {
    const auto p = FormulaParams::make(a1, a2, r.n1, r.n2, r.n3);
    r.formula_section44 = theorem_dim(p, BVariant::kSection44).dim;
    r.formula_lemma410 = theorem_dim(p, BVariant::kLemma410).dim;
    r.formula_guarded = theorem_dim(p, BVariant::kGuarded).dim;
    r.tuples_canonical = count_canonical(p).canonical;
  }
  r.peterson = ctx.peterson.mult(w);
  if (w.height() <= ctx.height_cap) r.quotient = ctx.quotient.root_multiplicity(w);
  if (r.formula_guarded) r.agree_guarded_peterson = *r.formula_guarded == r.peterson;
  return r;
}

template <typename T>
std::string cell(const std::optional<T>& v, const char* missing) {
  if (!v) return missing;
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else if constexpr (std::is_same_v<T, BigInt>) {
    return v->get_str();
  } else {
    return std::to_string(*v);
  }
}

nlohmann::ordered_json number(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

template <typename T>
nlohmann::ordered_json json_cell(const std::optional<T>& v, const char* missing) {
  if (!v) return missing;
  if constexpr (std::is_same_v<T, BigInt>) {
    return number(*v);
  } else {
    return *v;
  }
}

}  // namespace

std::string csv_line(const ComparisonRow& r) {
  std::string s;
  for (int v : {r.a1, r.a2, r.n1, r.n2, r.n3}) s += std::to_string(v) + ',';
  s += cell(r.formula_section44, "n/a") + ',';
  s += cell(r.formula_lemma410, "n/a") + ',';
  s += cell(r.formula_guarded, "n/a") + ',';
  s += cell(r.tuples_canonical, "n/a") + ',';
  s += r.peterson.get_str() + ',';
  s += cell(r.quotient, "skipped") + ',';
  s += cell(r.agree_guarded_peterson, "n/a");
  return s;
}

std::string json_line(const ComparisonRow& r) {
  nlohmann::ordered_json j;
  j["a1"] = r.a1;
  j["a2"] = r.a2;
  j["n1"] = r.n1;
  j["n2"] = r.n2;
  j["n3"] = r.n3;
  j["formula_section44"] = json_cell(r.formula_section44, "n/a");
  j["formula_lemma410"] = json_cell(r.formula_lemma410, "n/a");
  j["formula_guarded"] = json_cell(r.formula_guarded, "n/a");
  j["tuples_canonical"] = json_cell(r.tuples_canonical, "n/a");
  j["peterson"] = number(r.peterson);
  j["quotient"] = json_cell(r.quotient, "skipped");
  j["agree_guarded_peterson"] = json_cell(r.agree_guarded_peterson, "n/a");
  return j.dump();
}

bool oracles_disagree(const ComparisonRow& r) { return r.quotient && BigInt(static_cast<unsigned long>(*r.quotient)) != r.peterson; }

std::vector<ComparisonRow> run_compare(const CompareOptions& options, Format format, std::ostream& out) {
  const auto points = grid(options.lo, options.hi);
  Context ctx{paper_shape(options.a1, options.a2), SharedMultiplicityTable(paper_shape(options.a1, options.a2)),
              QuotientOracle(paper_shape(options.a1, options.a2), {options.height_cap, Coordinates::kLyndon}),
              options.height_cap};

  std::vector<std::optional<ComparisonRow>> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t k = next.fetch_add(1);
      if (k >= points.size()) return;
      try {
        rows[k] = compute_row(ctx, options.a1, options.a2, points[k]);
      } catch (...) {
        errors[k] = std::current_exception();
        failed.store(true);
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(points.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Indices are claimed in order, so every row before the first failure exists.
  std::vector<ComparisonRow> done;
  if (format == Format::kCsv) out << kCsvHeader << '\n';
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!rows[k]) {
      const std::string where = points[k].to_string();
      std::string what = "unknown error";
      try {
        if (errors[k]) std::rethrow_exception(errors[k]);
      } catch (const std::exception& e) {
        what = e.what();
      }
      if (format == Format::kCsv) {
        out << "# truncated at weight " << where << ": " << what << '\n';
      } else {
        out << nlohmann::ordered_json{{"truncated", true}, {"weight", where}, {"error", what}}.dump() << '\n';
      }
      out.flush();
      if (errors[k]) std::rethrow_exception(errors[k]);
      break;
    }
    out << (format == Format::kCsv ? csv_line(*rows[k]) : json_line(*rows[k])) << '\n';
    done.push_back(std::move(*rows[k]));
  }
  out.flush();
  return done;
}

}  // namespace kmroot::cli
