#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "compare.hpp"
#include "kmroot/errors.hpp"
#include "kmroot/formula.hpp"
#include "kmroot/freelie.hpp"
#include "kmroot/peterson.hpp"
#include "kmroot/serre.hpp"
#include "kmroot/tuples.hpp"

namespace kmroot::cli {

namespace {

std::vector<int> parse_ints(const std::string& text, std::size_t count, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  if (count && out.size() != count) {
    throw InvalidArgument(std::string(flag) + " expects " + std::to_string(count) + " comma-separated integers");
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InvalidArgument("--range expects LO..HI");
  const auto lo = parse_ints(text.substr(0, dots), 1, "--range");
  const auto hi = parse_ints(text.substr(dots + 2), 1, "--range");
  if (lo[0] < 0 || hi[0] < lo[0]) throw InvalidArgument("--range needs 0 <= LO <= HI");
  return {lo[0], hi[0]};
}

struct Flags {
  std::string gcm;
  std::string weight;
  std::string method = "peterson";
  std::string variant = "guarded";
  std::string range = "2..3";
  std::string format = "csv";
  std::string out_path;
  std::string expression;
  int height_cap = 10;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool verify = false;
};

std::pair<int, int> gcm_params(const Flags& f) {
  if (f.gcm.empty()) throw InvalidArgument("--gcm a1,a2 is required");
  const auto a = parse_ints(f.gcm, 2, "--gcm");
  if (a[0] < 1 || a[1] < 1) throw InvalidArgument("--gcm entries must be positive");
  return {a[0], a[1]};
}

void note_hypothesis(int a1, int a2, std::ostream& err) {
  if (std::max(a1, a2) < 2) err << "note: (a1,a2) = (1,1) is outside paper hypothesis\n";
  if (a1 > a2) err << "note: a1 > a2 is outside stated hypothesis\n";
}

int cmd_mult(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto [a1, a2] = gcm_params(f);
  if (f.weight.empty()) throw InvalidArgument("--weight n1,n2,n3 is required");
  const auto n = parse_ints(f.weight, 3, "--weight");
  const Weight w(n);
  const CartanMatrix a = paper_shape(a1, a2);
  note_hypothesis(a1, a2, err);
  if (f.method == "peterson") {
    MultiplicityTable table(a);
    out << table.mult(w) << '\n';
  } else if (f.method == "quotient") {
    out << root_multiplicity_quotient(a, w, f.height_cap) << '\n';
  } else if (f.method == "formula") {
    const auto p = FormulaParams::make(a1, a2, n[0], n[1], n[2]);
    out << theorem_dim(p, parse_variant(f.variant)).dim << '\n';
  } else if (f.method == "tuples") {
    const auto p = FormulaParams::make(a1, a2, n[0], n[1], n[2]);
    out << count_canonical(p).canonical << '\n';
  } else {
    throw InvalidArgument("--method must be formula, peterson, quotient or tuples");
  }
  return kOk;
}

int cmd_rewrite(const Flags& f, std::ostream& out, std::ostream& err) {
  const BracketExpr x = parse_bracket(f.expression);
  const LieCombination c = to_standard_form(x);
  out << c.to_string() << '\n';
  if (f.verify) {
    if (c.expand() != expand_tensor(x)) {
      out << "MISMATCH\n";
      err << "error: tensor expansions differ\n";
      return kComputation;
    }
    out << "VERIFIED\n";
  }
  return kOk;
}

int cmd_witt(const Flags& f, std::ostream& out) {
  if (f.weight.empty()) throw InvalidArgument("--weight is required");
  out << free_lie_dim(Weight(parse_ints(f.weight, 0, "--weight"))) << '\n';
  return kOk;
}

int cmd_compare(const Flags& f, std::ostream& out, std::ostream& err) {
  CompareOptions o;
  std::tie(o.a1, o.a2) = gcm_params(f);
  std::tie(o.lo, o.hi) = parse_range(f.range);
  o.height_cap = f.height_cap;
  o.jobs = std::max(1u, f.jobs);
  Format format;
  if (f.format == "csv") {
    format = Format::kCsv;
  } else if (f.format == "json") {
    format = Format::kJson;
  } else {
    throw InvalidArgument("--format must be csv or json");
  }
  note_hypothesis(o.a1, o.a2, err);

  std::ofstream file;
  if (!f.out_path.empty()) {
    file.open(f.out_path);
    if (!file) throw InvalidArgument("cannot open " + f.out_path + " for writing");
  }
  std::ostream& sink = f.out_path.empty() ? out : file;
  const auto rows = run_compare(o, format, sink);

  int status = kOk;
  for (const auto& r : rows) {
    if (oracles_disagree(r)) {
      err << "error: oracles disagree at (" << r.n1 << "," << r.n2 << "," << r.n3 << "): peterson " << r.peterson
          << ", quotient " << *r.quotient << '\n';
      status = kComputation;
    }
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root multiplicities of rank-3 Kac-Moody algebras", "kmroot"};
  app.require_subcommand(1);
  Flags f;

  auto add_gcm = [&](CLI::App* c) { c->add_option("--gcm", f.gcm, "a1,a2"); };
  auto add_cap = [&](CLI::App* c) {
    c->add_option("--height-cap", f.height_cap, "Largest height given to the quotient oracle")->check(CLI::PositiveNumber);
  };

  CLI::App* mult = app.add_subcommand("mult", "Multiplicity of one weight");
  add_gcm(mult);
  mult->add_option("--weight", f.weight, "n1,n2,n3");
  mult->add_option("--method", f.method, "formula|peterson|quotient|tuples");
  mult->add_option("--variant", f.variant, "section44|lemma410|guarded");
  add_cap(mult);

  CLI::App* rewrite = app.add_subcommand("rewrite", "Rewrite a bracket expression into standard tuples");
  rewrite->add_option("expression", f.expression, "e.g. [[e1,e2],e3]")->required();
  rewrite->add_flag("--verify", f.verify, "Check the result by tensor expansion");

  CLI::App* compare = app.add_subcommand("compare", "Compare all methods over a grid of weights");
  add_gcm(compare);
  compare->add_option("--range", f.range, "LO..HI, applied to each n_i");
  compare->add_option("--format", f.format, "csv|json");
  compare->add_option("--out", f.out_path, "Output file (default stdout)");
  compare->add_option("--jobs", f.jobs, "Worker threads");
  add_cap(compare);

  CLI::App* witt = app.add_subcommand("witt", "Dimension of a free Lie algebra component");
  witt->add_option("--weight", f.weight, "n1,...,nr");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*mult) return cmd_mult(f, out, err);
    if (*rewrite) return cmd_rewrite(f, out, err);
    if (*compare) return cmd_compare(f, out, err);
    return cmd_witt(f, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  }
}

}  // namespace kmroot::cli
