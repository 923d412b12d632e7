#include "qcalc_cli/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qcalc/bilinear_product.hpp"
#include "qcalc/born.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/hilbert.hpp"
#include "qcalc/network.hpp"
#include "qcalc/partition_tree.hpp"
#include "qcalc_io/json_io.hpp"

namespace qcalc::cli {

namespace {

std::string num(double v) {
  std::string s = fmt::format("{:.10f}", v);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}
std::string sci(double v) { return fmt::format("{:.3e}", v); }

/// Collects rows and prints them as an aligned table or as CSV.
class Table {
 public:
  Table(std::vector<std::string> columns, bool csv) : columns_(std::move(columns)), csv_(csv) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    if (csv_) {
      print_csv_row(out, columns_);
      for (const auto& row : rows_) print_csv_row(out, row);
      return;
    }
    std::vector<std::size_t> width(columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      width[c] = columns_[c].size();
      for (const auto& row : rows_) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) text += "  ";
        text += fmt::format("{:<{}}", cells[c], width[c]);
      }
      while (!text.empty() && text.back() == ' ') text.pop_back();
      out << text << '\n';
    };
    line(columns_);
    for (const auto& row : rows_) line(row);
  }

 private:
  static void print_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c > 0 ? "," : "") << cells[c];
    out << '\n';
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
  bool csv_;
};

struct Common {
  std::uint64_t seed = 0;
  bool csv = false;
  unsigned threads = 1;
};

void header(std::ostream& out, const std::string& command, const Common& common) {
  out << "# qcalc " << command << " seed=" << common.seed << '\n';
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError(flag + ": '" + item + "' is not a number");
    }
    start = comma + 1;
  }
  return values;
}

TreePath parse_path(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size() ||
      text.find(':', colon + 1) != std::string::npos) {
    throw DomainError("--path: expected DEST:SOURCE, got '" + text + "'");
  }
  return {text.substr(0, colon), text.substr(colon + 1)};
}

// ---- subcommands -----------------------------------------------------------

struct TreeArgs {
  std::string file;
  std::vector<std::string> paths;
};

void run_tree(const TreeArgs& a, const Common& common, std::ostream& out) {
  const PartitionTree tree = io::load_tree(a.file);
  if (a.paths.empty()) {
    Table t({"node", "value"}, common.csv);
    for (const auto& id : tree.ids()) t.add({id, num(tree.node_value(id))});
    header(out, "tree", common);
    t.print(out);
    return;
  }
  Table t({"path", "value"}, common.csv);
  for (const auto& text : a.paths) {
    t.add({text, num(tree.path_value(parse_path(text)))});
  }
  header(out, "tree", common);
  t.print(out);
}

struct BayesArgs {
  std::string prior;
  std::string likelihood;
  double normalization_tol = 1e-9;
};

void run_bayes(const BayesArgs& a, const Common& common, std::ostream& out) {
  const auto prior = parse_list(a.prior, "--prior");
  const auto likelihood = parse_list(a.likelihood, "--likelihood");
  const BayesResult r = bayes(prior, likelihood, a.normalization_tol);
  header(out, "bayes", common);
  Table t({"hypothesis", "prior", "likelihood", "posterior"}, common.csv);
  for (std::size_t k = 0; k < prior.size(); ++k) {
    t.add({std::to_string(k + 1), num(prior[k]), num(likelihood[k]), num(r.posterior[k])});
  }
  t.print(out);
  out << (common.csv ? "# evidence=" : "evidence = ") << num(r.evidence) << '\n';
}

struct ClassifyArgs {
  std::string gamma;
  double tol = 1e-9;
  std::size_t samples = 256;
};

void run_classify(const ClassifyArgs& a, const Common& common, std::ostream& out) {
  const auto values = parse_list(a.gamma, "--gamma");
  if (values.size() != 8) {
    throw DomainError("--gamma: expected 8 coefficients (g111,g112,g121,g122,g211,g212,g221,g222), got " +
                      std::to_string(values.size()));
  }
  std::array<double, 8> flat{};
  std::copy(values.begin(), values.end(), flat.begin());
  const Classification c = classify_detailed(BilinearProduct(flat), {a.tol, a.samples, common.seed});
  header(out, "classify", common);
  const bool associative = c.product_class.tag != ProductClassTag::NonAssociative;
  const std::string u_ratio = associative ? num(c.degeneracy.u_slot_ratio) : "";
  const std::string v_ratio = associative ? num(c.degeneracy.v_slot_ratio) : "";
  const std::string identity_c1 = c.identity ? num(c.identity->c1) : "";
  const std::string identity_c2 = c.identity ? num(c.identity->c2) : "";
  const std::string disc = c.identity ? num(c.discriminant) : "";
  if (common.csv) {
    Table t({"class", "mu", "associativity_residual", "u_slot_ratio", "v_slot_ratio", "identity_c1",
             "identity_c2", "discriminant"},
            true);
    t.add({std::string(to_string(c.product_class)),
           c.product_class.mu ? std::to_string(*c.product_class.mu) : "", sci(c.associativity.max_residual),
           u_ratio, v_ratio, identity_c1, identity_c2, disc});
    t.print(out);
    return;
  }
  out << to_string(c.product_class) << '\n';
  out << "associativity residual = " << sci(c.associativity.max_residual) << '\n';
  if (associative) out << "slot ratios (u, v) = " << u_ratio << ", " << v_ratio << '\n';
  if (c.identity) {
    out << "identity = (" << identity_c1 << ", " << identity_c2 << ")\n";
    out << "discriminant = " << disc << '\n';
  }
}

struct BornArgs {
  double target = 2.0;
  std::string alphas = "0,0.5,1,2,3,4";
  std::size_t samples = 1'000'000;
  double solve_tol = 1e-10;
};

void run_born_alpha(const BornArgs& a, const Common& common, std::ostream& out) {
  const auto alphas = parse_list(a.alphas, "--alphas");
  const double solved = solve_alpha(a.target, a.solve_tol);
  header(out, "born-alpha", common);
  Table t({"alpha", "closed", "mc", "std_error"}, common.csv);
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const McEstimate mc = mean_rate_mc(alphas[k], a.samples, derive_seed(common.seed, k), common.threads);
    t.add({num(alphas[k]), num(mean_rate_closed(alphas[k])), num(mc.estimate), num(mc.std_error)});
  }
  t.print(out);
  out << (common.csv ? "# " : "") << "target = " << num(a.target) << '\n';
  out << (common.csv ? "# " : "") << "solved alpha = " << num(solved) << '\n';
}

struct SampleArgs {
  std::string what = "object";
  std::size_t dimension = 2;
  std::size_t count = 10;
  double rate = 1.0;
  double duration = 10.0;
};

void run_sample(const SampleArgs& a, const Common& common, std::ostream& out) {
  Table t({}, true);
  if (a.what == "object") {
    const auto draws = sample_objects(a.dimension, a.count, common.seed, common.threads);
    t = Table({"draw", "component", "re", "im"}, true);
    for (std::size_t s = 0; s < draws.size(); ++s) {
      for (std::size_t k = 0; k < draws[s].dimension(); ++k) {
        t.add({std::to_string(s), std::to_string(k), num(draws[s][k].c1), num(draws[s][k].c2)});
      }
    }
  } else if (a.what == "prior") {
    if (a.count == 0) throw DomainError("--count must be at least 1");
    const auto draws = sample_prior(RateModel(a.rate), a.count, common.seed, common.threads);
    t = Table({"draw", "re", "im", "born"}, true);
    for (std::size_t s = 0; s < draws.size(); ++s) {
      t.add({std::to_string(s), num(draws[s].c1), num(draws[s].c2), num(born(draws[s]))});
    }
  } else {
    const auto times = poisson_stream(RateModel(a.rate), a.duration, common.seed);
    t = Table({"event", "time"}, true);
    for (std::size_t s = 0; s < times.size(); ++s) t.add({std::to_string(s), num(times[s])});
  }
  header(out, "sample", common);
  t.print(out);
}

struct NetworkArgs {
  std::string file;
  std::vector<std::string> phases;
  std::string mode = "pair";
  std::size_t trials = 100'000;
  double weight_tol = 1e-9;
};

/// Applies ID=RADIANS overrides to phase elements and sources.
NetworkSpec load_with_overrides(const NetworkArgs& a) {
  NetworkSpec spec = io::load_network(a.file);
  for (const auto& text : a.phases) {
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("--phase: expected ID=RADIANS, got '" + text + "'");
    const std::string id = text.substr(0, eq);
    const auto values = parse_list(text.substr(eq + 1), "--phase");
    if (values.size() != 1) throw DomainError("--phase: expected one value in '" + text + "'");
    const double value = values.front();
    auto it = std::find_if(spec.elements.begin(), spec.elements.end(), [&](const Element& e) { return e.id == id; });
    if (it == spec.elements.end()) throw DomainError("--phase: no element '" + id + "'");
    if (it->kind != ElementKind::Phase && it->kind != ElementKind::Source) {
      throw DomainError("--phase: '" + id + "' is neither a phase element nor a source");
    }
    it->phase = value;
  }
  return spec;
}

SimOptions sim_options(const NetworkArgs& a, const Common& common) {
  SimOptions o;
  o.seed = common.seed;
  o.trials = a.trials;
  o.threads = common.threads;
  o.weight_tol = a.weight_tol;
  return o;
}

void run_simulate(const NetworkArgs& a, const Common& common, std::ostream& out) {
  const NetworkSpec spec = load_with_overrides(a);
  const SimMode mode = a.mode == "scalar" ? SimMode::Scalar : a.mode == "pair" ? SimMode::Pair : SimMode::Stochastic;
  const SimResult r = simulate(spec, mode, sim_options(a, common));
  header(out, "simulate", common);
  out << (common.csv ? "# " : "") << "mode = " << to_string(r.mode) << '\n';
  const bool with_error = mode == SimMode::Stochastic;
  Table t(with_error ? std::vector<std::string>{"detector", "rate", "std_error"}
                     : std::vector<std::string>{"detector", "rate"},
          common.csv);
  for (const auto& d : r.detectors) {
    if (with_error) t.add({d.id, num(d.rate), num(d.std_error.value_or(0.0))});
    else t.add({d.id, num(d.rate)});
  }
  t.print(out);
}

void run_compare(const NetworkArgs& a, const Common& common, std::ostream& out) {
  const NetworkSpec spec = load_with_overrides(a);
  const ComparisonReport r = compare_modes(spec, sim_options(a, common));
  header(out, "compare", common);
  Table t({"detector", "scalar", "pair", "stochastic", "std_error", "interference", "stochastic_matches_scalar"},
          common.csv);
  for (const auto& row : r.rows) {
    t.add({row.detector, num(row.scalar), num(row.pair), num(row.stochastic), num(row.std_error),
           num(row.interference), row.stochastic_matches_scalar ? "yes" : "no"});
  }
  t.print(out);
  out << (common.csv ? "# " : "") << "all stochastic match scalar = " << (r.all_stochastic_match ? "yes" : "no")
      << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measure, probability and pair-amplitude calculus toolkit", "qcalc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qcalc 0.1.0");

  Common common;
  app.add_option("--seed", common.seed, "Seed for every sampled quantity")->capture_default_str();
  app.add_flag("--csv", common.csv, "CSV instead of an aligned table");
  app.add_option("--threads", common.threads, "Worker threads for sampling (results do not depend on it)")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();

  std::function<void()> action;

  TreeArgs tree;
  auto* tree_cmd = app.add_subcommand("tree", "Node values and path ratios of a partition tree");
  tree_cmd->add_option("--file", tree.file, "Tree JSON (docs/tree.schema.json)")->required()->check(CLI::ExistingFile);
  tree_cmd->add_option("--path", tree.paths, "DEST:SOURCE path to evaluate (repeatable)");
  tree_cmd->callback([&] { action = [&] { run_tree(tree, common, out); }; });

  BayesArgs bay;
  auto* bayes_cmd = app.add_subcommand("bayes", "Posterior and evidence for a discrete model");
  bayes_cmd->add_option("--prior", bay.prior, "Comma-separated prior, summing to 1")->required();
  bayes_cmd->add_option("--likelihood", bay.likelihood, "Comma-separated likelihoods")->required();
  bayes_cmd->add_option("--normalization-tol", bay.normalization_tol, "Allowed |sum(prior) - 1|")
      ->capture_default_str();
  bayes_cmd->callback([&] { action = [&] { run_bayes(bay, common, out); }; });

  ClassifyArgs cls;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a bilinear pair product");
  classify_cmd
      ->add_option("--gamma", cls.gamma, "Eight coefficients g111,g112,g121,g122,g211,g212,g221,g222")
      ->required();
  classify_cmd->add_option("--tol", cls.tol, "Associativity, degeneracy and discriminant tolerance")
      ->capture_default_str();
  classify_cmd->add_option("--samples", cls.samples, "Associativity sample triples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify_cmd->callback([&] { action = [&] { run_classify(cls, common, out); }; });

  BornArgs brn;
  auto* born_cmd = app.add_subcommand("born-alpha", "Two-source exponent: closed form, Monte Carlo, root");
  born_cmd->add_option("--target", brn.target, "Required mean of |e^{ia} + e^{ib}|^alpha")->capture_default_str();
  born_cmd->add_option("--alphas", brn.alphas, "Comma-separated exponents for the table")->capture_default_str();
  born_cmd->add_option("--samples", brn.samples, "Monte Carlo samples per exponent")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  born_cmd->add_option("--solve-tol", brn.solve_tol, "Root tolerance on the closed form")->capture_default_str();
  born_cmd->callback([&] { action = [&] { run_born_alpha(brn, common, out); }; });

  SampleArgs smp;
  auto* sample_cmd = app.add_subcommand("sample", "Emit random draws as CSV");
  sample_cmd->add_option("--what", smp.what, "object | prior | poisson")
      ->check(CLI::IsMember({"object", "prior", "poisson"}))
      ->capture_default_str();
  sample_cmd->add_option("--n", smp.dimension, "Object dimension")->capture_default_str();
  sample_cmd->add_option("--count", smp.count, "Number of draws")->capture_default_str();
  sample_cmd->add_option("--rate", smp.rate, "Poisson rate r")->capture_default_str();
  sample_cmd->add_option("--duration", smp.duration, "Poisson stream length")->capture_default_str();
  sample_cmd->callback([&] { action = [&] { run_sample(smp, common, out); }; });

  NetworkArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Evaluate a path network in one mode");
  simulate_cmd->add_option("--file", sim.file, "Network JSON (docs/network.schema.json)")
      ->required()
      ->check(CLI::ExistingFile);
  simulate_cmd->add_option("--mode", sim.mode, "scalar | pair | stochastic")
      ->check(CLI::IsMember({"scalar", "pair", "stochastic"}))
      ->capture_default_str();
  simulate_cmd->add_option("--trials", sim.trials, "Stochastic trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate_cmd->add_option("--phase", sim.phases, "Override ID=RADIANS of a phase element or source (repeatable)");
  simulate_cmd->add_option("--weight-tol", sim.weight_tol, "Allowed |sum |c|^2 - 1| per splitter")
      ->capture_default_str();
  simulate_cmd->callback([&] { action = [&] { run_simulate(sim, common, out); }; });

  NetworkArgs cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Run all three modes and report interference");
  compare_cmd->add_option("--file", cmp.file, "Network JSON (docs/network.schema.json)")
      ->required()
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("--trials", cmp.trials, "Stochastic trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare_cmd->add_option("--phase", cmp.phases, "Override ID=RADIANS of a phase element or source (repeatable)");
  compare_cmd->add_option("--weight-tol", cmp.weight_tol, "Allowed |sum |c|^2 - 1| per splitter")
      ->capture_default_str();
  compare_cmd->callback([&] { action = [&] { run_compare(cmp, common, out); }; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qcalc: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    action();
    return kOk;
  } catch (const DomainError& e) {
    err << "qcalc: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "qcalc: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace qcalc::cli
