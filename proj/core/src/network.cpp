#include "qcalc/network.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "qcalc/born.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/stats.hpp"

namespace qcalc {

std::string_view to_string(ElementKind kind) noexcept {
  switch (kind) {
    case ElementKind::Source: return "source";
    case ElementKind::Splitter: return "splitter";
    case ElementKind::Phase: return "phase";
    case ElementKind::Combiner: return "combiner";
    case ElementKind::Detector: return "detector";
  }
  return "?";
}

std::string_view to_string(SimMode mode) noexcept {
  switch (mode) {
    case SimMode::Scalar: return "scalar";
    case SimMode::Pair: return "pair";
    case SimMode::Stochastic: return "stochastic";
  }
  return "?";
}

Element Element::source(std::string id, double rate, double phase) {
  Element e;
  e.id = std::move(id);
  e.kind = ElementKind::Source;
  e.rate = rate;
  e.phase = phase;
  return e;
}

Element Element::splitter(std::string id, std::vector<Branch> branches) {
  Element e;
  e.id = std::move(id);
  e.kind = ElementKind::Splitter;
  e.branches = std::move(branches);
  return e;
}

Element Element::phase_shift(std::string id, double delta) {
  Element e;
  e.id = std::move(id);
  e.kind = ElementKind::Phase;
  e.phase = delta;
  return e;
}

Element Element::combiner(std::string id) {
  Element e;
  e.id = std::move(id);
  e.kind = ElementKind::Combiner;
  return e;
}

Element Element::detector(std::string id) {
  Element e;
  e.id = std::move(id);
  e.kind = ElementKind::Detector;
  return e;
}

double SimResult::rate(std::string_view detector_id) const {
  for (const auto& d : detectors) {
    if (d.id == detector_id) return d.rate;
  }
  throw DomainError("SimResult: no detector '" + std::string(detector_id) + "'");
}

namespace {

/// Index-based form of a validated NetworkSpec.
struct Compiled {
  struct Edge {
    std::size_t from;
    std::size_t to;
    Pair coefficient{1.0, 0.0};
  };
  std::vector<Element> elements;
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> inputs;   // edge indices per element
  std::vector<std::vector<std::size_t>> outputs;  // edge indices per element
  std::vector<std::size_t> order;                 // topological
  std::vector<std::size_t> sources;
  std::vector<std::size_t> detectors;
};

[[noreturn]] void reject(const Element& e, const std::string& why) {
  throw InvalidNetwork(std::string(to_string(e.kind)) + " '" + e.id + "': " + why);
}

Compiled compile(const NetworkSpec& spec, double weight_tol) {
  Compiled net;
  net.elements = spec.elements;
  const std::size_t n = net.elements.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    const Element& e = net.elements[i];
    if (e.id.empty()) throw InvalidNetwork("element " + std::to_string(i) + " has an empty id");
    if (!index.emplace(e.id, i).second) throw InvalidNetwork("duplicate element id '" + e.id + "'");
  }

  net.inputs.resize(n);
  net.outputs.resize(n);
  std::unordered_set<std::string> seen_edges;
  for (const auto& [from, to] : spec.edges) {
    auto f = index.find(from);
    auto t = index.find(to);
    if (f == index.end()) throw InvalidNetwork("edge from unknown element '" + from + "'");
    if (t == index.end()) throw InvalidNetwork("edge to unknown element '" + to + "'");
    if (f->second == t->second) throw CycleDetected("self-loop on element '" + from + "'");
    if (!seen_edges.insert(from + '\n' + to).second) {
      throw InvalidNetwork("duplicate edge '" + from + "' -> '" + to + "'");
    }
    net.outputs[f->second].push_back(net.edges.size());
    net.inputs[t->second].push_back(net.edges.size());
    net.edges.push_back({f->second, t->second});
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Element& e = net.elements[i];
    const std::size_t ins = net.inputs[i].size();
    const std::size_t outs = net.outputs[i].size();
    if (!(std::isfinite(e.transmission) && e.transmission >= 0.0 && e.transmission <= 1.0)) {
      reject(e, "transmission must lie in [0, 1]");
    }
    switch (e.kind) {
      case ElementKind::Source:
        if (ins != 0) reject(e, "sources take no inputs");
        if (outs != 1) reject(e, "sources need exactly one output");
        if (!(std::isfinite(e.rate) && e.rate >= 0.0)) reject(e, "rate must be finite and >= 0");
        if (!std::isfinite(e.phase)) reject(e, "phase must be finite");
        net.sources.push_back(i);
        break;
      case ElementKind::Detector:
        if (outs != 0) reject(e, "detectors have no outputs");
        if (ins != 1) reject(e, "detectors need exactly one input");
        net.detectors.push_back(i);
        break;
      case ElementKind::Phase:
        if (ins != 1 || outs != 1) reject(e, "phase elements need one input and one output");
        if (!std::isfinite(e.phase)) reject(e, "phase must be finite");
        break;
      case ElementKind::Combiner:
        if (ins < 2) reject(e, "combiners need at least two inputs");
        if (outs != 1) reject(e, "combiners need exactly one output");
        break;
      case ElementKind::Splitter: {
        if (ins != 1) reject(e, "splitters need exactly one input");
        if (outs < 2) reject(e, "splitters need at least two outputs");
        if (e.branches.size() != outs) {
          reject(e, std::to_string(e.branches.size()) + " branch coefficients for " +
                        std::to_string(outs) + " outputs");
        }
        double weight = 0.0;
        for (std::size_t edge : net.outputs[i]) {
          const std::string& target = net.elements[net.edges[edge].to].id;
          auto it = std::find_if(e.branches.begin(), e.branches.end(),
                                 [&](const Branch& b) { return b.target == target; });
          if (it == e.branches.end()) reject(e, "no branch coefficient for output '" + target + "'");
          if (!std::isfinite(it->coefficient.c1) || !std::isfinite(it->coefficient.c2)) {
            reject(e, "branch coefficient for '" + target + "' is not finite");
          }
          net.edges[edge].coefficient = it->coefficient;
          weight += born(it->coefficient);
        }
        if (std::abs(weight - 1.0) > weight_tol) {
          reject(e, "branch weights sum to " + std::to_string(weight) + ", not 1");
        }
        break;
      }
    }
  }
  if (net.sources.empty()) throw InvalidNetwork("network has no source");
  if (net.detectors.empty()) throw InvalidNetwork("network has no detector");

  // Kahn's algorithm; leftovers sit on a cycle.
  std::vector<std::size_t> pending(n);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = net.inputs[i].size();
    if (pending[i] == 0) ready.push_back(i);
  }
  std::reverse(ready.begin(), ready.end());
  while (!ready.empty()) {
    const std::size_t i = ready.back();
    ready.pop_back();
    net.order.push_back(i);
    for (std::size_t edge : net.outputs[i]) {
      if (--pending[net.edges[edge].to] == 0) ready.push_back(net.edges[edge].to);
    }
  }
  if (net.order.size() != n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pending[i] != 0) {
        throw CycleDetected("cycle detected through element '" + net.elements[i].id + "'");
      }
    }
  }
  return net;
}

std::vector<double> evaluate_scalar(const Compiled& net) {
  std::vector<double> edge_value(net.edges.size(), 0.0);
  std::vector<double> reading(net.elements.size(), 0.0);
  for (std::size_t i : net.order) {
    const Element& e = net.elements[i];
    double value = 0.0;
    if (e.kind == ElementKind::Source) {
      value = e.rate;
    } else {
      for (std::size_t edge : net.inputs[i]) value += edge_value[edge];
    }
    value *= e.transmission * e.transmission;
    reading[i] = value;
    for (std::size_t edge : net.outputs[i]) edge_value[edge] = value * born(net.edges[edge].coefficient);
  }
  return reading;
}

/// When given, `source_phase[i]` replaces the phase of source element i.
void evaluate_pair(const Compiled& net, const double* source_phase, std::vector<Pair>& edge_value,
                   std::vector<Pair>& amplitude) {
  for (std::size_t i : net.order) {
    const Element& e = net.elements[i];
    Pair value;
    switch (e.kind) {
      case ElementKind::Source: {
        const double phase = source_phase ? source_phase[i] : e.phase;
        value = scale(unit_phasor(phase), std::sqrt(e.rate));
        break;
      }
      case ElementKind::Phase:
        value = cmul(edge_value[net.inputs[i].front()], unit_phasor(e.phase));
        break;
      default:
        for (std::size_t edge : net.inputs[i]) value = pair_sum(value, edge_value[edge]);
        break;
    }
    value = scale(value, e.transmission);
    amplitude[i] = value;
    for (std::size_t edge : net.outputs[i]) edge_value[edge] = cmul(value, net.edges[edge].coefficient);
  }
}

SimResult collect(const Compiled& net, SimMode mode, const std::vector<double>& rates) {
  SimResult result;
  result.mode = mode;
  for (std::size_t d : net.detectors) result.detectors.push_back({net.elements[d].id, rates[d], {}});
  return result;
}

}  // namespace

void validate(const NetworkSpec& spec, double weight_tol) { (void)compile(spec, weight_tol); }

SimResult simulate(const NetworkSpec& spec, SimMode mode, const SimOptions& options) {
  const Compiled net = compile(spec, options.weight_tol);
  const std::size_t n = net.elements.size();

  if (mode == SimMode::Scalar) return collect(net, mode, evaluate_scalar(net));

  if (mode == SimMode::Pair) {
    std::vector<Pair> edges(net.edges.size());
    std::vector<Pair> amplitude(n);
    evaluate_pair(net, nullptr, edges, amplitude);
    std::vector<double> rates(n);
    for (std::size_t i = 0; i < n; ++i) rates[i] = born(amplitude[i]);
    return collect(net, mode, rates);
  }

  if (!options.seed) throw DomainError("simulate: stochastic mode requires a seed");
  if (options.trials == 0) throw DomainError("simulate: trials must be at least 1");
  const std::size_t n_det = net.detectors.size();
  std::vector<std::vector<RunningStats>> partial(chunk_count(options.trials),
                                                 std::vector<RunningStats>(n_det));
  for_each_chunk(options.trials, *options.seed, options.threads,
                 [&](std::size_t chunk, std::size_t begin, std::size_t end, Rng& rng) {
                   std::vector<double> phases(n, 0.0);
                   std::vector<Pair> edges(net.edges.size());
                   std::vector<Pair> amplitude(n);
                   for (std::size_t t = begin; t < end; ++t) {
                     for (std::size_t s : net.sources) phases[s] = rng.phase();
                     evaluate_pair(net, phases.data(), edges, amplitude);
                     for (std::size_t d = 0; d < n_det; ++d) {
                       partial[chunk][d].add(born(amplitude[net.detectors[d]]));
                     }
                   }
                 });
  SimResult result;
  result.mode = mode;
  for (std::size_t d = 0; d < n_det; ++d) {
    RunningStats total;
    for (const auto& chunk : partial) total.merge(chunk[d]);
    result.detectors.push_back({net.elements[net.detectors[d]].id, total.mean(), total.std_error()});
  }
  return result;
}

ComparisonReport compare_modes(const NetworkSpec& spec, const SimOptions& options) {
  if (!options.seed) throw DomainError("compare_modes: a seed is required");
  const SimResult scalar = simulate(spec, SimMode::Scalar, options);
  const SimResult pair = simulate(spec, SimMode::Pair, options);
  const SimResult stochastic = simulate(spec, SimMode::Stochastic, options);

  ComparisonReport report;
  report.all_stochastic_match = true;
  for (std::size_t d = 0; d < scalar.detectors.size(); ++d) {
    ModeComparison row;
    row.detector = scalar.detectors[d].id;
    row.scalar = scalar.detectors[d].rate;
    row.pair = pair.detectors[d].rate;
    row.stochastic = stochastic.detectors[d].rate;
    row.std_error = stochastic.detectors[d].std_error.value_or(0.0);
    row.interference = row.pair - row.scalar;
    const double band = std::max(4.0 * row.std_error, 1e-12 * std::max(1.0, std::abs(row.scalar)));
    row.stochastic_matches_scalar = std::abs(row.stochastic - row.scalar) <= band;
    report.all_stochastic_match = report.all_stochastic_match && row.stochastic_matches_scalar;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qcalc
