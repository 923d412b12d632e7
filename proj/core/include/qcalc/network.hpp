#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcalc/pair.hpp"
#include "qcalc/random.hpp"

namespace qcalc {

enum class ElementKind { Source, Splitter, Phase, Combiner, Detector };
enum class SimMode { Scalar, Pair, Stochastic };

std::string_view to_string(ElementKind kind) noexcept;
std::string_view to_string(SimMode mode) noexcept;

/// One splitter output: the downstream element and its complex coefficient.
struct Branch {
  std::string target;
  Pair coefficient;
};

/// A network element. Only the fields relevant to `kind` are read:
///   Source    rate (>= 0) and phase; emits amplitude sqrt(rate) e^{i phase}
///   Splitter  branches, one per output edge, with sum |c|^2 == 1
///   Phase     phase, the shift delta applied as e^{i delta}
///   Combiner  no parameters
///   Detector  no parameters
/// `transmission` is an amplitude factor in [0, 1] applied to the element's
/// output; 1 is lossless.
struct Element {
  std::string id;
  ElementKind kind = ElementKind::Combiner;
  double rate = 1.0;
  double phase = 0.0;
  std::vector<Branch> branches;
  double transmission = 1.0;

  static Element source(std::string id, double rate = 1.0, double phase = 0.0);
  static Element splitter(std::string id, std::vector<Branch> branches);
  static Element phase_shift(std::string id, double delta);
  static Element combiner(std::string id);
  static Element detector(std::string id);
};

/// Directed acyclic graph of elements. Edges are (from, to) element ids.
///
/// Sources have no inputs and one output; detectors one input and no outputs;
/// phase elements one input and one output; combiners at least two inputs and
/// one output; splitters one input and at least two outputs.
struct NetworkSpec {
  std::vector<Element> elements;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Throws InvalidNetwork (CycleDetected for cycles) naming the offending element.
void validate(const NetworkSpec& spec, double weight_tol = 1e-9);

struct SimOptions {
  /// Required for stochastic mode.
  std::optional<Seed> seed;
  std::size_t trials = 100000;
  unsigned threads = 1;
  double weight_tol = 1e-9;
};

struct DetectorRate {
  std::string id;
  double rate = 0.0;
  /// Stochastic mode only.
  std::optional<double> std_error;
};

struct SimResult {
  SimMode mode = SimMode::Scalar;
  /// In element order of the NetworkSpec.
  std::vector<DetectorRate> detectors;

  /// Rate of the named detector; throws DomainError for an unknown id.
  double rate(std::string_view detector_id) const;
};

/// Scalar: rates add at combiners and split by |c|^2.
/// Pair: amplitudes add at combiners, multiply by coefficients along paths;
///       detectors report |amplitude|^2.
/// Stochastic: pair evaluation with each source phase drawn uniformly per
///       trial, detector rates averaged over `trials`.
SimResult simulate(const NetworkSpec& spec, SimMode mode, const SimOptions& options = {});

struct ModeComparison {
  std::string detector;
  double scalar = 0.0;
  double pair = 0.0;
  double stochastic = 0.0;
  double std_error = 0.0;
  /// pair - scalar
  double interference = 0.0;
  /// |stochastic - scalar| <= 4 std_error (or 1e-12 relative when std_error is 0).
  bool stochastic_matches_scalar = false;
};

struct ComparisonReport {
  std::vector<ModeComparison> rows;
  bool all_stochastic_match = false;
};

/// Runs all three modes. `options.seed` is required.
ComparisonReport compare_modes(const NetworkSpec& spec, const SimOptions& options);

}  // namespace qcalc
