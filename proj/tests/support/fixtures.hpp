#pragma once

// Shared worked examples: the nine-leaf partition tree and the split/merge
// networks used by unit and acceptance tests.

#include <cmath>
#include <string>
#include <vector>

#include "qcalc/network.hpp"
#include "qcalc/partition_tree.hpp"

namespace qcalc::testing {

/// O = A (+) D, A = B (+) C over nine unit leaves: B covers 2, C 4, D 3.
inline PartitionTree worked_tree() {
  std::vector<TreeNodeSpec> nodes = {
      {"O", {"A", "D"}},
      {"A", {"B", "C"}},
      {"B", {"b1", "b2"}},
      {"C", {"c1", "c2", "c3", "c4"}},
      {"D", {"d1", "d2", "d3"}},
  };
  for (const char* leaf : {"b1", "b2", "c1", "c2", "c3", "c4", "d1", "d2", "d3"}) {
    nodes.push_back({leaf, {}, 1.0});
  }
  return PartitionTree(std::move(nodes), "O");
}

inline const Pair kTransmit{1.0 / std::sqrt(2.0), 0.0};
inline const Pair kReflect{0.0, 1.0 / std::sqrt(2.0)};

/// Single-source Mach-Zehnder interferometer with phase delta on arm "a".
/// Detector "d1" reads cos^2(delta/2), "d2" reads sin^2(delta/2).
inline NetworkSpec mach_zehnder(double delta, double rate = 1.0) {
  NetworkSpec spec;
  spec.elements = {
      Element::source("src", rate),
      Element::splitter("bs1", {{"delay", kTransmit}, {"bs2b", kReflect}}),
      Element::phase_shift("delay", delta),
      Element::splitter("bs2a", {{"c2", kTransmit}, {"c1", kReflect}}),
      Element::splitter("bs2b", {{"c1", kTransmit}, {"c2", kReflect}}),
      Element::combiner("c1"),
      Element::combiner("c2"),
      Element::detector("d1"),
      Element::detector("d2"),
  };
  spec.edges = {{"src", "bs1"},  {"bs1", "delay"}, {"bs1", "bs2b"}, {"delay", "bs2a"},
                {"bs2a", "c1"},  {"bs2a", "c2"},   {"bs2b", "c1"},  {"bs2b", "c2"},
                {"c1", "d1"},    {"c2", "d2"}};
  return spec;
}

/// Two independent unit sources merged into one detector.
inline NetworkSpec two_source_merge(double rate_a = 1.0, double rate_b = 1.0) {
  NetworkSpec spec;
  spec.elements = {Element::source("s1", rate_a), Element::source("s2", rate_b),
                   Element::combiner("merge"), Element::detector("det")};
  spec.edges = {{"s1", "merge"}, {"s2", "merge"}, {"merge", "det"}};
  return spec;
}

/// Mach-Zehnder fed at both input ports by independent sources of equal rate.
inline NetworkSpec dual_port_mach_zehnder(double delta) {
  NetworkSpec spec;
  spec.elements = {
      Element::source("s1"),
      Element::source("s2"),
      Element::splitter("in1", {{"armA", kTransmit}, {"armB", kReflect}}),
      Element::splitter("in2", {{"armA", kReflect}, {"armB", kTransmit}}),
      Element::combiner("armA"),
      Element::combiner("armB"),
      Element::phase_shift("delay", delta),
      Element::splitter("outA", {{"c2", kTransmit}, {"c1", kReflect}}),
      Element::splitter("outB", {{"c1", kTransmit}, {"c2", kReflect}}),
      Element::combiner("c1"),
      Element::combiner("c2"),
      Element::detector("d1"),
      Element::detector("d2"),
  };
  spec.edges = {{"s1", "in1"},   {"s2", "in2"},   {"in1", "armA"}, {"in1", "armB"},
                {"in2", "armA"}, {"in2", "armB"}, {"armA", "delay"}, {"delay", "outA"},
                {"armB", "outB"}, {"outA", "c1"},  {"outA", "c2"},  {"outB", "c1"},
                {"outB", "c2"},  {"c1", "d1"},    {"c2", "d2"}};
  return spec;
}

/// Networks in which no source reaches a detector along two different paths
/// with surviving cross terms, so random source phases wash out interference.
inline std::vector<NetworkSpec> decoherence_library() {
  std::vector<NetworkSpec> lib;
  lib.push_back(two_source_merge());
  lib.push_back(dual_port_mach_zehnder(0.7));

  {
    // Two sources of different rate, each split once, crossed into two detectors.
    NetworkSpec spec;
    const double c = std::sqrt(0.3), s = std::sqrt(0.7);
    spec.elements = {
        Element::source("s1", 1.0, 0.4), Element::source("s2", 2.5, 2.0),
        Element::splitter("x1", {{"m1", {c, 0.0}}, {"m2", {0.0, s}}}),
        Element::splitter("x2", {{"m1", {s * 0.6, s * 0.8}}, {"m2", {c, 0.0}}}),
        Element::combiner("m1"), Element::combiner("m2"),
        Element::detector("d1"), Element::detector("d2")};
    spec.edges = {{"s1", "x1"}, {"s2", "x2"}, {"x1", "m1"}, {"x1", "m2"},
                  {"x2", "m1"}, {"x2", "m2"}, {"m1", "d1"}, {"m2", "d2"}};
    lib.push_back(std::move(spec));
  }
  {
    // One source fanned out to three detectors through phase elements.
    NetworkSpec spec;
    const double w = 1.0 / std::sqrt(3.0);
    spec.elements = {
        Element::source("s", 3.0),
        Element::splitter("fan", {{"p1", {w, 0.0}}, {"p2", {0.0, w}}, {"d3", {-w, 0.0}}}),
        Element::phase_shift("p1", 1.1), Element::phase_shift("p2", -0.3),
        Element::detector("d1"), Element::detector("d2"), Element::detector("d3")};
    spec.edges = {{"s", "fan"}, {"fan", "p1"}, {"fan", "p2"}, {"fan", "d3"},
                  {"p1", "d1"}, {"p2", "d2"}};
    lib.push_back(std::move(spec));
  }
  {
    // Three sources merged, then split to two detectors.
    NetworkSpec spec;
    spec.elements = {
        Element::source("s1", 0.5), Element::source("s2", 1.0, 1.0), Element::source("s3", 2.0, 2.0),
        Element::combiner("m"),
        Element::splitter("x", {{"d1", {0.6, 0.0}}, {"d2", {0.0, 0.8}}}),
        Element::detector("d1"), Element::detector("d2")};
    spec.edges = {{"s1", "m"}, {"s2", "m"}, {"s3", "m"}, {"m", "x"}, {"x", "d1"}, {"x", "d2"}};
    lib.push_back(std::move(spec));
  }
  return lib;
}

}  // namespace qcalc::testing
