#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cliquebench/graph.hpp"
#include "cliquebench/rng.hpp"

namespace cliquebench {

inline constexpr int kInstanceFormatVersion = 1;

/// Parameters of the planted-clique one-way function f_{n,p,k}.
struct PlantParams {
  std::size_t n = 0;
  double p = 0.5;
  std::size_t k = 0;

  /// log_{1/p} n; NaN when undefined (p outside (0,1) or n < 1).
  double log_inv_p_n() const;
  /// The epsilon with k = (1 + epsilon) * log_{1/p} n; NaN when undefined.
  double epsilon() const;
  /// k within [log_{1/p} n, 2 log_{1/p} n] and 0 < p < 1.
  bool in_target_range() const;
  /// Throws InputError on p outside [0,1] or k > n.
  void validate() const;

  friend bool operator==(const PlantParams&, const PlantParams&) = default;
};

struct PlantedInstance {
  Graph public_graph;
  VertexSet hidden_clique;  // scoring only; never handed to attacks
  PlantParams params;
  std::uint64_t seed = 0;
};

Graph sample_gnp(std::size_t n, double p, Rng& rng);
Graph plant_clique(const Graph& g, const VertexSet& members);

/// Samples G ~ G(n,p), then a uniform k-subset K, and returns G with K
/// completed. The seed recorded is `rng.seed()`.
PlantedInstance owf_evaluate(const PlantParams& params, Rng& rng);
PlantedInstance owf_evaluate(const PlantParams& params, std::uint64_t seed);

struct CliqueSizeSummary {
  double mean = 0.0;
  std::size_t min = 0;
  std::size_t max = 0;
  std::vector<std::size_t> sizes;
};

/// Exact maximum clique sizes of `trials` unplanted G(n,p) samples.
CliqueSizeSummary natural_clique_size_experiment(std::size_t n, double p, std::size_t trials,
                                                 Rng& rng);

// Instance container: a structured text file with three sections,
//   [metadata]      key = value lines: format-version, n, p, k, epsilon, seed
//   [graph]         a DIMACS block
//   [hidden-clique] 1-based vertex ids, whitespace separated
void write_instance(std::ostream& out, const PlantedInstance& inst);
PlantedInstance read_instance(std::istream& in);
void write_instance_file(const std::string& path, const PlantedInstance& inst);
PlantedInstance read_instance_file(const std::string& path);

}  // namespace cliquebench
