#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "isoshift/types.hpp"

namespace isoshift {

// ============================================================================
// Graph type and validation
// ============================================================================

enum class GraphDefect { Asymmetry, NegativeWeight, SelfLoop, Disconnected, NonFinite };

struct ValidationIssue {
  GraphDefect kind;
  int i = -1;  // offending vertex indices where applicable
  int j = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  // Component label per vertex (filled when connectivity was evaluated).
  std::vector<int> component;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

/// Checks a candidate weight matrix against every Graph invariant and reports
/// all violations instead of failing on the first.
ValidationReport validate_weights(const RealMatrix& weights);

/// Undirected weighted graph, connected, nonnegative weights, no self-loops.
/// Immutable after construction; the constructor enforces all invariants.
class Graph {
 public:
  /// Throws std::invalid_argument with the validation report if invalid.
  explicit Graph(RealMatrix weights);

  int size() const { return n_; }
  const RealMatrix& weights() const { return weights_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && weights_ == other.weights_;
  }

 private:
  int n_;
  RealMatrix weights_;
};

inline ValidationReport validate(const Graph& g) { return validate_weights(g.weights()); }

/// Combinatorial Laplacian Diag(W·1) − W.
RealMatrix laplacian(const Graph& g);

// ============================================================================
// Generators (unit edge weights)
// ============================================================================

Graph make_cycle(int m);                  // m >= 3
Graph make_path(int n);                   // n >= 1 (n == 1 is the trivial graph)
Graph make_complete(int n);               // n >= 1
Graph make_grid(int rows, int cols);      // 4-neighbour lattice
/// Connected G(n, p); redraws until connected (at most 64 attempts), then
/// throws std::runtime_error. Deterministic for a given seed.
Graph make_erdos_renyi(int n, double p, std::uint64_t seed);

enum class GraphKind { Cycle, Path, Complete, Grid, ErdosRenyi };

struct GraphParams {
  int n = 0;
  int m = 0;           // grid columns (0 = square)
  double p = 0.0;      // erdos_renyi edge probability
  std::uint64_t seed = 0;
  bool has_seed = false;
};

Graph generate(GraphKind kind, const GraphParams& params);

// ============================================================================
// Edge-list serialization
//
// UTF-8 lines "i j w"; '#' starts a comment; optional first line "#n=<N>"
// fixes the vertex count (otherwise 1 + max index).
// ============================================================================

Graph load_edges(const std::string& text);
std::string save_edges(const Graph& g);

Graph load_edges_file(const std::string& path);
void save_edges_file(const Graph& g, const std::string& path);

}  // namespace isoshift
