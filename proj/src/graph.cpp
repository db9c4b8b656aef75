#include "isoshift/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "isoshift/io.hpp"
#include "isoshift/random.hpp"

namespace isoshift {

namespace {

const char* defect_name(GraphDefect d) {
  switch (d) {
    case GraphDefect::Asymmetry: return "asymmetry";
    case GraphDefect::NegativeWeight: return "negative weight";
    case GraphDefect::SelfLoop: return "self-loop";
    case GraphDefect::Disconnected: return "disconnected";
    case GraphDefect::NonFinite: return "non-finite weight";
  }
  return "?";
}

// Component labels by breadth-first traversal over nonzero weights.
std::vector<int> component_labels(const RealMatrix& w) {
  const int n = static_cast<int>(w.rows());
  std::vector<int> label(n, -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    label[start] = next;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (label[v] < 0 && (w(u, v) != 0.0 || w(v, u) != 0.0)) {
          label[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

std::string ValidationReport::str() const {
  if (issues.empty()) return "ok";
  std::ostringstream os;
  for (std::size_t k = 0; k < issues.size(); ++k) {
    const auto& it = issues[k];
    if (k) os << "; ";
    os << defect_name(it.kind);
    if (it.i >= 0) {
      os << " at (" << it.i;
      if (it.j >= 0) os << "," << it.j;
      os << ")";
    }
    if (!it.detail.empty()) os << ": " << it.detail;
  }
  return os.str();
}

ValidationReport validate_weights(const RealMatrix& w) {
  ValidationReport report;
  if (w.rows() < 1 || w.rows() != w.cols()) {
    report.issues.push_back({GraphDefect::Asymmetry, -1, -1,
                             "weights must be a square matrix of positive dimension"});
    return report;
  }
  const int n = static_cast<int>(w.rows());
  for (int i = 0; i < n; ++i) {
    if (w(i, i) != 0.0)
      report.issues.push_back({GraphDefect::SelfLoop, i, i, ""});
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(w(i, j))) {
        report.issues.push_back({GraphDefect::NonFinite, i, j, ""});
        return report;  // everything downstream would be meaningless
      }
      if (j > i && w(i, j) != w(j, i))
        report.issues.push_back({GraphDefect::Asymmetry, i, j, ""});
      if (j > i && w(i, j) < 0.0)
        report.issues.push_back({GraphDefect::NegativeWeight, i, j, ""});
    }
  }
  report.component = component_labels(w);
  const int components = 1 + *std::max_element(report.component.begin(),
                                               report.component.end());
  if (components > 1) {
    std::ostringstream os;
    os << components << " components, labels [";
    for (int i = 0; i < n; ++i) os << (i ? " " : "") << report.component[i];
    os << "]";
    report.issues.push_back({GraphDefect::Disconnected, -1, -1, os.str()});
  }
  return report;
}

Graph::Graph(RealMatrix weights) : n_(static_cast<int>(weights.rows())), weights_(std::move(weights)) {
  const ValidationReport report = validate_weights(weights_);
  if (!report.ok())
    throw std::invalid_argument("invalid graph: " + report.str());
}

RealMatrix laplacian(const Graph& g) {
  const RealVector degrees = g.weights().rowwise().sum();
  RealMatrix l = -g.weights();
  l.diagonal() += degrees;
  return l;
}

// ============================================================================
// Generators
// ============================================================================

Graph make_cycle(int m) {
  if (m < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
  RealMatrix w = RealMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    w(i, j) = 1.0;
    w(j, i) = 1.0;
  }
  return Graph(std::move(w));
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path graph needs at least 1 vertex");
  RealMatrix w = RealMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    w(i, i + 1) = 1.0;
    w(i + 1, i) = 1.0;
  }
  return Graph(std::move(w));
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
  RealMatrix w = RealMatrix::Ones(n, n);
  w.diagonal().setZero();
  return Graph(std::move(w));
}

Graph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
  const int n = rows * cols;
  RealMatrix w = RealMatrix::Zero(n, n);
  auto at = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        w(at(r, c), at(r, c + 1)) = 1.0;
        w(at(r, c + 1), at(r, c)) = 1.0;
      }
      if (r + 1 < rows) {
        w(at(r, c), at(r + 1, c)) = 1.0;
        w(at(r + 1, c), at(r, c)) = 1.0;
      }
    }
  return Graph(std::move(w));
}

Graph make_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("erdos_renyi needs at least 1 vertex");
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("erdos_renyi edge probability must be in (0, 1]");
  constexpr int kMaxAttempts = 64;
  std::mt19937_64 g(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    RealMatrix w = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (uniform01(g) < p) {
          w(i, j) = 1.0;
          w(j, i) = 1.0;
        }
    if (validate_weights(w).ok()) return Graph(std::move(w));
  }
  std::ostringstream os;
  os << "no connected G(" << n << ", " << p << ") after " << kMaxAttempts
     << " draws; p is too small for this n";
  throw std::runtime_error(os.str());
}

Graph generate(GraphKind kind, const GraphParams& params) {
  switch (kind) {
    case GraphKind::Cycle: return make_cycle(params.n);
    case GraphKind::Path: return make_path(params.n);
    case GraphKind::Complete: return make_complete(params.n);
    case GraphKind::Grid: return make_grid(params.n, params.m > 0 ? params.m : params.n);
    case GraphKind::ErdosRenyi:
      if (!params.has_seed)
        throw std::invalid_argument("erdos_renyi requires a seed");
      return make_erdos_renyi(params.n, params.p, params.seed);
  }
  throw std::invalid_argument("unknown graph kind");
}

// ============================================================================
// Edge-list format
// ============================================================================

Graph load_edges(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  int n_header = -1;
  int max_index = -1;
  std::map<std::pair<int, int>, double> edges;

  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (line.compare(first, 3, "#n=") == 0) {
        try {
          n_header = std::stoi(line.substr(first + 3));
        } catch (const std::exception&) {
          throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                   ": malformed #n= header");
        }
        if (n_header < 1)
          throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                   ": vertex count must be positive");
      }
      continue;
    }
    std::istringstream ls(line);
    long long i = 0, j = 0;
    double w = 0.0;
    std::string extra;
    if (!(ls >> i >> j >> w) || (ls >> extra))
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected \"i j w\"");
    if (i < 0 || j < 0)
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": vertex indices must be nonnegative");
    const std::pair<int, int> key{static_cast<int>(std::min(i, j)),
                                  static_cast<int>(std::max(i, j))};
    const auto [it, inserted] = edges.emplace(key, w);
    if (!inserted && it->second != w)
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": conflicting weight for edge (" + std::to_string(key.first) +
                               "," + std::to_string(key.second) + ")");
    max_index = std::max(max_index, key.second);
  }

  const int n = n_header > 0 ? n_header : max_index + 1;
  if (n < 1) throw std::runtime_error("edge list defines no vertices");
  if (max_index >= n)
    throw std::runtime_error("edge index " + std::to_string(max_index) +
                             " exceeds declared vertex count " + std::to_string(n));
  RealMatrix weights = RealMatrix::Zero(n, n);
  for (const auto& [key, w] : edges) {
    weights(key.first, key.second) = w;
    weights(key.second, key.first) = w;
  }
  const ValidationReport report = validate_weights(weights);
  if (!report.ok()) throw std::runtime_error("edge list graph invalid: " + report.str());
  return Graph(std::move(weights));
}

std::string save_edges(const Graph& g) {
  std::ostringstream os;
  os << "#n=" << g.size() << "\n";
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.weights()(i, j) != 0.0)
        os << i << " " << j << " " << format_double(g.weights()(i, j)) << "\n";
  return os.str();
}

Graph load_edges_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return load_edges(buf.str());
}

void save_edges_file(const Graph& g, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << save_edges(g);
}

}  // namespace isoshift
