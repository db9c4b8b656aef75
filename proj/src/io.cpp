#include "isoshift/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace isoshift {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// ============================================================================
// Complex-matrix JSON
// ============================================================================

json matrix_to_json(const ComplexMatrix& a, const json& meta) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      re_row.push_back(a(i, j).real());
      im_row.push_back(a(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"n_rows", a.rows()},
              {"n_cols", a.cols()},
              {"re", std::move(re)},
              {"im", std::move(im)},
              {"meta", meta.is_null() ? json::object() : meta}};
}

ComplexMatrix matrix_from_json(const json& j, json* meta) {
  if (!j.is_object() || !j.contains("n_rows") || !j.contains("n_cols") ||
      !j.contains("re") || !j.contains("im"))
    throw std::runtime_error("matrix JSON: expected n_rows/n_cols/re/im fields");
  const auto rows = j.at("n_rows").get<Eigen::Index>();
  const auto cols = j.at("n_cols").get<Eigen::Index>();
  if (rows < 1 || cols < 1) throw std::runtime_error("matrix JSON: dimensions must be positive");
  const json& re = j.at("re");
  const json& im = j.at("im");
  if (re.size() != static_cast<std::size_t>(rows) || im.size() != static_cast<std::size_t>(rows))
    throw std::runtime_error("matrix JSON: row count mismatch");
  ComplexMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& re_row = re.at(i);
    const json& im_row = im.at(i);
    if (re_row.size() != static_cast<std::size_t>(cols) ||
        im_row.size() != static_cast<std::size_t>(cols))
      throw std::runtime_error("matrix JSON: column count mismatch in row " +
                               std::to_string(i));
    for (Eigen::Index jj = 0; jj < cols; ++jj)
      a(i, jj) = Complex(re_row.at(jj).get<double>(), im_row.at(jj).get<double>());
  }
  if (!a.allFinite()) throw std::runtime_error("matrix JSON: non-finite entries");
  if (meta) *meta = j.contains("meta") ? j.at("meta") : json::object();
  return a;
}

void write_matrix_json(const std::string& path, const ComplexMatrix& a, const json& meta) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << matrix_to_json(a, meta).dump(2) << "\n";
}

ComplexMatrix read_matrix_json(const std::string& path, json* meta) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return matrix_from_json(j, meta);
}

json basis_to_json(const SpectralBasis& b) {
  json lambda = json::array();
  for (Eigen::Index k = 0; k < b.lambda.size(); ++k) lambda.push_back(b.lambda[k]);
  return matrix_to_json(b.psi, json{{"form", "spectral_basis"},
                                    {"source", to_string(b.source)},
                                    {"lambda", std::move(lambda)}});
}

SpectralBasis basis_from_json(const json& j) {
  json meta;
  SpectralBasis b;
  b.psi = matrix_from_json(j, &meta);
  if (b.psi.rows() != b.psi.cols())
    throw std::runtime_error("basis JSON: psi must be square");
  b.n = static_cast<int>(b.psi.rows());
  if (!meta.contains("lambda") || meta.at("lambda").size() != static_cast<std::size_t>(b.n))
    throw std::runtime_error("basis JSON: meta.lambda missing or wrong length");
  b.lambda.resize(b.n);
  for (int k = 0; k < b.n; ++k) b.lambda[k] = meta.at("lambda").at(k).get<double>();
  const std::string source = meta.value("source", "custom");
  if (source == "laplacian")
    b.source = BasisSource::Laplacian;
  else if (source == "adjacency")
    b.source = BasisSource::Adjacency;
  else if (source == "dft")
    b.source = BasisSource::Dft;
  else
    b.source = BasisSource::Custom;
  return b;
}

// ============================================================================
// Real CSV
// ============================================================================

void write_csv(std::ostream& os, const RealMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) os << ",";
      os << format_double(a(i, j));
    }
    os << "\n";
  }
}

RealMatrix read_csv(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::runtime_error("csv line " + std::to_string(line_no) +
                                 ": cannot parse \"" + cell + "\"");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("csv line " + std::to_string(line_no) +
                               ": ragged row width");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("csv: no data rows");
  RealMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
  if (!a.allFinite()) throw std::runtime_error("csv: non-finite entries");
  return a;
}

void write_csv_file(const std::string& path, const RealMatrix& a) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(f, a);
}

RealMatrix read_csv_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  try {
    return read_csv(f);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

ComplexMatrix read_signal(const std::string& path) {
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return read_matrix_json(path);
  return read_csv_file(path).cast<Complex>();
}

}  // namespace isoshift
