#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "isoshift/spectral.hpp"
#include "isoshift/types.hpp"

namespace isoshift {

// ============================================================================
// Complex-matrix JSON
//
//   {"n_rows": R, "n_cols": C, "re": [[...]], "im": [[...]], "meta": {...}}
//
// re/im are row-major arrays of rows; doubles round-trip losslessly.
// ============================================================================

nlohmann::json matrix_to_json(const ComplexMatrix& a, const nlohmann::json& meta);
ComplexMatrix matrix_from_json(const nlohmann::json& j, nlohmann::json* meta = nullptr);

void write_matrix_json(const std::string& path, const ComplexMatrix& a,
                       const nlohmann::json& meta);
ComplexMatrix read_matrix_json(const std::string& path, nlohmann::json* meta = nullptr);

/// A SpectralBasis rides the same format: psi as the matrix payload, lambda
/// and the source tag in meta.
nlohmann::json basis_to_json(const SpectralBasis& b);
SpectralBasis basis_from_json(const nlohmann::json& j);

// ============================================================================
// Real CSV
//
// Vectors are one value per line; time-vertex signals are N rows of M
// comma-separated columns. Doubles are written in shortest round-trip form.
// ============================================================================

std::string format_double(double v);

void write_csv(std::ostream& os, const RealMatrix& a);
RealMatrix read_csv(std::istream& is);

void write_csv_file(const std::string& path, const RealMatrix& a);
RealMatrix read_csv_file(const std::string& path);

/// Reads a signal from .csv (real) or .json (complex matrix) by extension.
ComplexMatrix read_signal(const std::string& path);

}  // namespace isoshift
