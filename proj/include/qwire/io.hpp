#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwire/boundary.hpp"
#include "qwire/errors.hpp"
#include "qwire/matrix.hpp"
#include "qwire/smatrix.hpp"

namespace qwire {

/// Malformed matrix file. location() is a JSON pointer or "byte N".
class FormatError : public Error {
 public:
  FormatError(const std::string& location, const std::string& message)
      : Error(location + ": " + message), location_(location) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

enum class MatrixKind { boundary_pair, smatrix, unitary };

std::string_view to_string(MatrixKind kind);

/// On-disk interchange format (UTF-8 JSON):
///
///   {"kind": "smatrix", "n": 2, "energy": 1,
///    "entries": [[[re, im], [re, im]], [[re, im], [re, im]]]}
///
/// "entries" is one n x n matrix of [re, im] pairs, or for "boundary_pair"
/// the two-element array [A, B]. "energy" is required for "smatrix" and
/// optional otherwise. Numbers are written with 17 significant digits, so
/// write-then-read reproduces every finite double exactly.
struct MatrixFile {
  MatrixKind kind;
  std::vector<ComplexMatrix> matrices;
  std::optional<double> energy;

  std::size_t n() const { return matrices.front().rows(); }

  static MatrixFile from(const BoundaryCondition& bc);
  static MatrixFile from(const ScatteringMatrix& s);
  static MatrixFile unitary(const ComplexMatrix& u);

  /// Throws FormatError when the kind or energy does not fit.
  BoundaryCondition boundary_condition() const;
  ScatteringMatrix scattering_matrix() const;
};

MatrixFile parse_matrix_file(std::string_view text);
std::string to_json(const MatrixFile& file);

MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);

/// Shortest-safe decimal form of a double: 17 significant digits, "C" locale.
std::string format_double(double value);

/// Matrix as a JSON array of rows of [re, im] pairs.
std::string matrix_to_json(const ComplexMatrix& m);

}  // namespace qwire
