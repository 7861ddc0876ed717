#include "qwire/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qwire {

namespace {

using nlohmann::json;

std::string pointer(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

double read_number(const json& node, const std::string& where) {
  if (!node.is_number()) throw FormatError(where, "expected a number");
  const double value = node.get<double>();
  if (!std::isfinite(value)) throw FormatError(where, "non-finite number");
  return value;
}

ComplexMatrix read_matrix(const json& node, std::size_t n, const std::string& where) {
  if (!node.is_array() || node.size() != n) {
    throw FormatError(where, "expected an array of " + std::to_string(n) + " rows");
  }
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = node[r];
    const auto row_at = pointer(where, r);
    if (!row.is_array() || row.size() != n) {
      throw FormatError(row_at, "expected a row of " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto& pair = row[c];
      const auto at = pointer(row_at, c);
      if (!pair.is_array() || pair.size() != 2) {
        throw FormatError(at, "complex entries are [re, im] pairs");
      }
      entries.emplace_back(read_number(pair[0], pointer(at, 0)),
                           read_number(pair[1], pointer(at, 1)));
    }
  }
  return ComplexMatrix(n, n, std::move(entries));
}

void append_matrix(std::string& out, const ComplexMatrix& m, const char* indent) {
  out += "[\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += indent;
    out += "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += "[" + format_double(m(r, c).real()) + ", " +
             format_double(m(r, c).imag()) + "]";
    }
    out += r + 1 < m.rows() ? "],\n" : "]\n";
  }
  out += indent;
  out += "]";
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::boundary_pair:
      return "boundary_pair";
    case MatrixKind::smatrix:
      return "smatrix";
    case MatrixKind::unitary:
      return "unitary";
  }
  return "unknown";
}

std::string format_double(double value) {
  if (!std::isfinite(value)) throw ArgumentError("cannot serialise non-finite number");
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 17);
  std::string text(buf, res.ptr);
  // JSON readers take "-0" for the integer 0 and drop the sign.
  if (text.find_first_of(".e") == std::string::npos) text += ".0";
  return text;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  std::string out;
  append_matrix(out, m, "");
  return out;
}

MatrixFile MatrixFile::from(const BoundaryCondition& bc) {
  return {MatrixKind::boundary_pair, {bc.a(), bc.b()}, std::nullopt};
}

MatrixFile MatrixFile::from(const ScatteringMatrix& s) {
  return {MatrixKind::smatrix, {s.matrix()}, s.energy().value()};
}

MatrixFile MatrixFile::unitary(const ComplexMatrix& u) {
  return {MatrixKind::unitary, {u}, std::nullopt};
}

BoundaryCondition MatrixFile::boundary_condition() const {
  if (kind != MatrixKind::boundary_pair) {
    throw FormatError("/kind", "expected \"boundary_pair\", got \"" +
                                   std::string(to_string(kind)) + "\"");
  }
  return {matrices[0], matrices[1]};
}

ScatteringMatrix MatrixFile::scattering_matrix() const {
  if (kind != MatrixKind::smatrix) {
    throw FormatError("/kind", "expected \"smatrix\", got \"" +
                                   std::string(to_string(kind)) + "\"");
  }
  return ScatteringMatrix(matrices[0], Energy{*energy});
}

MatrixFile parse_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("byte " + std::to_string(e.byte), "invalid JSON");
  }
  if (!doc.is_object()) throw FormatError("", "top level must be an object");

  const auto kind_it = doc.find("kind");
  if (kind_it == doc.end() || !kind_it->is_string()) {
    throw FormatError("/kind", "missing or not a string");
  }
  MatrixFile file{MatrixKind::unitary, {}, std::nullopt};
  const auto kind = kind_it->get<std::string>();
  if (kind == "boundary_pair") {
    file.kind = MatrixKind::boundary_pair;
  } else if (kind == "smatrix") {
    file.kind = MatrixKind::smatrix;
  } else if (kind == "unitary") {
    file.kind = MatrixKind::unitary;
  } else {
    throw FormatError("/kind", "unknown kind \"" + kind + "\"");
  }

  const auto n_it = doc.find("n");
  if (n_it == doc.end() || !n_it->is_number_unsigned() || n_it->get<std::size_t>() == 0) {
    throw FormatError("/n", "missing or not a positive integer");
  }
  const auto n = n_it->get<std::size_t>();

  if (const auto e_it = doc.find("energy"); e_it != doc.end() && !e_it->is_null()) {
    const double e = read_number(*e_it, "/energy");
    if (!(e > 0.0)) throw FormatError("/energy", "must be positive");
    file.energy = e;
  }
  if (file.kind == MatrixKind::smatrix && !file.energy) {
    throw FormatError("/energy", "required for kind \"smatrix\"");
  }

  const auto entries_it = doc.find("entries");
  if (entries_it == doc.end()) throw FormatError("/entries", "missing");
  if (file.kind == MatrixKind::boundary_pair) {
    if (!entries_it->is_array() || entries_it->size() != 2) {
      throw FormatError("/entries", "expected [A, B]");
    }
    file.matrices.push_back(read_matrix((*entries_it)[0], n, "/entries/0"));
    file.matrices.push_back(read_matrix((*entries_it)[1], n, "/entries/1"));
  } else {
    file.matrices.push_back(read_matrix(*entries_it, n, "/entries"));
  }
  return file;
}

std::string to_json(const MatrixFile& file) {
  std::string out = "{\n  \"kind\": \"";
  out += to_string(file.kind);
  out += "\",\n  \"n\": " + std::to_string(file.n()) + ",\n";
  if (file.energy) out += "  \"energy\": " + format_double(*file.energy) + ",\n";
  out += "  \"entries\": ";
  if (file.kind == MatrixKind::boundary_pair) {
    out += "[\n    ";
    append_matrix(out, file.matrices[0], "    ");
    out += ",\n    ";
    append_matrix(out, file.matrices[1], "    ");
    out += "\n  ]";
  } else {
    append_matrix(out, file.matrices[0], "  ");
  }
  out += "\n}\n";
  return out;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_file(buffer.str());
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path.string(), "cannot open file for writing");
  out << to_json(file);
}

}  // namespace qwire
