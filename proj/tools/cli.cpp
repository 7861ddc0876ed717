#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "qwire/boundary.hpp"
#include "qwire/gates.hpp"
#include "qwire/io.hpp"
#include "qwire/linalg.hpp"
#include "qwire/phase_recovery.hpp"
#include "qwire/smatrix.hpp"
#include "qwire/von_neumann.hpp"

namespace qwire::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string json_string(std::string_view s) { return "\"" + std::string(s) + "\""; }

std::string json_bool(bool b) { return b ? "true" : "false"; }

int cmd_validate(const std::string& path, std::ostream& out) {
  const auto bc = read_matrix_file(path).boundary_condition();
  const auto report = validate(bc);
  out << "rank " << report.rank_found << " of " << report.rank_required
      << " required: " << (report.rank_ok ? "ok" : "FAILED") << "\n";
  out << "hermiticity residual " << format_double(report.hermiticity_residual)
      << ": " << (report.hermiticity_ok ? "ok" : "FAILED") << "\n";
  out << (report.valid() ? "valid" : "invalid") << "\n";
  return report.valid() ? kSuccess : kDomainViolation;
}

int cmd_scatter(const std::string& path, double energy, std::ostream& out) {
  const Energy e{energy};
  const auto bc = read_matrix_file(path).boundary_condition();
  require_valid(bc);
  out << to_json(MatrixFile::from(scatter(bc, e)));
  return kSuccess;
}

int cmd_design(const std::string& path, double energy, std::ostream& out) {
  const Energy e0{energy};
  const auto file = read_matrix_file(path);
  if (file.kind == MatrixKind::boundary_pair) {
    throw FormatError("/kind", "expected \"unitary\" or \"smatrix\"");
  }
  if (file.energy && *file.energy != energy) {
    throw UsageError("--energy " + format_double(energy) +
                     " disagrees with the file's energy " + format_double(*file.energy));
  }
  out << to_json(MatrixFile::from(design(file.matrices.front(), e0)));
  return kSuccess;
}

int cmd_gate(const std::string& name, double energy, std::ostream& out) {
  out << to_json(MatrixFile::from(gate_by_name(name, Energy{energy})));
  return kSuccess;
}

int cmd_propagate(const std::string& path, double energy, std::ostream& out) {
  const Energy e{energy};
  const auto s0 = read_matrix_file(path).scattering_matrix();
  out << to_json(MatrixFile::from(propagate(s0, e)));
  return kSuccess;
}

int cmd_decompose(const std::string& path, std::optional<double> energy,
                  std::vector<double> samples, double tol, std::ostream& out) {
  const auto bc = read_matrix_file(path).boundary_condition();
  require_valid(bc);
  if (samples.empty()) {
    if (!energy) throw UsageError("decompose needs --energy or --samples");
    samples = default_block_samples(Energy{*energy});
  }
  for (double s : samples) static_cast<void>(Energy{s});
  const auto blocks = block_decompose(bc, samples, tol);
  out << "{\n  \"count\": " << blocks.count() << ",\n  \"blocks\": [";
  for (std::size_t b = 0; b < blocks.count(); ++b) {
    out << (b ? ", [" : "[");
    for (std::size_t k = 0; k < blocks.blocks[b].size(); ++k) {
      out << (k ? ", " : "") << blocks.blocks[b][k];
    }
    out << "]";
  }
  out << "],\n  \"samples\": [";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    out << (k ? ", " : "") << format_double(samples[k]);
  }
  out << "]\n}\n";
  return kSuccess;
}

int cmd_consistency(const std::vector<std::string>& paths, std::ostream& out) {
  std::vector<ScatteringMatrix> family;
  for (const auto& p : paths) family.push_back(read_matrix_file(p).scattering_matrix());
  const auto report = family_consistency(family);
  out << "{\n  \"max_residual\": " << format_double(report.max_residual)
      << ",\n  \"consistent\": " << json_bool(report.consistent) << "\n}\n";
  return report.consistent ? kSuccess : kDomainViolation;
}

std::string report_json(const PhaseRecoveryReport& report) {
  const auto n = report.recovered.rows();
  std::string s = "{\n  \"energy\": " + format_double(report.energy.value()) +
                  ",\n  \"oracle_calls\": " + std::to_string(report.oracle_calls) +
                  ",\n  \"unitarity_residual\": " +
                  format_double(report.unitarity_residual) + ",\n";
  if (report.max_entry_error) {
    s += "  \"max_entry_error\": " + format_double(*report.max_entry_error) + ",\n";
  }
  s += "  \"methods\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    s += "    [";
    for (std::size_t j = 0; j < n; ++j) {
      s += (j ? ", " : "") + json_string(to_string(report.method(i, j)));
    }
    s += i + 1 < n ? "],\n" : "]\n";
  }
  s += "  ],\n  \"recovered\": " + matrix_to_json(report.recovered) + "\n}\n";
  return s;
}

int cmd_recover(const std::optional<std::string>& path, std::optional<std::size_t> random_n,
                std::uint64_t seed, std::optional<double> energy,
                const std::optional<std::string>& report_path, std::ostream& out,
                std::ostream& err) {
  if (path.has_value() == random_n.has_value()) {
    throw UsageError("recover needs exactly one of <path> or --random N");
  }
  std::optional<ScatteringMatrix> hidden;
  if (path) {
    hidden = read_matrix_file(*path).scattering_matrix();
  } else {
    if (!energy) throw UsageError("recover --random needs --energy");
    if (*random_n == 0) throw UsageError("--random must be positive");
    hidden = ScatteringMatrix(haar_random_unitary(*random_n, seed), Energy{*energy});
  }
  AmplitudeOracle oracle(*hidden);
  auto report = recover_full(oracle);
  score_against(report, *hidden);

  out << to_json(MatrixFile{MatrixKind::smatrix, {report.recovered}, report.energy.value()});
  err << "oracle calls: " << report.oracle_calls << "\n"
      << "max entry error: " << format_double(*report.max_entry_error) << "\n";
  if (report_path) {
    std::ofstream file(*report_path, std::ios::binary);
    if (!file) throw UsageError("cannot write report to " + *report_path);
    file << report_json(report);
  }
  return kSuccess;
}

int cmd_vn(const std::string& path, const std::string& direction,
           std::optional<double> energy, std::ostream& out) {
  const auto file = read_matrix_file(path);
  if (direction == "to-w") {
    if (file.kind == MatrixKind::boundary_pair) {
      const auto bc = file.boundary_condition();
      require_valid(bc);
      out << to_json(MatrixFile::unitary(w_from_bc(bc).matrix()));
      return kSuccess;
    }
    if (file.kind != MatrixKind::smatrix) {
      throw FormatError("/kind", "to-w expects \"smatrix\" or \"boundary_pair\"");
    }
    if (energy && *energy != *file.energy) {
      throw UsageError("--energy disagrees with the file's energy");
    }
    out << to_json(MatrixFile::unitary(w_from_s(file.scattering_matrix()).matrix()));
    return kSuccess;
  }
  // from-w
  if (file.kind != MatrixKind::unitary) {
    throw FormatError("/kind", "from-w expects \"unitary\"");
  }
  const VonNeumannParam w(file.matrices.front());
  if (energy) {
    out << to_json(MatrixFile::from(s_from_w(w, Energy{*energy})));
  } else {
    out << to_json(MatrixFile::from(bc_from_w(w)));
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-vertex quantum wire scattering toolkit", "qwire"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string path;
  double energy = 0.0;
  std::optional<double> opt_energy;

  auto* validate_cmd = app.add_subcommand("validate", "check a boundary_pair file");
  validate_cmd->add_option("path", path, "boundary_pair file")->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(path, out); }; });

  auto* scatter_cmd = app.add_subcommand("scatter", "S-matrix of a vertex at energy E");
  scatter_cmd->add_option("path", path, "boundary_pair file")->required();
  scatter_cmd->add_option("--energy", energy, "energy E > 0")->required();
  scatter_cmd->callback([&] { action = [&] { return cmd_scatter(path, energy, out); }; });

  auto* design_cmd = app.add_subcommand("design", "boundary condition realising a unitary");
  design_cmd->add_option("path", path, "unitary or smatrix file")->required();
  design_cmd->add_option("--energy", energy, "design energy E0 > 0")->required();
  design_cmd->callback([&] { action = [&] { return cmd_design(path, energy, out); }; });

  std::string gate_name;
  auto* gate_cmd = app.add_subcommand("gate", "boundary condition of a named gate");
  gate_cmd->add_option("name", gate_name, "hadamard | cnot | phase:<angle>")->required();
  gate_cmd->add_option("--energy", energy, "design energy E0 > 0")->required();
  gate_cmd->callback([&] { action = [&] { return cmd_gate(gate_name, energy, out); }; });

  auto* propagate_cmd = app.add_subcommand("propagate", "move an S-matrix to another energy");
  propagate_cmd->add_option("path", path, "smatrix file")->required();
  propagate_cmd->add_option("--to", energy, "target energy E > 0")->required();
  propagate_cmd->callback([&] { action = [&] { return cmd_propagate(path, energy, out); }; });

  std::vector<double> samples;
  double tol = kBlockTolerance;
  auto* decompose_cmd = app.add_subcommand("decompose", "maximal block decomposition");
  decompose_cmd->add_option("path", path, "boundary_pair file")->required();
  decompose_cmd->add_option("--energy", opt_energy, "E0 for the default samples");
  decompose_cmd->add_option("--samples", samples, "explicit sample energies")->delimiter(',');
  decompose_cmd->add_option("--tol", tol, "coupling threshold");
  decompose_cmd->callback([&] {
    action = [&] { return cmd_decompose(path, opt_energy, samples, tol, out); };
  });

  std::vector<std::string> family_paths;
  auto* consistency_cmd =
      app.add_subcommand("consistency", "test whether S-matrices come from one vertex");
  consistency_cmd->add_option("paths", family_paths, "smatrix files")->required();
  consistency_cmd->callback(
      [&] { action = [&] { return cmd_consistency(family_paths, out); }; });

  std::optional<std::string> recover_path;
  std::optional<std::size_t> random_n;
  std::uint64_t seed = 0;
  std::optional<std::string> report_path;
  auto* recover_cmd =
      app.add_subcommand("recover", "recover phases from magnitude-only measurements");
  recover_cmd->add_option("path", recover_path, "smatrix file holding the hidden truth");
  recover_cmd->add_option("--random", random_n, "use a Haar-random hidden N x N unitary");
  recover_cmd->add_option("--seed", seed, "seed for --random");
  recover_cmd->add_option("--energy", opt_energy, "energy for --random");
  recover_cmd->add_option("--report", report_path, "write the recovery report here");
  recover_cmd->callback([&] {
    action = [&] {
      return cmd_recover(recover_path, random_n, seed, opt_energy, report_path, out, err);
    };
  });

  std::string direction;
  auto* vn_cmd = app.add_subcommand("vn", "convert to and from the von Neumann unitary W");
  vn_cmd->add_option("path", path, "input file")->required();
  vn_cmd->add_option("--direction", direction, "to-w | from-w")
      ->required()
      ->check(CLI::IsMember({"to-w", "from-w"}));
  vn_cmd->add_option("--energy", opt_energy, "energy for from-w (omit for a boundary pair)");
  vn_cmd->callback([&] { action = [&] { return cmd_vn(path, direction, opt_energy, out); }; });

  std::vector<std::string> argv_storage{"qwire"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    return action();
  } catch (const FormatError& e) {
    err << "error: parse failure at " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainViolation;
  }
}

}  // namespace qwire::cli
