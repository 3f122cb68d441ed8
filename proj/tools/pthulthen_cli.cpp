// Command-line front end over the C API: spectra, wavefunction and contour
// export, and one-shot verification runs.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pthulthen/pthulthen.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

// Library failure carrying the exit code the CLI should return.
struct CliError {
  int exit_code;
  std::string message;
};

void check(pth_status status, const char* what) {
  if (status == PTH_OK) return;
  const int code = (status == PTH_ERR_INVALID_ARGUMENT) ? kExitUsage : kExitRuntime;
  throw CliError{code, std::string(what) + ": " + pth_status_string(status) +
                           ": " + pth_last_error()};
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string csv_cell(const json& cell) {
  if (cell.is_number_float()) return format_double(cell.get<double>());
  if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  if (cell.is_string()) {
    const std::string text = cell.get<std::string>();
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return cell.dump();
}

// JSON has no NaN/Inf; non-finite values are written as null.
json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

struct Dataset {
  json metadata = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

void write_csv(std::ostream& out, const Dataset& data) {
  out << "#";
  for (const auto& [key, value] : data.metadata.items()) {
    if (value.is_object()) {
      for (const auto& [sub, subvalue] : value.items()) {
        out << ' ' << key << '.' << sub << '=' << csv_cell(subvalue);
      }
    } else {
      out << ' ' << key << '=' << csv_cell(value);
    }
  }
  out << '\n';
  for (std::size_t i = 0; i < data.columns.size(); ++i) {
    out << (i ? "," : "") << data.columns[i];
  }
  out << '\n';
  for (const auto& row : data.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_cell(row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Dataset& data) {
  json doc;
  doc["metadata"] = data.metadata;
  json records = json::array();
  for (const auto& row : data.rows) {
    json record = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      record[data.columns[i]] =
          row[i].is_number_float() ? number(row[i].get<double>()) : row[i];
    }
    records.push_back(std::move(record));
  }
  doc["records"] = std::move(records);
  out << doc.dump(2) << '\n';
}

struct OutputOptions {
  std::string format = "json";
  std::string path = "-";
};

void emit(const Dataset& data, const OutputOptions& output) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (output.path != "-") {
    file.open(output.path, std::ios::out | std::ios::trunc);
    if (!file) {
      throw CliError{kExitUsage, "cannot open output path '" + output.path + "'"};
    }
    out = &file;
  }
  if (output.format == "csv") {
    write_csv(*out, data);
  } else {
    write_json(*out, data);
  }
  out->flush();
  if (!*out) throw CliError{kExitUsage, "failed writing '" + output.path + "'"};
}

// RAII owners for C handles.
template <typename T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(ptr); }
};
using PtModel = Handle<pth_pt_model, pth_pt_model_destroy>;
using HulthenModel = Handle<pth_hulthen_model, pth_hulthen_model_destroy>;
using Spectrum = Handle<pth_spectrum, pth_spectrum_destroy>;
using Report = Handle<pth_report, pth_report_destroy>;

std::vector<pth_spectrum_entry> entries_of(const pth_spectrum* spectrum) {
  std::vector<pth_spectrum_entry> entries(pth_spectrum_size(spectrum));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    check(pth_spectrum_get(spectrum, i, &entries[i]), "spectrum");
  }
  return entries;
}

json base_metadata(const std::string& command) {
  json meta;
  meta["command"] = command;
  meta["version"] = pth_version();
  return meta;
}

struct PtParams {
  double alpha = 0.0;
  double beta = 0.0;
  double epsilon = 0.3;
};

struct HulthenParams {
  double A = 0.0;
  double B = 0.0;
  double epsilon = 0.3;
};

struct GridParams {
  double x_min = -5.0;
  double x_max = 5.0;
  int count = 101;
};

json hulthen_model_metadata(const HulthenParams& p, const pth_hulthen_model* model) {
  double couplings[4];
  check(pth_hulthen_couplings(model, couplings), "couplings");
  return json{{"A", p.A}, {"B", p.B}, {"epsilon", p.epsilon},
              {"alpha", couplings[2]}, {"C", couplings[3]}};
}

int run_spectrum_pt(const PtParams& p, const OutputOptions& output) {
  PtModel model;
  check(pth_pt_model_create(p.alpha, p.beta, p.epsilon, &model.ptr), "model");
  Spectrum spectrum;
  check(pth_pt_spectrum(model.ptr, &spectrum.ptr), "spectrum");

  Dataset data;
  data.metadata = base_metadata("spectrum-pt");
  data.metadata["model"] = {{"alpha", p.alpha}, {"beta", p.beta}, {"epsilon", p.epsilon}};
  data.columns = {"sigma", "tau", "n", "kappa", "energy", "beta_effective"};
  for (const pth_spectrum_entry& e : entries_of(spectrum.ptr)) {
    data.rows.push_back({e.sigma, e.tau, e.n, e.kappa, e.energy, e.beta_effective});
  }
  emit(data, output);
  std::clog << "spectrum-pt: " << data.rows.size() << " bound states\n";
  return kExitOk;
}

int run_spectrum_hulthen(const HulthenParams& p, int n_cap,
                         const OutputOptions& output) {
  HulthenModel model;
  check(pth_hulthen_model_create(p.A, p.B, p.epsilon, &model.ptr), "model");
  Spectrum spectrum;
  check(pth_hulthen_spectrum(model.ptr, n_cap, &spectrum.ptr), "spectrum");

  Dataset data;
  data.metadata = base_metadata("spectrum-hulthen");
  data.metadata["model"] = hulthen_model_metadata(p, model.ptr);
  data.metadata["search"] = {{"n_cap", n_cap}};
  data.columns = {"sigma", "tau", "n", "kappa", "energy", "beta_effective", "tau_beta"};
  for (const pth_spectrum_entry& e : entries_of(spectrum.ptr)) {
    data.rows.push_back({e.sigma, e.tau, e.n, e.kappa, e.energy,
                         e.beta_effective, e.beta_effective});
  }
  emit(data, output);
  std::clog << "spectrum-hulthen: " << data.rows.size() << " bound states\n";
  return kExitOk;
}

int run_wavefunction(const HulthenParams& p, std::optional<int> sigma,
                     std::optional<int> n, const GridParams& grid,
                     const OutputOptions& output) {
  HulthenModel model;
  check(pth_hulthen_model_create(p.A, p.B, p.epsilon, &model.ptr), "model");
  Spectrum spectrum;
  check(pth_hulthen_spectrum(model.ptr, -1, &spectrum.ptr), "spectrum");
  const std::vector<pth_spectrum_entry> entries = entries_of(spectrum.ptr);
  if (entries.empty()) {
    throw CliError{kExitUsage, "wavefunction: the model has no admissible state"};
  }
  const pth_spectrum_entry* chosen = nullptr;
  for (const pth_spectrum_entry& e : entries) {
    if ((!sigma || e.sigma == *sigma) && (!n || e.n == *n)) {
      chosen = &e;
      break;
    }
  }
  if (!chosen) {
    throw CliError{kExitUsage, "wavefunction: no admissible state matches --sigma/--n"};
  }
  if (grid.count < 2) throw CliError{kExitUsage, "--count must be >= 2"};
  std::vector<pth_wave_sample> samples(static_cast<std::size_t>(grid.count));
  check(pth_hulthen_wavefunction(model.ptr, chosen, grid.x_min, grid.x_max,
                                 grid.count, samples.data()),
        "wavefunction");

  Dataset data;
  data.metadata = base_metadata("wavefunction");
  data.metadata["model"] = hulthen_model_metadata(p, model.ptr);
  data.metadata["state"] = {{"sigma", chosen->sigma}, {"n", chosen->n},
                            {"kappa", chosen->kappa}, {"energy", chosen->energy},
                            {"tau_beta", chosen->beta_effective}};
  data.metadata["grid"] = {{"x_min", grid.x_min}, {"x_max", grid.x_max},
                           {"count", grid.count}};
  data.columns = {"x", "re_xi", "im_xi", "re_psi", "im_psi", "abs_psi"};
  for (const pth_wave_sample& s : samples) {
    data.rows.push_back({s.x, s.xi_re, s.xi_im, s.psi_re, s.psi_im, s.psi_abs});
  }
  emit(data, output);
  return kExitOk;
}

int run_contour(double epsilon, const GridParams& grid, const OutputOptions& output) {
  if (grid.count < 2) throw CliError{kExitUsage, "--count must be >= 2"};
  std::vector<pth_contour_point> points(static_cast<std::size_t>(grid.count));
  check(pth_contour_sample(epsilon, grid.x_min, grid.x_max, grid.count,
                           points.data()),
        "contour");
  Dataset data;
  data.metadata = base_metadata("contour");
  data.metadata["model"] = {{"epsilon", epsilon}};
  data.metadata["grid"] = {{"x_min", grid.x_min}, {"x_max", grid.x_max},
                           {"count", grid.count}};
  data.columns = {"x", "v", "u", "re_r", "im_r"};
  for (const pth_contour_point& p : points) {
    data.rows.push_back({p.x, p.v, p.u, p.r_re, p.r_im});
  }
  emit(data, output);
  return kExitOk;
}

int run_verify(const PtParams& p, const pth_verify_options& options,
               const OutputOptions& output) {
  PtModel model;
  check(pth_pt_model_create(p.alpha, p.beta, p.epsilon, &model.ptr), "model");
  Report report;
  check(pth_verify_run(model.ptr, &options, &report.ptr), "verify");

  Dataset data;
  data.metadata = base_metadata("verify");
  data.metadata["model"] = {{"alpha", p.alpha}, {"beta", p.beta}, {"epsilon", p.epsilon}};
  data.metadata["grid"] = {{"L", options.fd_half_width}, {"N", options.fd_points}};
  data.columns = {"name", "target", "found_re", "found_im", "error",
                  "tolerance", "comparison", "pass"};
  const std::size_t size = pth_report_size(report.ptr);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < size; ++i) {
    pth_check_record r;
    check(pth_report_get(report.ptr, i, &r), "report");
    if (!r.passed) {
      ++failures;
      std::clog << "verify: FAIL " << r.name << " error=" << format_double(r.error)
                << " tolerance=" << format_double(r.tolerance) << '\n';
    }
    data.rows.push_back({r.name, r.target, r.found_re, r.found_im, r.error,
                         r.tolerance, r.comparison == PTH_ABOVE ? ">" : "<=",
                         r.passed != 0});
  }
  emit(data, output);
  std::clog << "verify: " << (size - failures) << "/" << size << " checks passed\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PT-symmetric Poschl-Teller / Hulthen spectra, contours and checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pth_version()));

  const CLI::Validator epsilon_check(
      [](std::string& text) -> std::string {
        double value = 0.0;
        try {
          value = std::stod(text);
        } catch (const std::exception&) {
          return "epsilon must be a number";
        }
        if (value > 0.0 && value < 0.5 * std::numbers::pi) return {};
        return "epsilon must lie in the open interval (0, pi/2)";
      },
      "(0, pi/2)");

  OutputOptions output;
  const auto add_output = [&output](CLI::App* cmd) {
    cmd->add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", output.path, "Output file ('-' for stdout)")
        ->capture_default_str();
  };

  PtParams pt;
  HulthenParams hulthen;
  GridParams grid;
  int n_cap = 64;
  std::optional<int> sigma;
  std::optional<int> level;
  pth_verify_options verify_options = pth_verify_options_default();
  bool no_convergence = false;

  auto* spectrum_pt = app.add_subcommand("spectrum-pt", "Poschl-Teller bound states");
  spectrum_pt->add_option("--alpha", pt.alpha)->required()->check(CLI::NonNegativeNumber);
  spectrum_pt->add_option("--beta", pt.beta)->required()->check(CLI::NonNegativeNumber);
  spectrum_pt->add_option("--epsilon", pt.epsilon)->check(epsilon_check)->capture_default_str();
  add_output(spectrum_pt);

  auto* spectrum_h = app.add_subcommand("spectrum-hulthen", "Hulthen bound states");
  spectrum_h->add_option("--A", hulthen.A, "Coupling of (1 - e^{2i xi})^-2, <= 1")
      ->required()
      ->check(CLI::Range(-1e300, 1.0));
  spectrum_h->add_option("--B", hulthen.B, "Coupling of (1 - e^{2i xi})^-1")->required();
  spectrum_h->add_option("--epsilon", hulthen.epsilon)->check(epsilon_check)->capture_default_str();
  spectrum_h->add_option("--n-cap", n_cap, "Largest n searched")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output(spectrum_h);

  auto* wave = app.add_subcommand("wavefunction", "Hulthen wavefunction along the arch");
  wave->add_option("--A", hulthen.A)->required()->check(CLI::Range(-1e300, 1.0));
  wave->add_option("--B", hulthen.B)->required();
  wave->add_option("--epsilon", hulthen.epsilon)->check(epsilon_check)->capture_default_str();
  wave->add_option("--sigma", sigma, "Parity of the state (default: ground state)")
      ->check(CLI::IsMember({-1, 1}));
  wave->add_option("--n", level, "Level index of the state")->check(CLI::NonNegativeNumber);
  wave->add_option("--x-min", grid.x_min)->capture_default_str();
  wave->add_option("--x-max", grid.x_max)->capture_default_str();
  wave->add_option("--count", grid.count)->check(CLI::Range(2, 10000000))->capture_default_str();
  add_output(wave);

  double contour_epsilon = 0.3;
  auto* contour = app.add_subcommand("contour", "Sample the arch xi(x)");
  contour->add_option("--epsilon", contour_epsilon)->check(epsilon_check)->capture_default_str();
  contour->add_option("--x-min", grid.x_min)->capture_default_str();
  contour->add_option("--x-max", grid.x_max)->capture_default_str();
  contour->add_option("--count", grid.count)->check(CLI::Range(2, 10000000))->capture_default_str();
  add_output(contour);

  auto* verify = app.add_subcommand("verify", "Run the numerical oracle suite");
  verify->add_option("--alpha", pt.alpha)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--beta", pt.beta)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--epsilon", pt.epsilon)->check(epsilon_check)->capture_default_str();
  verify->add_option("--L", verify_options.fd_half_width, "Box half width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--N", verify_options.fd_points, "Interior grid points")
      ->check(CLI::Range(100, 1000000))
      ->capture_default_str();
  verify->add_flag("--no-convergence", no_convergence,
                   "Skip the halved-spacing convergence solve");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum_pt) return run_spectrum_pt(pt, output);
    if (*spectrum_h) return run_spectrum_hulthen(hulthen, n_cap, output);
    if (*wave) {
      if (!(grid.x_min < grid.x_max)) throw CliError{kExitUsage, "--x-min must be below --x-max"};
      return run_wavefunction(hulthen, sigma, level, grid, output);
    }
    if (*contour) {
      if (!(grid.x_min < grid.x_max)) throw CliError{kExitUsage, "--x-min must be below --x-max"};
      return run_contour(contour_epsilon, grid, output);
    }
    if (*verify) {
      verify_options.convergence_study = no_convergence ? 0 : 1;
      return run_verify(pt, verify_options, output);
    }
  } catch (const CliError& err) {
    std::cerr << "error: " << err.message << '\n';
    return err.exit_code;
  }
  return kExitUsage;
}
