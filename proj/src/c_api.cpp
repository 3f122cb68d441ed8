#include "pthulthen/pthulthen.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "pthulthen/contour.hpp"
#include "pthulthen/core_math.hpp"
#include "pthulthen/error.hpp"
#include "pthulthen/hulthen.hpp"
#include "pthulthen/poschl_teller.hpp"
#include "pthulthen/verify.hpp"

struct pth_pt_model {
  pth::PTModel model;
};

struct pth_hulthen_model {
  pth::HulthenModel model;
};

struct pth_spectrum {
  std::vector<pth::SpectrumEntry> entries;
};

struct pth_report {
  std::vector<pth::CheckRecord> records;
};

namespace {

thread_local std::string g_last_error;

pth_status set_error(pth_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

pth_status to_status(pth::ErrorKind kind) {
  switch (kind) {
    case pth::ErrorKind::InvalidArgument: return PTH_ERR_INVALID_ARGUMENT;
    case pth::ErrorKind::Pole: return PTH_ERR_POLE;
    case pth::ErrorKind::BranchCut: return PTH_ERR_BRANCH_CUT;
    case pth::ErrorKind::Invertibility: return PTH_ERR_INVERTIBILITY;
    case pth::ErrorKind::DegenerateState: return PTH_ERR_DEGENERATE_STATE;
    case pth::ErrorKind::InversionBranch: return PTH_ERR_INVERSION_BRANCH;
    case pth::ErrorKind::StepTooSmall: return PTH_ERR_STEP_TOO_SMALL;
    case pth::ErrorKind::Consistency: return PTH_ERR_CONSISTENCY;
    case pth::ErrorKind::EigensolverFailure: return PTH_ERR_EIGENSOLVER;
  }
  return PTH_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
pth_status guarded(Body&& body) noexcept {
  try {
    body();
    return PTH_OK;
  } catch (const pth::Error& err) {
    return set_error(to_status(err.kind()), err.what());
  } catch (const std::bad_alloc&) {
    return set_error(PTH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& err) {
    return set_error(PTH_ERR_INTERNAL, err.what());
  } catch (...) {
    return set_error(PTH_ERR_INTERNAL, "unknown exception");
  }
}

pth_status null_pointer(const char* what) {
  return set_error(PTH_ERR_NULL_POINTER, std::string(what) + " is null");
}

void put(pth::Complex z, double* re, double* im) {
  *re = z.real();
  *im = z.imag();
}

pth_spectrum_entry to_c(const pth::SpectrumEntry& e) {
  return {e.qn.n, e.qn.sigma, e.qn.tau, e.kappa, e.energy, e.beta_effective};
}

pth::SpectrumEntry from_c(const pth_spectrum_entry& e) {
  return {{e.n, e.sigma, e.tau}, e.kappa, e.energy, e.beta_effective};
}

}  // namespace

extern "C" {

const char* pth_version(void) { return PTH_VERSION_STRING; }

const char* pth_last_error(void) { return g_last_error.c_str(); }

const char* pth_status_string(pth_status status) {
  switch (status) {
    case PTH_OK: return "ok";
    case PTH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PTH_ERR_NULL_POINTER: return "null pointer";
    case PTH_ERR_POLE: return "pole";
    case PTH_ERR_BRANCH_CUT: return "branch cut";
    case PTH_ERR_INVERTIBILITY: return "non-invertible map";
    case PTH_ERR_DEGENERATE_STATE: return "degenerate state";
    case PTH_ERR_INVERSION_BRANCH: return "inversion branch";
    case PTH_ERR_STEP_TOO_SMALL: return "step too small";
    case PTH_ERR_CONSISTENCY: return "inconsistent couplings";
    case PTH_ERR_EIGENSOLVER: return "eigensolver failure";
    case PTH_ERR_OUT_OF_RANGE: return "index out of range";
    case PTH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

pth_status pth_jacobi_eval(int n, double a_re, double a_im, double b_re,
                           double b_im, double z_re, double z_im,
                           double* out_re, double* out_im) {
  if (!out_re || !out_im) return null_pointer("output");
  return guarded([&] {
    put(pth::jacobi_eval({n, {a_re, a_im}, {b_re, b_im}}, {z_re, z_im}),
        out_re, out_im);
  });
}

pth_status pth_jacobi_deriv(int n, double a_re, double a_im, double b_re,
                            double b_im, double z_re, double z_im, int k,
                            double* out_re, double* out_im) {
  if (!out_re || !out_im) return null_pointer("output");
  return guarded([&] {
    put(pth::jacobi_deriv({n, {a_re, a_im}, {b_re, b_im}}, {z_re, z_im}, k),
        out_re, out_im);
  });
}

pth_status pth_pt_model_create(double alpha, double beta, double epsilon,
                               pth_pt_model** out) {
  if (!out) return null_pointer("output handle");
  *out = nullptr;
  return guarded([&] {
    *out = new pth_pt_model{pth::PTModel(alpha, beta, epsilon)};
  });
}

void pth_pt_model_destroy(pth_pt_model* model) { delete model; }

pth_status pth_pt_potential(const pth_pt_model* model, double r_re,
                            double r_im, double* out_re, double* out_im) {
  if (!model) return null_pointer("model");
  if (!out_re || !out_im) return null_pointer("output");
  return guarded([&] {
    put(pth::potential_W(model->model, {r_re, r_im}), out_re, out_im);
  });
}

pth_status pth_pt_kappa(const pth_pt_model* model, int n, int sigma, int tau,
                        double* out) {
  if (!model) return null_pointer("model");
  if (!out) return null_pointer("output");
  return guarded([&] {
    const pth::QuantumNumbers qn{n, sigma, tau};
    pth::validate(qn);
    *out = pth::kappa_of(model->model, qn);
  });
}

pth_status pth_pt_chi(const pth_pt_model* model, int n, int sigma, int tau,
                      double r_re, double r_im, double* out6) {
  if (!model) return null_pointer("model");
  if (!out6) return null_pointer("output");
  return guarded([&] {
    const pth::WaveValue w =
        pth::chi(model->model, {n, sigma, tau}, {r_re, r_im}, true);
    put(w.value, out6 + 0, out6 + 1);
    put(w.d1, out6 + 2, out6 + 3);
    put(w.d2, out6 + 4, out6 + 5);
  });
}

pth_status pth_pt_spectrum(const pth_pt_model* model, pth_spectrum** out) {
  if (!model) return null_pointer("model");
  if (!out) return null_pointer("output handle");
  *out = nullptr;
  return guarded([&] {
    *out = new pth_spectrum{pth::enumerate_pt_spectrum(model->model)};
  });
}

pth_status pth_hulthen_model_create(double A, double B, double epsilon,
                                    pth_hulthen_model** out) {
  if (!out) return null_pointer("output handle");
  *out = nullptr;
  return guarded([&] {
    *out = new pth_hulthen_model{pth::HulthenModel(A, B, epsilon)};
  });
}

pth_status pth_hulthen_model_from_pt_state(const pth_pt_model* model, int n,
                                           int sigma, int tau,
                                           pth_hulthen_model** out) {
  if (!model) return null_pointer("model");
  if (!out) return null_pointer("output handle");
  *out = nullptr;
  return guarded([&] {
    *out = new pth_hulthen_model{
        pth::hulthen_from_pt_state(model->model, {n, sigma, tau})};
  });
}

void pth_hulthen_model_destroy(pth_hulthen_model* model) { delete model; }

pth_status pth_hulthen_couplings(const pth_hulthen_model* model, double* out4) {
  if (!model) return null_pointer("model");
  if (!out4) return null_pointer("output");
  out4[0] = model->model.A();
  out4[1] = model->model.B();
  out4[2] = model->model.alpha();
  out4[3] = model->model.C();
  return PTH_OK;
}

pth_status pth_hulthen_potential(const pth_hulthen_model* model, double xi_re,
                                 double xi_im, double* out_re, double* out_im) {
  if (!model) return null_pointer("model");
  if (!out_re || !out_im) return null_pointer("output");
  return guarded([&] {
    put(pth::potential_V(model->model, {xi_re, xi_im}), out_re, out_im);
  });
}

pth_status pth_hulthen_state_parameters(const pth_hulthen_model* model,
                                        int sigma, int n, double* t,
                                        double* tau_beta, double* kappa) {
  if (!model) return null_pointer("model");
  if (!t || !tau_beta || !kappa) return null_pointer("output");
  return guarded([&] {
    const pth::StateParameters p = pth::state_parameters(model->model, sigma, n);
    *t = p.t;
    *tau_beta = p.tau_beta;
    *kappa = p.kappa;
  });
}

pth_status pth_hulthen_energy(const pth_hulthen_model* model, int sigma, int n,
                              double* out) {
  if (!model) return null_pointer("model");
  if (!out) return null_pointer("output");
  return guarded([&] { *out = pth::energy(model->model, sigma, n); });
}

pth_status pth_hulthen_spectrum(const pth_hulthen_model* model, int n_cap,
                                pth_spectrum** out) {
  if (!model) return null_pointer("model");
  if (!out) return null_pointer("output handle");
  *out = nullptr;
  return guarded([&] {
    const int cap = n_cap < 0 ? pth::kDefaultNCap : n_cap;
    *out = new pth_spectrum{pth::enumerate_hulthen_spectrum(model->model, cap)};
  });
}

pth_status pth_hulthen_wavefunction(const pth_hulthen_model* model,
                                    const pth_spectrum_entry* entry,
                                    double x_min, double x_max, int count,
                                    pth_wave_sample* out) {
  if (!model) return null_pointer("model");
  if (!entry) return null_pointer("entry");
  if (!out) return null_pointer("output");
  return guarded([&] {
    const std::vector<pth::WaveSample> samples = pth::sample_wavefunction(
        model->model, from_c(*entry), x_min, x_max, count);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const pth::WaveSample& s = samples[i];
      out[i] = {s.x, s.xi.real(), s.xi.imag(), s.psi.real(), s.psi.imag(),
                std::abs(s.psi)};
    }
  });
}

size_t pth_spectrum_size(const pth_spectrum* spectrum) {
  return spectrum ? spectrum->entries.size() : 0;
}

pth_status pth_spectrum_get(const pth_spectrum* spectrum, size_t index,
                            pth_spectrum_entry* out) {
  if (!spectrum) return null_pointer("spectrum");
  if (!out) return null_pointer("output");
  if (index >= spectrum->entries.size()) {
    return set_error(PTH_ERR_OUT_OF_RANGE, "spectrum index out of range");
  }
  *out = to_c(spectrum->entries[index]);
  return PTH_OK;
}

void pth_spectrum_destroy(pth_spectrum* spectrum) { delete spectrum; }

pth_status pth_contour_sample(double epsilon, double x_min, double x_max,
                              int count, pth_contour_point* out) {
  if (!out) return null_pointer("output");
  return guarded([&] {
    const std::vector<pth::ContourPoint> points =
        pth::sample_arch(epsilon, x_min, x_max, count);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const pth::ContourPoint& p = points[i];
      out[i] = {p.x,          p.v,          p.u,         p.xi.real(),
                p.xi.imag(),  p.r.real(),   p.r.imag()};
    }
  });
}

pth_verify_options pth_verify_options_default(void) {
  const pth::VerifyOptions defaults;
  return {defaults.grid.half_width,       defaults.grid.points,
          defaults.convergence_study ? 1 : 0, defaults.pt_residual_points,
          defaults.arch_residual_points,  defaults.identity_points};
}

pth_status pth_verify_run(const pth_pt_model* model,
                          const pth_verify_options* options,
                          pth_report** out) {
  if (!model) return null_pointer("model");
  if (!out) return null_pointer("output handle");
  *out = nullptr;
  return guarded([&] {
    pth::VerifyOptions opts;
    if (options) {
      opts.grid = {options->fd_half_width, options->fd_points};
      opts.convergence_study = options->convergence_study != 0;
      opts.pt_residual_points = options->pt_residual_points;
      opts.arch_residual_points = options->arch_residual_points;
      opts.identity_points = options->identity_points;
    }
    *out = new pth_report{pth::run_verification(model->model, opts)};
  });
}

size_t pth_report_size(const pth_report* report) {
  return report ? report->records.size() : 0;
}

pth_status pth_report_get(const pth_report* report, size_t index,
                          pth_check_record* out) {
  if (!report) return null_pointer("report");
  if (!out) return null_pointer("output");
  if (index >= report->records.size()) {
    return set_error(PTH_ERR_OUT_OF_RANGE, "report index out of range");
  }
  const pth::CheckRecord& r = report->records[index];
  *out = {r.name.c_str(),
          r.target,
          r.found.real(),
          r.found.imag(),
          r.error,
          r.tolerance,
          r.comparison == pth::Comparison::Above ? PTH_ABOVE : PTH_AT_MOST,
          r.passed ? 1 : 0};
  return PTH_OK;
}

int pth_report_all_passed(const pth_report* report) {
  if (!report) return 0;
  for (const pth::CheckRecord& r : report->records) {
    if (!r.passed) return 0;
  }
  return 1;
}

void pth_report_destroy(pth_report* report) { delete report; }

}  // extern "C"
