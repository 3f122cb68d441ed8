/*
 * C interface to the PT-symmetric Poschl-Teller -> Hulthen library.
 *
 * Models, spectra and verification reports are opaque handles created by
 * *_create / producer functions and released with the matching *_destroy.
 * Every fallible call returns a pth_status; on failure, pth_last_error()
 * gives a message for the calling thread until its next failing call.
 *
 * Complex numbers cross the boundary as (re, im) double pairs.
 */
#ifndef PTHULTHEN_H
#define PTHULTHEN_H

#include <stddef.h>

#if defined(PTH_BUILDING_LIBRARY)
#define PTH_API __attribute__((visibility("default")))
#else
#define PTH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pth_status {
  PTH_OK = 0,
  PTH_ERR_INVALID_ARGUMENT = 1,
  PTH_ERR_NULL_POINTER = 2,
  PTH_ERR_POLE = 3,
  PTH_ERR_BRANCH_CUT = 4,
  PTH_ERR_INVERTIBILITY = 5,
  PTH_ERR_DEGENERATE_STATE = 6,
  PTH_ERR_INVERSION_BRANCH = 7,
  PTH_ERR_STEP_TOO_SMALL = 8,
  PTH_ERR_CONSISTENCY = 9,
  PTH_ERR_EIGENSOLVER = 10,
  PTH_ERR_OUT_OF_RANGE = 11,
  PTH_ERR_INTERNAL = 99
} pth_status;

typedef struct pth_pt_model pth_pt_model;
typedef struct pth_hulthen_model pth_hulthen_model;
typedef struct pth_spectrum pth_spectrum;
typedef struct pth_report pth_report;

typedef struct pth_spectrum_entry {
  int n;
  int sigma;
  int tau;
  double kappa;
  double energy;
  double beta_effective;
} pth_spectrum_entry;

typedef struct pth_contour_point {
  double x;
  double v;
  double u;
  double xi_re;
  double xi_im;
  double r_re;
  double r_im;
} pth_contour_point;

typedef struct pth_wave_sample {
  double x;
  double xi_re;
  double xi_im;
  double psi_re;
  double psi_im;
  double psi_abs;
} pth_wave_sample;

typedef struct pth_verify_options {
  double fd_half_width;
  int fd_points;
  int convergence_study; /* nonzero: also solve on the halved spacing */
  int pt_residual_points;
  int arch_residual_points;
  int identity_points;
} pth_verify_options;

typedef enum pth_comparison {
  PTH_AT_MOST = 0, /* passes when error <= tolerance */
  PTH_ABOVE = 1    /* negative control: passes when error > tolerance */
} pth_comparison;

typedef struct pth_check_record {
  const char* name; /* owned by the report */
  double target;
  double found_re;
  double found_im;
  double error;
  double tolerance;
  pth_comparison comparison;
  int passed;
} pth_check_record;

PTH_API const char* pth_version(void);
PTH_API const char* pth_last_error(void);
PTH_API const char* pth_status_string(pth_status status);

/* Jacobi polynomials with complex parameters. */
PTH_API pth_status pth_jacobi_eval(int n, double a_re, double a_im,
                                   double b_re, double b_im, double z_re,
                                   double z_im, double* out_re,
                                   double* out_im);
PTH_API pth_status pth_jacobi_deriv(int n, double a_re, double a_im,
                                    double b_re, double b_im, double z_re,
                                    double z_im, int k, double* out_re,
                                    double* out_im);

/* Shifted-line Poschl-Teller model. */
PTH_API pth_status pth_pt_model_create(double alpha, double beta,
                                       double epsilon, pth_pt_model** out);
PTH_API void pth_pt_model_destroy(pth_pt_model* model);
PTH_API pth_status pth_pt_potential(const pth_pt_model* model, double r_re,
                                    double r_im, double* out_re,
                                    double* out_im);
PTH_API pth_status pth_pt_kappa(const pth_pt_model* model, int n, int sigma,
                                int tau, double* out);
/* out6 receives chi, chi', chi'' as (re, im) pairs. */
PTH_API pth_status pth_pt_chi(const pth_pt_model* model, int n, int sigma,
                              int tau, double r_re, double r_im, double* out6);
PTH_API pth_status pth_pt_spectrum(const pth_pt_model* model,
                                   pth_spectrum** out);

/* Generalized Hulthen model on the arch. */
PTH_API pth_status pth_hulthen_model_create(double A, double B, double epsilon,
                                            pth_hulthen_model** out);
/* Model generated by one bound state of a Poschl-Teller model. */
PTH_API pth_status pth_hulthen_model_from_pt_state(const pth_pt_model* model,
                                                   int n, int sigma, int tau,
                                                   pth_hulthen_model** out);
PTH_API void pth_hulthen_model_destroy(pth_hulthen_model* model);
/* out4 receives A, B, alpha, C. */
PTH_API pth_status pth_hulthen_couplings(const pth_hulthen_model* model,
                                         double* out4);
PTH_API pth_status pth_hulthen_potential(const pth_hulthen_model* model,
                                         double xi_re, double xi_im,
                                         double* out_re, double* out_im);
PTH_API pth_status pth_hulthen_state_parameters(const pth_hulthen_model* model,
                                                int sigma, int n, double* t,
                                                double* tau_beta,
                                                double* kappa);
PTH_API pth_status pth_hulthen_energy(const pth_hulthen_model* model, int sigma,
                                      int n, double* out);
/* n_cap < 0 selects the default search bound. */
PTH_API pth_status pth_hulthen_spectrum(const pth_hulthen_model* model,
                                        int n_cap, pth_spectrum** out);
/* Samples psi along the arch for x in [x_min, x_max]; `out` holds count
 * entries. The square-root branch is tracked continuously from the sample
 * closest to the arch top. */
PTH_API pth_status pth_hulthen_wavefunction(const pth_hulthen_model* model,
                                            const pth_spectrum_entry* entry,
                                            double x_min, double x_max,
                                            int count, pth_wave_sample* out);

/* Spectrum handles. */
PTH_API size_t pth_spectrum_size(const pth_spectrum* spectrum);
PTH_API pth_status pth_spectrum_get(const pth_spectrum* spectrum, size_t index,
                                    pth_spectrum_entry* out);
PTH_API void pth_spectrum_destroy(pth_spectrum* spectrum);

/* Arch contour; `out` holds count entries. */
PTH_API pth_status pth_contour_sample(double epsilon, double x_min,
                                      double x_max, int count,
                                      pth_contour_point* out);

/* Verification suite. */
PTH_API pth_verify_options pth_verify_options_default(void);
PTH_API pth_status pth_verify_run(const pth_pt_model* model,
                                  const pth_verify_options* options,
                                  pth_report** out);
PTH_API size_t pth_report_size(const pth_report* report);
PTH_API pth_status pth_report_get(const pth_report* report, size_t index,
                                  pth_check_record* out);
PTH_API int pth_report_all_passed(const pth_report* report);
PTH_API void pth_report_destroy(pth_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PTHULTHEN_H */
