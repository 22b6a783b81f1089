/* Excitons and polaritons of two atom chains beside a nanofiber: C interface.
 *
 * Units: energies in eV, lengths in Angstrom, wave numbers in 1/Angstrom,
 * dipoles in e*Angstrom, angles in radians.
 *
 * Every fallible call returns nfx_status. On failure nfx_last_error() holds a
 * message for the calling thread until its next failing call. Handles are
 * immutable after creation and may be shared across threads.
 */
#ifndef NFX_NFX_H
#define NFX_NFX_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(NFX_BUILDING)
#    define NFX_API __declspec(dllexport)
#  else
#    define NFX_API __declspec(dllimport)
#  endif
#else
#  define NFX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nfx_status {
    NFX_OK = 0,
    NFX_ERR_INVALID_ARGUMENT = 1,
    NFX_ERR_PARSE = 2,
    NFX_ERR_CONSTRAINT = 3,
    NFX_ERR_DOMAIN = 4,
    NFX_ERR_NONCONVERGENCE = 5,
    NFX_ERR_ROOT_NOT_FOUND = 6,
    NFX_ERR_POLE = 7,
    NFX_ERR_IO = 8,
    NFX_ERR_INTERNAL = 9
} nfx_status;

typedef enum nfx_method {
    NFX_METHOD_DIRECT = 0,
    NFX_METHOD_BESSEL = 1,
    NFX_METHOD_ASYMPTOTIC = 2,
    NFX_METHOD_LONG_WAVELENGTH = 3
} nfx_method;

typedef enum nfx_label { NFX_SYMMETRIC = 0, NFX_ANTISYMMETRIC = 1 } nfx_label;
typedef enum nfx_branch { NFX_UPPER = 0, NFX_LOWER = 1 } nfx_branch;

typedef struct nfx_params nfx_params;
typedef struct nfx_spectrum nfx_spectrum;
typedef struct nfx_validation nfx_validation;

typedef struct nfx_coupling {
    double value;
    double imag;
    double est_error;
    int regime_ok;
} nfx_coupling;

typedef struct nfx_exciton {
    double k;
    double theta;
    double energy;
    double shift;   /* energy - E_A */
    double damping;
} nfx_exciton;

typedef struct nfx_polariton {
    double k;
    double theta;
    double omega_plus;
    double omega_minus;
    double X2_plus, Y2_plus;
    double X2_minus, Y2_minus;
    double gamma_plus;
    double gamma_minus;
    double delta;
    double coupling;
    double photon_energy;
    double exciton_symmetric;
    double exciton_antisymmetric;
    double gamma_ex_s;
    double shift_plus;   /* omega_plus - E_A */
    double shift_minus;  /* omega_minus - E_A */
} nfx_polariton;

typedef struct nfx_spectrum_row {
    double omega;
    double R, T, A;
} nfx_spectrum_row;

typedef struct nfx_peak {
    nfx_branch branch;
    double omega;
    double T;
    double fwhm;
} nfx_peak;

typedef struct nfx_dip {
    double omega;
    double T;
} nfx_dip;

typedef struct nfx_check {
    const char* name;    /* valid while the validation handle lives */
    double measured;
    double expected;
    double tolerance;
    int passed;
    const char* detail;
} nfx_check;

typedef struct nfx_validation_options {
    const int* n_sites;  /* NULL selects {32} */
    size_t n_count;
    double hbar_c_scale; /* 0 or 1 keeps the physical value; a test hook */
} nfx_validation_options;

NFX_API const char* nfx_version(void);
NFX_API const char* nfx_last_error(void);
NFX_API const char* nfx_status_string(nfx_status status);

/* Parameters. String outputs follow the snprintf convention: *needed gets the
 * length without the terminator, and buf is written only when cap suffices. */
NFX_API nfx_status nfx_params_default(nfx_params** out);
NFX_API nfx_status nfx_params_from_json(const char* text, nfx_params** out);
NFX_API nfx_status nfx_params_with(const nfx_params* params, const char* key, double value, nfx_params** out);
NFX_API void nfx_params_free(nfx_params* params);
NFX_API nfx_status nfx_params_get(const nfx_params* params, const char* key, double* out);
NFX_API nfx_status nfx_params_to_json(const nfx_params* params, char* buf, size_t cap, size_t* needed);
/* Comma-separated keys that were absent from the JSON and took defaults. */
NFX_API nfx_status nfx_params_defaulted_keys(const nfx_params* params, char* buf, size_t cap, size_t* needed);
NFX_API size_t nfx_config_key_count(void);
NFX_API const char* nfx_config_key(size_t index);

/* Lattice sums. The dipole of params is used as given. */
NFX_API nfx_status nfx_intra_coupling(const nfx_params* params, double k, nfx_method method, nfx_coupling* out);
NFX_API nfx_status nfx_inter_coupling(const nfx_params* params, double k, nfx_method method, nfx_coupling* out);
NFX_API nfx_status nfx_s_function(const nfx_params* params, double k, nfx_method method, nfx_coupling* out);

/* Excitons, with an in-plane dipole at angle theta. */
NFX_API nfx_status nfx_exciton_branch(const nfx_params* params, double k, double theta, nfx_label label,
                                      nfx_method method, nfx_exciton* out);
NFX_API nfx_status nfx_exciton_damping(const nfx_params* params, double k, double theta, nfx_label label,
                                       double* out);
NFX_API nfx_status nfx_single_atom_damping(const nfx_params* params, double* out);
NFX_API nfx_status nfx_critical_wavenumber(const nfx_params* params, double theta, nfx_method method, double* out);

/* Fiber photon and polaritons. */
NFX_API nfx_status nfx_photon_energy(const nfx_params* params, double k, double* out);
NFX_API nfx_status nfx_coupling_strength(const nfx_params* params, double k, double* out);
NFX_API nfx_status nfx_polariton_point(const nfx_params* params, double k, double theta, nfx_method method,
                                       nfx_polariton* out);

/* Spectra. gamma is the edge-coupling bandwidth hbar gamma in eV. */
NFX_API nfx_status nfx_spectrum_sweep(const nfx_params* params, double k, double theta, double gamma,
                                      double omega_lo, double omega_hi, int n_points, nfx_spectrum** out);
NFX_API nfx_status nfx_default_window(const nfx_params* params, double k, double theta, double gamma,
                                      double* omega_lo, double* omega_hi);
/* Figures 4..9: wave number, bandwidth and probe window of the preset. */
NFX_API nfx_status nfx_figure_preset(const nfx_params* params, int figure, double theta, double* k, double* gamma,
                                     double* omega_lo, double* omega_hi);
NFX_API void nfx_spectrum_free(nfx_spectrum* spectrum);
NFX_API size_t nfx_spectrum_size(const nfx_spectrum* spectrum);
NFX_API nfx_status nfx_spectrum_row_at(const nfx_spectrum* spectrum, size_t index, nfx_spectrum_row* out);
NFX_API size_t nfx_spectrum_peak_count(const nfx_spectrum* spectrum);
NFX_API nfx_status nfx_spectrum_peak_at(const nfx_spectrum* spectrum, size_t index, nfx_peak* out);
NFX_API size_t nfx_spectrum_dip_count(const nfx_spectrum* spectrum);
NFX_API nfx_status nfx_spectrum_dip_at(const nfx_spectrum* spectrum, size_t index, nfx_dip* out);
NFX_API int nfx_spectrum_band_count(const nfx_spectrum* spectrum);
NFX_API nfx_status nfx_spectrum_polariton(const nfx_spectrum* spectrum, nfx_polariton* out);
NFX_API size_t nfx_spectrum_diagnostic_count(const nfx_spectrum* spectrum);
NFX_API const char* nfx_spectrum_diagnostic(const nfx_spectrum* spectrum, size_t index);

/* Validation: finite-lattice oracle, method agreement and golden line widths. */
NFX_API nfx_status nfx_validate(const nfx_params* params, const nfx_validation_options* options,
                                nfx_validation** out);
NFX_API void nfx_validation_free(nfx_validation* validation);
NFX_API int nfx_validation_passed(const nfx_validation* validation);
NFX_API size_t nfx_validation_check_count(const nfx_validation* validation);
NFX_API nfx_status nfx_validation_check_at(const nfx_validation* validation, size_t index, nfx_check* out);
NFX_API nfx_status nfx_validation_to_json(const nfx_validation* validation, char* buf, size_t cap, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* NFX_NFX_H */
