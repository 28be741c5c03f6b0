#ifndef PTSCARF_PTSCARF_H
#define PTSCARF_PTSCARF_H

#include <stddef.h>

#if defined(PTSCARF_BUILDING_LIBRARY)
#define PTSCARF_API __attribute__((visibility("default")))
#else
#define PTSCARF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Complex Scarf II model: couplings, quasi-parity sectors, SUSY partners and
 * grid verification. Every fallible call returns a status; on failure the
 * message is available from ptscarf_last_error() on the same thread. */

typedef enum ptscarf_status {
  PTSCARF_OK = 0,
  PTSCARF_INVALID_ARGUMENT = 1,
  PTSCARF_OUT_OF_RANGE = 2, /* non-normalizable level requested */
  PTSCARF_BRANCH_CUT = 3,   /* principal branch discontinuous on the shifted axis */
  PTSCARF_NUMERICAL = 4,    /* eigensolver or iteration failure */
  PTSCARF_INTERNAL = 5
} ptscarf_status;

typedef enum ptscarf_format { PTSCARF_FORMAT_JSON = 0, PTSCARF_FORMAT_CSV = 1 } ptscarf_format;

typedef struct ptscarf_complex {
  double re;
  double im;
} ptscarf_complex;

typedef struct ptscarf_model ptscarf_model;
/* Named output files produced by a run: name relative to an output
 * directory plus full content. */
typedef struct ptscarf_documents ptscarf_documents;

PTSCARF_API const char* ptscarf_version(void);
PTSCARF_API const char* ptscarf_last_error(void);
PTSCARF_API const char* ptscarf_status_name(ptscarf_status status);

/* |axis_shift| < pi/2. The grid defaults to [-14, 14], 1601 points, order 4. */
PTSCARF_API ptscarf_status ptscarf_model_create(ptscarf_complex alpha, ptscarf_complex beta,
                                                double axis_shift, ptscarf_model** out);
PTSCARF_API void ptscarf_model_destroy(ptscarf_model* model);
/* n_points is rounded up to odd; stencil_order is 2 or 4. */
PTSCARF_API ptscarf_status ptscarf_model_set_grid(ptscarf_model* model, double x_min, double x_max,
                                                  int n_points, int stencil_order);
PTSCARF_API ptscarf_status ptscarf_model_get_grid(const ptscarf_model* model, double* x_min,
                                                  double* x_max, int* n_points,
                                                  int* stencil_order);
/* One of Hermitian, PTUnbroken, PTBroken, NoBoundStates, General. The string
 * is static. */
PTSCARF_API ptscarf_status ptscarf_phase(const ptscarf_model* model, const char** name);

/* q is +1 or -1 throughout. */
PTSCARF_API ptscarf_status ptscarf_energy(const ptscarf_model* model, int q, int n,
                                          ptscarf_complex* out);
PTSCARF_API ptscarf_status ptscarf_max_level(const ptscarf_model* model, int q, int* out);
PTSCARF_API ptscarf_status ptscarf_potential(const ptscarf_model* model, double x,
                                             ptscarf_complex* out);
PTSCARF_API ptscarf_status ptscarf_wavefunction(const ptscarf_model* model, int q, int n, double x,
                                                ptscarf_complex* out);
PTSCARF_API ptscarf_status ptscarf_superpotential(const ptscarf_model* model, int q, double x,
                                                  ptscarf_complex* value,
                                                  ptscarf_complex* derivative);
PTSCARF_API ptscarf_status ptscarf_energy_shift(const ptscarf_model* model, int q,
                                                ptscarf_complex* out);
PTSCARF_API ptscarf_status ptscarf_partner_params(const ptscarf_model* model, int q,
                                                  ptscarf_complex* alpha, ptscarf_complex* beta);

/* notation: "V1V2", "AB" or "sLambda". */
PTSCARF_API ptscarf_status ptscarf_export_params(const ptscarf_model* model, const char* notation,
                                                 ptscarf_complex* first, ptscarf_complex* second);
PTSCARF_API ptscarf_status ptscarf_convert_params(const char* notation, ptscarf_complex first,
                                                  ptscarf_complex second, ptscarf_complex* alpha,
                                                  ptscarf_complex* beta);

PTSCARF_API ptscarf_status ptscarf_run_spectrum(const ptscarf_model* model, ptscarf_format format,
                                                ptscarf_documents** out);
PTSCARF_API ptscarf_status ptscarf_run_partner(const ptscarf_model* model, int q,
                                               ptscarf_format format, ptscarf_documents** out);
PTSCARF_API ptscarf_status ptscarf_run_wavefunction(const ptscarf_model* model, int q, int n,
                                                    ptscarf_format format,
                                                    ptscarf_documents** out);
/* failures receives the number of failed checks; the status is PTSCARF_OK
 * whenever the suite ran. */
PTSCARF_API ptscarf_status ptscarf_run_verify(const ptscarf_model* model, ptscarf_format format,
                                              ptscarf_documents** out, int* failures);
/* Scans alpha along path (NULL for the default 0.8 -> 0 -> i path, 25 samples)
 * at the model's beta, which must be real. ok_rows receives the number of
 * samples that produced a spectrum. */
PTSCARF_API ptscarf_status ptscarf_run_scan(const ptscarf_model* model, const ptscarf_complex* path,
                                            size_t path_length, ptscarf_format format,
                                            ptscarf_documents** out, int* ok_rows);
PTSCARF_API ptscarf_status ptscarf_run_algebra(const ptscarf_model* model, ptscarf_format format,
                                               ptscarf_documents** out);

PTSCARF_API size_t ptscarf_documents_count(const ptscarf_documents* docs);
PTSCARF_API const char* ptscarf_documents_name(const ptscarf_documents* docs, size_t index);
PTSCARF_API const char* ptscarf_documents_content(const ptscarf_documents* docs, size_t index,
                                                  size_t* length);
PTSCARF_API void ptscarf_documents_destroy(ptscarf_documents* docs);

#ifdef __cplusplus
}
#endif

#endif
