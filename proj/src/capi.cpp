#include "ptscarf/ptscarf.h"

#include <new>
#include <string>

#include "error.hpp"
#include "report.hpp"
#include "scarf2.hpp"
#include "susy.hpp"
#include "verify.hpp"

struct ptscarf_model {
  ptscarf::ScarfParams params;
  ptscarf::num::GridSpec grid;
};

struct ptscarf_documents {
  ptscarf::report::Bundle bundle;
};

namespace {

using ptscarf::cplx;

thread_local std::string g_last_error;

ptscarf_status status_of(ptscarf::ErrorKind k) {
  switch (k) {
    case ptscarf::ErrorKind::InvalidArgument: return PTSCARF_INVALID_ARGUMENT;
    case ptscarf::ErrorKind::OutOfRange: return PTSCARF_OUT_OF_RANGE;
    case ptscarf::ErrorKind::BranchCut: return PTSCARF_BRANCH_CUT;
    case ptscarf::ErrorKind::Numerical: return PTSCARF_NUMERICAL;
  }
  return PTSCARF_INTERNAL;
}

template <class F>
ptscarf_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return PTSCARF_OK;
  } catch (const ptscarf::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PTSCARF_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PTSCARF_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return PTSCARF_INTERNAL;
  }
}

cplx from_c(ptscarf_complex z) { return {z.re, z.im}; }
ptscarf_complex to_c(cplx z) { return {z.real(), z.imag()}; }

template <class T>
void need(T* p, const char* what) {
  ptscarf::require(p != nullptr, std::string(what) + " must not be null");
}

ptscarf::report::Format format_of(ptscarf_format f) {
  ptscarf::require(f == PTSCARF_FORMAT_JSON || f == PTSCARF_FORMAT_CSV, "unknown output format");
  return f == PTSCARF_FORMAT_JSON ? ptscarf::report::Format::Json : ptscarf::report::Format::Csv;
}

void emit(ptscarf::report::Bundle bundle, ptscarf_documents** out) {
  *out = new ptscarf_documents{std::move(bundle)};
}

}  // namespace

extern "C" {

const char* ptscarf_version(void) { return "1.0.0"; }

const char* ptscarf_last_error(void) { return g_last_error.c_str(); }

const char* ptscarf_status_name(ptscarf_status status) {
  switch (status) {
    case PTSCARF_OK: return "ok";
    case PTSCARF_INVALID_ARGUMENT: return "invalid argument";
    case PTSCARF_OUT_OF_RANGE: return "out of range";
    case PTSCARF_BRANCH_CUT: return "branch cut";
    case PTSCARF_NUMERICAL: return "numerical failure";
    case PTSCARF_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ptscarf_status ptscarf_model_create(ptscarf_complex alpha, ptscarf_complex beta, double axis_shift,
                                    ptscarf_model** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    auto m = new ptscarf_model{ptscarf::ScarfParams::make(from_c(alpha), from_c(beta), axis_shift),
                               ptscarf::num::GridSpec{}};
    *out = m;
  });
}

void ptscarf_model_destroy(ptscarf_model* model) { delete model; }

ptscarf_status ptscarf_model_set_grid(ptscarf_model* model, double x_min, double x_max,
                                      int n_points, int stencil_order) {
  return guarded([&] {
    need(model, "model");
    model->grid = ptscarf::num::GridSpec::make(x_min, x_max, n_points, stencil_order);
  });
}

ptscarf_status ptscarf_model_get_grid(const ptscarf_model* model, double* x_min, double* x_max,
                                      int* n_points, int* stencil_order) {
  return guarded([&] {
    need(model, "model");
    if (x_min) *x_min = model->grid.x_min;
    if (x_max) *x_max = model->grid.x_max;
    if (n_points) *n_points = model->grid.n_points;
    if (stencil_order) *stencil_order = model->grid.stencil_order;
  });
}

ptscarf_status ptscarf_phase(const ptscarf_model* model, const char** name) {
  return guarded([&] {
    need(model, "model");
    need(name, "name");
    *name = ptscarf::to_string(ptscarf::classify_symmetry(model->params)).data();
  });
}

ptscarf_status ptscarf_energy(const ptscarf_model* model, int q, int n, ptscarf_complex* out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = to_c(ptscarf::energy(model->params, ptscarf::quasi_parity(q), n));
  });
}

ptscarf_status ptscarf_max_level(const ptscarf_model* model, int q, int* out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = ptscarf::max_level(model->params, ptscarf::quasi_parity(q));
  });
}

ptscarf_status ptscarf_potential(const ptscarf_model* model, double x, ptscarf_complex* out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = to_c(ptscarf::eval_potential(model->params, ptscarf::QuasiParity::Plus, x));
  });
}

ptscarf_status ptscarf_wavefunction(const ptscarf_model* model, int q, int n, double x,
                                    ptscarf_complex* out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = to_c(ptscarf::wavefunction(model->params, ptscarf::quasi_parity(q), n, x));
  });
}

ptscarf_status ptscarf_superpotential(const ptscarf_model* model, int q, double x,
                                      ptscarf_complex* value, ptscarf_complex* derivative) {
  return guarded([&] {
    need(model, "model");
    const auto w = ptscarf::susy::superpotential(model->params, ptscarf::quasi_parity(q));
    if (value) *value = to_c(w.value(x));
    if (derivative) *derivative = to_c(w.derivative(x));
  });
}

ptscarf_status ptscarf_energy_shift(const ptscarf_model* model, int q, ptscarf_complex* out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = to_c(ptscarf::susy::superpotential(model->params, ptscarf::quasi_parity(q)).energy_shift());
  });
}

ptscarf_status ptscarf_partner_params(const ptscarf_model* model, int q, ptscarf_complex* alpha,
                                      ptscarf_complex* beta) {
  return guarded([&] {
    need(model, "model");
    const auto p = ptscarf::susy::partner_params(model->params, ptscarf::quasi_parity(q));
    if (alpha) *alpha = to_c(p.alpha);
    if (beta) *beta = to_c(p.beta);
  });
}

ptscarf_status ptscarf_export_params(const ptscarf_model* model, const char* notation,
                                     ptscarf_complex* first, ptscarf_complex* second) {
  return guarded([&] {
    need(model, "model");
    need(notation, "notation");
    const auto c = ptscarf::export_params(model->params, ptscarf::notation_from_string(notation));
    if (first) *first = to_c(c.first);
    if (second) *second = to_c(c.second);
  });
}

ptscarf_status ptscarf_convert_params(const char* notation, ptscarf_complex first,
                                      ptscarf_complex second, ptscarf_complex* alpha,
                                      ptscarf_complex* beta) {
  return guarded([&] {
    need(notation, "notation");
    const auto p = ptscarf::convert_params(
        {ptscarf::notation_from_string(notation), from_c(first), from_c(second)});
    if (alpha) *alpha = to_c(p.alpha);
    if (beta) *beta = to_c(p.beta);
  });
}

ptscarf_status ptscarf_run_spectrum(const ptscarf_model* model, ptscarf_format format,
                                    ptscarf_documents** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = nullptr;
    const auto f = format_of(format);
    emit(ptscarf::report::spectrum_documents(
             ptscarf::verify::check_spectrum(model->params, model->grid), f),
         out);
  });
}

ptscarf_status ptscarf_run_partner(const ptscarf_model* model, int q, ptscarf_format format,
                                   ptscarf_documents** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = nullptr;
    const auto f = format_of(format);
    const auto a = ptscarf::verify::analyze_partner(model->params, ptscarf::quasi_parity(q),
                                                    model->grid);
    emit(ptscarf::report::partner_documents(a, model->grid, f), out);
  });
}

ptscarf_status ptscarf_run_wavefunction(const ptscarf_model* model, int q, int n,
                                        ptscarf_format format, ptscarf_documents** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = nullptr;
    const auto f = format_of(format);
    emit(ptscarf::report::wavefunction_documents(model->params, ptscarf::quasi_parity(q), n,
                                                 model->grid, f),
         out);
  });
}

ptscarf_status ptscarf_run_verify(const ptscarf_model* model, ptscarf_format format,
                                  ptscarf_documents** out, int* failures) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = nullptr;
    const auto f = format_of(format);
    const auto suite = ptscarf::verify::run_suite(model->params, model->grid);
    if (failures) *failures = suite.failures();
    emit(ptscarf::report::verify_documents(suite, f), out);
  });
}

ptscarf_status ptscarf_run_scan(const ptscarf_model* model, const ptscarf_complex* path,
                                size_t path_length, ptscarf_format format,
                                ptscarf_documents** out, int* ok_rows) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = nullptr;
    const auto f = format_of(format);
    ptscarf::require(model->params.beta.imag() == 0.0, "scan needs a real beta");
    std::vector<cplx> alphas;
    if (path) {
      for (size_t i = 0; i < path_length; ++i) alphas.push_back(from_c(path[i]));
    } else {
      alphas = ptscarf::verify::default_scan_path();
    }
    const double beta = model->params.beta.real();
    const auto rows = ptscarf::verify::scan_pt_breaking(beta, alphas, model->grid);
    if (ok_rows) {
      *ok_rows = 0;
      for (const auto& r : rows) *ok_rows += r.ok ? 1 : 0;
    }
    emit(ptscarf::report::scan_documents(beta, rows, model->grid, f), out);
  });
}

ptscarf_status ptscarf_run_algebra(const ptscarf_model* model, ptscarf_format format,
                                   ptscarf_documents** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = nullptr;
    const auto f = format_of(format);
    emit(ptscarf::report::algebra_documents(model->params, model->grid, f), out);
  });
}

size_t ptscarf_documents_count(const ptscarf_documents* docs) {
  return docs ? docs->bundle.size() : 0;
}

const char* ptscarf_documents_name(const ptscarf_documents* docs, size_t index) {
  if (!docs || index >= docs->bundle.size()) return nullptr;
  return docs->bundle[index].name.c_str();
}

const char* ptscarf_documents_content(const ptscarf_documents* docs, size_t index,
                                      size_t* length) {
  if (!docs || index >= docs->bundle.size()) {
    if (length) *length = 0;
    return nullptr;
  }
  const std::string& c = docs->bundle[index].content;
  if (length) *length = c.size();
  return c.c_str();
}

void ptscarf_documents_destroy(ptscarf_documents* docs) { delete docs; }

}  // extern "C"
