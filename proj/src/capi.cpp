#include "mfcat/mfcat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "mfcat/axioms.hpp"
#include "mfcat/error.hpp"
#include "mfcat/mf_file.hpp"
#include "mfcat/t_subcategory.hpp"
#include "mfcat/tensor.hpp"

struct mfc_poly {
  mfcat::Polynomial value;
};
struct mfc_matrix {
  mfcat::PolyMatrix value;
};
struct mfc_mf {
  mfcat::MatrixFactorization value;
};
struct mfc_reports {
  std::vector<mfcat::CheckReport> reports;
};

namespace {

thread_local std::string last_error;

mfc_status fail(mfc_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
mfc_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return MFC_OK;
  } catch (const mfcat::ParseError& e) {
    std::string msg = e.what();
    if (e.line() > 0) msg = "line " + std::to_string(e.line()) + ": " + msg;
    return fail(MFC_ERR_PARSE, msg);
  } catch (const mfcat::Error& e) {
    return fail(static_cast<mfc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MFC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MFC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool any_null() { return false; }
template <class T, class... Rest>
bool any_null(const T* p, const Rest*... rest) {
  return p == nullptr || any_null(rest...);
}

mfc_status null_arg() { return fail(MFC_ERR_NULL_POINTER, "null argument"); }

}  // namespace

extern "C" {

const char* mfc_last_error(void) { return last_error.c_str(); }

const char* mfc_status_name(mfc_status status) {
  switch (status) {
    case MFC_OK: return "ok";
    case MFC_ERR_NULL_POINTER: return "null pointer";
    case MFC_ERR_INTERNAL: return "internal error";
    default:
      if (status >= MFC_ERR_PARSE && status <= MFC_ERR_INVALID_ARGUMENT)
        return mfcat::to_string(static_cast<mfcat::ErrorCode>(status));
      return "unknown status";
  }
}

void mfc_string_free(char* s) { std::free(s); }

mfc_status mfc_poly_parse(const char* text, mfc_poly** out) {
  if (any_null(text, out)) return null_arg();
  return guard([&] { *out = new mfc_poly{mfcat::parse_polynomial(text)}; });
}

mfc_status mfc_poly_to_string(const mfc_poly* p, char** out) {
  if (any_null(p, out)) return null_arg();
  return guard([&] { *out = copy_string(mfcat::canonical_string(p->value)); });
}

mfc_status mfc_poly_add(const mfc_poly* p, const mfc_poly* q, mfc_poly** out) {
  if (any_null(p, q, out)) return null_arg();
  return guard([&] { *out = new mfc_poly{p->value + q->value}; });
}

mfc_status mfc_poly_mul(const mfc_poly* p, const mfc_poly* q, mfc_poly** out) {
  if (any_null(p, q, out)) return null_arg();
  return guard([&] { *out = new mfc_poly{p->value * q->value}; });
}

void mfc_poly_free(mfc_poly* p) { delete p; }

mfc_status mfc_matrix_parse(const char* text, mfc_matrix** out) {
  if (any_null(text, out)) return null_arg();
  return guard([&] { *out = new mfc_matrix{mfcat::parse_matrix(text)}; });
}

mfc_status mfc_matrix_to_string(const mfc_matrix* m, char** out) {
  if (any_null(m, out)) return null_arg();
  return guard([&] { *out = copy_string(m->value.to_literal()); });
}

mfc_status mfc_matrix_shape(const mfc_matrix* m, size_t* rows, size_t* cols) {
  if (any_null(m, rows, cols)) return null_arg();
  *rows = m->value.rows();
  *cols = m->value.cols();
  return MFC_OK;
}

void mfc_matrix_free(mfc_matrix* m) { delete m; }

mfc_status mfc_mf_new(const mfc_matrix* phi, const mfc_matrix* psi, const mfc_poly* f,
                      mfc_mf** out) {
  if (any_null(phi, psi, f, out)) return null_arg();
  return guard([&] {
    *out = new mfc_mf{mfcat::MatrixFactorization::make(phi->value, psi->value, f->value)};
  });
}

mfc_status mfc_mf_parse_file(const char* text, mfc_mf** out) {
  if (any_null(text, out)) return null_arg();
  return guard([&] { *out = new mfc_mf{mfcat::parse_mf_file(text)}; });
}

mfc_status mfc_mf_print_file(const mfc_mf* x, char** out) {
  if (any_null(x, out)) return null_arg();
  return guard([&] { *out = copy_string(mfcat::print_mf_file(x->value)); });
}

mfc_status mfc_mf_size(const mfc_mf* x, size_t* size) {
  if (any_null(x, size)) return null_arg();
  *size = x->value.size();
  return MFC_OK;
}

int mfc_mf_equal(const mfc_mf* a, const mfc_mf* b) {
  if (any_null(a, b)) return -1;
  return a->value == b->value ? 1 : 0;
}

mfc_status mfc_mf_tensor(const mfc_mf* a, const mfc_mf* b, mfc_tensor_mode mode, mfc_mf** out) {
  if (any_null(a, b, out)) return null_arg();
  if (mode != MFC_TENSOR_YOSHINO && mode != MFC_TENSOR_MULT)
    return fail(MFC_ERR_INVALID_ARGUMENT, "unknown tensor mode");
  return guard([&] {
    *out = new mfc_mf{mode == MFC_TENSOR_YOSHINO ? mfcat::yoshino_tensor(a->value, b->value)
                                                 : mfcat::mult_tensor(a->value, b->value)};
  });
}

mfc_status mfc_mf_syzygy(const mfc_mf* x, mfc_mf** out) {
  if (any_null(x, out)) return null_arg();
  return guard([&] { *out = new mfc_mf{mfcat::syzygy(x->value)}; });
}

mfc_status mfc_mf_epower(unsigned n, mfc_mf** out) {
  if (any_null(out)) return null_arg();
  return guard([&] { *out = new mfc_mf{mfcat::e_power(n)}; });
}

void mfc_mf_free(mfc_mf* x) { delete x; }

mfc_status mfc_suite_run(const char* name, unsigned maxpow, unsigned samples, uint64_t seed,
                         mfc_reports** out) {
  if (any_null(name, out)) return null_arg();
  return guard([&] { *out = new mfc_reports{mfcat::run_suite(name, maxpow, samples, seed)}; });
}

size_t mfc_reports_count(const mfc_reports* r) { return r ? r->reports.size() : 0; }

mfc_status mfc_reports_get(const mfc_reports* r, size_t index, const char** check_id,
                           mfc_verdict* verdict, const char** detail) {
  if (any_null(r)) return null_arg();
  if (index >= r->reports.size()) return fail(MFC_ERR_INVALID_ARGUMENT, "report index out of range");
  const auto& rep = r->reports[index];
  if (check_id) *check_id = rep.check_id.c_str();
  if (detail) *detail = rep.detail.c_str();
  if (verdict) *verdict = static_cast<mfc_verdict>(rep.verdict);
  return MFC_OK;
}

int mfc_reports_ok(const mfc_reports* r) { return r && mfcat::aggregate_ok(r->reports) ? 1 : 0; }

mfc_status mfc_reports_format(const mfc_reports* r, mfc_format format, char** out) {
  if (any_null(r, out)) return null_arg();
  return guard([&] {
    if (format == MFC_FORMAT_STRUCTURED) {
      *out = copy_string(mfcat::reports_to_json(r->reports));
      return;
    }
    std::string text;
    for (const auto& rep : r->reports) text += mfcat::report_line(rep) + "\n";
    *out = copy_string(text);
  });
}

void mfc_reports_free(mfc_reports* r) { delete r; }

}  // extern "C"
