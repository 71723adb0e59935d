#include "ncgateaux/ncgateaux.h"

#include <cmath>
#include <cstring>
#include <type_traits>
#include <new>
#include <string>

#include "ncg/checks.hpp"
#include "ncg/error.hpp"
#include "ncg/gateaux.hpp"
#include "ncg/linmap.hpp"
#include "ncg/numeric.hpp"
#include "ncg/parser.hpp"
#include "ncg/taylor.hpp"

struct ncg_algebra {
  ncg::Algebra value;
};
struct ncg_element {
  ncg::Element value;
};
struct ncg_poly {
  ncg::NcPolynomial value;
};
struct ncg_form {
  ncg::SlottedForm value;
};
struct ncg_linmap {
  ncg::TensorLinMap value;
};
struct ncg_taylor {
  ncg::TaylorExpansion value;
};
struct ncg_check_report {
  std::vector<ncg::TheoremResult> results;
};

namespace {

thread_local std::string g_message;
thread_local long g_position = -1;

struct CallbackFailure {};

struct ApiError {
  ncg_status status;
  const char* message;
};

ncg_status to_status(ncg::ErrorCode code) {
  using ncg::ErrorCode;
  switch (code) {
    case ErrorCode::tag_mismatch: return NCG_ERR_TAG_MISMATCH;
    case ErrorCode::dimension: return NCG_ERR_DIMENSION;
    case ErrorCode::arity: return NCG_ERR_ARITY;
    case ErrorCode::domain: return NCG_ERR_DOMAIN;
    case ErrorCode::lexer: return NCG_ERR_LEXER;
    case ErrorCode::parse: return NCG_ERR_PARSE;
    case ErrorCode::literal_dimension: return NCG_ERR_LITERAL_DIMENSION;
    case ErrorCode::numeric_overflow: return NCG_ERR_NUMERIC_OVERFLOW;
    case ErrorCode::invalid_argument: return NCG_ERR_INVALID_ARGUMENT;
  }
  return NCG_ERR_INTERNAL;
}

ncg_status fail(ncg_status status, std::string message, long position = -1) {
  g_message = std::move(message);
  g_position = position;
  return status;
}

template <class F>
ncg_status guarded(F&& body) noexcept {
  try {
    body();
    g_message.clear();
    g_position = -1;
    return NCG_OK;
  } catch (const ApiError& e) {
    return fail(e.status, e.message);
  } catch (const ncg::Error& e) {
    return fail(to_status(e.code()), e.what(),
                e.has_position() ? static_cast<long>(e.position()) : -1);
  } catch (const CallbackFailure&) {
    return fail(NCG_ERR_INTERNAL, "map callback reported failure");
  } catch (const std::bad_alloc&) {
    return fail(NCG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NCG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NCG_ERR_INTERNAL, "unknown failure");
  }
}

template <class... Ptrs>
void require(Ptrs... ptrs) {
  if (((ptrs == nullptr) || ...)) throw ApiError{NCG_ERR_INVALID_ARGUMENT, "null argument"};
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_finite(double v) {
  if (!std::isfinite(v)) throw ApiError{NCG_ERR_NUMERIC_OVERFLOW, "result is not finite"};
}

template <class Handle, class Value>
void emit(Handle** out, Value&& value) {
  if constexpr (std::is_same_v<Handle, ncg_element>)
    for (double v : value.coords()) require_finite(v);
  *out = new Handle{std::forward<Value>(value)};
}

ncg::FdSchedule to_schedule(const ncg_fd_schedule* s) {
  if (s == nullptr) return {};
  ncg::FdSchedule out;
  out.t0 = s->t0;
  out.levels = s->levels;
  out.mode = s->mode == NCG_FD_FORWARD ? ncg::FdMode::forward : ncg::FdMode::central;
  out.richardson = s->richardson != 0;
  return out;
}

}  // namespace

extern "C" {

const char* ncg_version(void) { return "1.0.0"; }

const char* ncg_status_name(ncg_status status) {
  switch (status) {
    case NCG_OK: return "ok";
    case NCG_ERR_TAG_MISMATCH: return "tag_mismatch";
    case NCG_ERR_DIMENSION: return "dimension";
    case NCG_ERR_ARITY: return "arity";
    case NCG_ERR_DOMAIN: return "domain";
    case NCG_ERR_LEXER: return "lexer";
    case NCG_ERR_PARSE: return "parse";
    case NCG_ERR_LITERAL_DIMENSION: return "literal_dimension";
    case NCG_ERR_NUMERIC_OVERFLOW: return "numeric_overflow";
    case NCG_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case NCG_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case NCG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ncg_last_error_message(void) { return g_message.c_str(); }
long ncg_last_error_position(void) { return g_position; }
void ncg_string_free(char* s) { delete[] s; }

ncg_status ncg_algebra_create(const char* spec, ncg_algebra** out) {
  return guarded([&] {
    require(spec, out);
    emit(out, ncg::Algebra::parse(spec));
  });
}

void ncg_algebra_destroy(ncg_algebra* algebra) { delete algebra; }

size_t ncg_algebra_dimension(const ncg_algebra* algebra) {
  return algebra ? algebra->value.dimension() : 0;
}

ncg_status ncg_algebra_name(const ncg_algebra* algebra, char** out) {
  return guarded([&] {
    require(algebra, out);
    *out = copy_string(algebra->value.name());
  });
}

ncg_status ncg_element_from_coords(const ncg_algebra* algebra, const double* coords, size_t count,
                                   ncg_element** out) {
  return guarded([&] {
    require(algebra, out);
    if (count > 0) require(coords);
    emit(out, ncg::Element::from_coords(algebra->value, std::span<const double>(coords, count)));
  });
}

ncg_status ncg_element_parse(const ncg_algebra* algebra, const char* text, ncg_element** out) {
  return guarded([&] {
    require(algebra, text, out);
    emit(out, ncg::parse_element(text, algebra->value));
  });
}

ncg_status ncg_element_random_unit(const ncg_algebra* algebra, uint64_t seed, ncg_element** out) {
  return guarded([&] {
    require(algebra, out);
    emit(out, ncg::random_unit(algebra->value, seed));
  });
}

ncg_status ncg_element_clone(const ncg_element* e, ncg_element** out) {
  return guarded([&] {
    require(e, out);
    emit(out, e->value);
  });
}

void ncg_element_destroy(ncg_element* e) { delete e; }

ncg_status ncg_element_coords(const ncg_element* e, double* coords, size_t count) {
  return guarded([&] {
    require(e, coords);
    const std::vector<double> c = e->value.coords();
    if (count < c.size()) throw ApiError{NCG_ERR_BUFFER_TOO_SMALL, "coordinate buffer too small"};
    std::copy(c.begin(), c.end(), coords);
  });
}

ncg_status ncg_element_add(const ncg_element* a, const ncg_element* b, ncg_element** out) {
  return guarded([&] {
    require(a, b, out);
    emit(out, a->value + b->value);
  });
}

ncg_status ncg_element_sub(const ncg_element* a, const ncg_element* b, ncg_element** out) {
  return guarded([&] {
    require(a, b, out);
    emit(out, a->value - b->value);
  });
}

ncg_status ncg_element_mul(const ncg_element* a, const ncg_element* b, ncg_element** out) {
  return guarded([&] {
    require(a, b, out);
    emit(out, a->value * b->value);
  });
}

ncg_status ncg_element_scale(const ncg_element* a, double r, ncg_element** out) {
  return guarded([&] {
    require(a, out);
    emit(out, r * a->value);
  });
}

ncg_status ncg_element_norm(const ncg_element* e, double* out) {
  return guarded([&] {
    require(e, out);
    const double n = e->value.norm();
    require_finite(n);
    *out = n;
  });
}

ncg_status ncg_element_format(const ncg_element* e, char** out) {
  return guarded([&] {
    require(e, out);
    *out = copy_string(e->value.to_string());
  });
}

ncg_status ncg_poly_parse(const ncg_algebra* algebra, const char* text, ncg_poly** out) {
  return guarded([&] {
    require(algebra, text, out);
    emit(out, ncg::parse_polynomial(text, algebra->value));
  });
}

ncg_status ncg_poly_random(const ncg_algebra* algebra, size_t max_degree, size_t terms_per_degree,
                           double coeff_bound, uint64_t seed, ncg_poly** out) {
  return guarded([&] {
    require(algebra, out);
    emit(out, ncg::random_poly(algebra->value, max_degree, terms_per_degree, coeff_bound, seed));
  });
}

void ncg_poly_destroy(ncg_poly* p) { delete p; }
size_t ncg_poly_degree(const ncg_poly* p) { return p ? p->value.degree() : 0; }
size_t ncg_poly_term_count(const ncg_poly* p) { return p ? p->value.terms().size() : 0; }

ncg_status ncg_poly_eval(const ncg_poly* p, const ncg_element* x, ncg_element** out) {
  return guarded([&] {
    require(p, x, out);
    emit(out, p->value.eval(x->value));
  });
}

ncg_status ncg_poly_add(const ncg_poly* p, const ncg_poly* q, ncg_poly** out) {
  return guarded([&] {
    require(p, q, out);
    emit(out, p->value + q->value);
  });
}

ncg_status ncg_poly_mul(const ncg_poly* p, const ncg_poly* q, ncg_poly** out) {
  return guarded([&] {
    require(p, q, out);
    emit(out, p->value * q->value);
  });
}

ncg_status ncg_poly_shift(const ncg_poly* p, const ncg_element* y0, ncg_poly** out) {
  return guarded([&] {
    require(p, y0, out);
    emit(out, ncg::shift(p->value, y0->value));
  });
}

ncg_status ncg_poly_substitute(const ncg_poly* g, const ncg_poly* f, ncg_poly** out) {
  return guarded([&] {
    require(g, f, out);
    emit(out, ncg::substitute(g->value, f->value));
  });
}

ncg_status ncg_poly_format(const ncg_poly* p, char** out) {
  return guarded([&] {
    require(p, out);
    *out = copy_string(p->value.to_string());
  });
}

ncg_status ncg_poly_derivative(const ncg_poly* p, size_t order, ncg_form** out) {
  return guarded([&] {
    require(p, out);
    emit(out, ncg::derivative(p->value, order));
  });
}

void ncg_form_destroy(ncg_form* f) { delete f; }
size_t ncg_form_order(const ncg_form* f) { return f ? f->value.order() : 0; }
size_t ncg_form_term_count(const ncg_form* f) { return f ? f->value.terms().size() : 0; }

ncg_status ncg_form_apply(const ncg_form* f, const ncg_element* x, const ncg_element* const* hs,
                          size_t count, ncg_element** out) {
  return guarded([&] {
    require(f, x, out);
    if (count > 0) require(hs);
    std::vector<ncg::Element> args;
    args.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      require(hs[i]);
      args.push_back(hs[i]->value);
    }
    emit(out, ncg::apply(f->value, x->value, args));
  });
}

ncg_status ncg_form_apply_diag(const ncg_form* f, const ncg_element* x, const ncg_element* h,
                               ncg_element** out) {
  return guarded([&] {
    require(f, x, h, out);
    emit(out, ncg::apply_diag(f->value, x->value, h->value));
  });
}

ncg_status ncg_form_format(const ncg_form* f, char** out) {
  return guarded([&] {
    require(f, out);
    *out = copy_string(f->value.to_string());
  });
}

ncg_status ncg_linmap_create(const ncg_algebra* algebra, ncg_linmap** out) {
  return guarded([&] {
    require(algebra, out);
    emit(out, ncg::TensorLinMap(algebra->value));
  });
}

ncg_status ncg_linmap_first_derivative(const ncg_poly* p, const ncg_element* x, ncg_linmap** out) {
  return guarded([&] {
    require(p, x, out);
    emit(out, ncg::first_derivative_as_linmap(p->value, x->value));
  });
}

void ncg_linmap_destroy(ncg_linmap* map) { delete map; }

ncg_status ncg_linmap_add_term(ncg_linmap* map, const ncg_element* left, const ncg_element* right) {
  return guarded([&] {
    require(map, left, right);
    map->value.add_term(left->value, right->value);
  });
}

size_t ncg_linmap_term_count(const ncg_linmap* map) { return map ? map->value.terms().size() : 0; }

ncg_status ncg_linmap_apply(const ncg_linmap* map, const ncg_element* x, ncg_element** out) {
  return guarded([&] {
    require(map, x, out);
    emit(out, map->value.apply(x->value));
  });
}

ncg_status ncg_linmap_compose(const ncg_linmap* outer, const ncg_linmap* inner, ncg_linmap** out) {
  return guarded([&] {
    require(outer, inner, out);
    emit(out, ncg::compose(outer->value, inner->value));
  });
}

ncg_status ncg_linmap_jacobian(const ncg_linmap* map, double* entries, size_t count) {
  return guarded([&] {
    require(map, entries);
    const ncg::AlgebraDescriptor desc(map->value.algebra());
    const ncg::JacobianMatrix j = ncg::to_jacobian(map->value, desc);
    if (count < j.entries().size()) throw ApiError{NCG_ERR_BUFFER_TOO_SMALL, "jacobian buffer too small"};
    std::copy(j.entries().begin(), j.entries().end(), entries);
  });
}

ncg_status ncg_linmap_norm_estimate(const ncg_linmap* map, size_t samples, uint64_t seed,
                                    double* sampled, double* upper) {
  return guarded([&] {
    require(map, sampled, upper);
    const ncg::NormEstimate est = ncg::norm_estimate(map->value, samples, seed);
    *sampled = est.sampled;
    *upper = est.upper_bound;
  });
}

ncg_status ncg_taylor_expand(const ncg_poly* f, const ncg_element* center, size_t order,
                             ncg_taylor** out) {
  return guarded([&] {
    require(f, center, out);
    emit(out, ncg::expand(f->value, center->value, order));
  });
}

void ncg_taylor_destroy(ncg_taylor* e) { delete e; }
size_t ncg_taylor_order(const ncg_taylor* e) { return e ? e->value.order() : 0; }

ncg_status ncg_taylor_eval(const ncg_taylor* e, const ncg_element* y, ncg_element** out) {
  return guarded([&] {
    require(e, y, out);
    emit(out, e->value.eval(y->value));
  });
}

ncg_status ncg_taylor_term(const ncg_taylor* e, size_t k, const ncg_element* y, ncg_element** out) {
  return guarded([&] {
    require(e, y, out);
    emit(out, e->value.term(k, y->value));
  });
}

ncg_status ncg_taylor_remainder_probe(const ncg_poly* f, const ncg_taylor* e, const ncg_element* h,
                                      const double* ts, size_t count, double* ratios) {
  return guarded([&] {
    require(f, e, h, ts, ratios);
    const auto probe = ncg::remainder_probe(f->value, e->value, h->value,
                                            std::span<const double>(ts, count));
    for (size_t i = 0; i < probe.size(); ++i) ratios[i] = probe[i].ratio;
  });
}

ncg_fd_schedule ncg_fd_default_schedule(void) {
  const ncg::FdSchedule d;
  return {d.t0, d.levels, NCG_FD_CENTRAL, d.richardson ? 1 : 0};
}

ncg_status ncg_fd_directional(const ncg_algebra* algebra, ncg_map_fn f, void* user,
                              const ncg_element* x, const ncg_element* h,
                              const ncg_fd_schedule* schedule, ncg_element** out) {
  return guarded([&] {
    require(algebra, x, h, out);
    if (f == nullptr) throw ApiError{NCG_ERR_INVALID_ARGUMENT, "null map callback"};
    const ncg::Algebra alg = algebra->value;
    const ncg::AlgebraMap map = [&](const ncg::Element& in) {
      const std::vector<double> c = in.coords();
      std::vector<double> result(c.size(), 0.0);
      if (f(c.data(), result.data(), c.size(), user) != 0) throw CallbackFailure{};
      return ncg::Element::from_coords(alg, result);
    };
    emit(out, ncg::directional_fd(map, x->value, h->value, to_schedule(schedule)));
  });
}

ncg_status ncg_fd_directional_poly(const ncg_poly* p, const ncg_element* x, const ncg_element* h,
                                   const ncg_fd_schedule* schedule, ncg_element** out) {
  return guarded([&] {
    require(p, x, h, out);
    emit(out, ncg::directional_fd(ncg::as_map(p->value), x->value, h->value, to_schedule(schedule)));
  });
}

ncg_status ncg_fd_higher_poly(const ncg_poly* p, const ncg_element* x, const ncg_element* h,
                              size_t order, const ncg_fd_schedule* schedule, ncg_element** out) {
  return guarded([&] {
    require(p, x, h, out);
    emit(out, ncg::higher_fd(ncg::as_map(p->value), x->value, h->value, order, to_schedule(schedule)));
  });
}

ncg_status ncg_check_run(const ncg_algebra* algebra, const char* suite, uint64_t seed,
                         ncg_check_report** out) {
  return guarded([&] {
    require(algebra, suite, out);
    *out = new ncg_check_report{ncg::run_check_suite(suite, algebra->value, seed)};
  });
}

void ncg_check_report_destroy(ncg_check_report* report) { delete report; }

size_t ncg_check_report_count(const ncg_check_report* report) {
  return report ? report->results.size() : 0;
}

const char* ncg_check_report_name(const ncg_check_report* report, size_t i) {
  return report && i < report->results.size() ? report->results[i].name.c_str() : nullptr;
}

int ncg_check_report_passed(const ncg_check_report* report, size_t i) {
  return report && i < report->results.size() && report->results[i].passed ? 1 : 0;
}

double ncg_check_report_max_error(const ncg_check_report* report, size_t i) {
  return report && i < report->results.size() ? report->results[i].max_error : 0.0;
}

double ncg_check_report_tolerance(const ncg_check_report* report, size_t i) {
  return report && i < report->results.size() ? report->results[i].tolerance : 0.0;
}

size_t ncg_check_report_cases(const ncg_check_report* report, size_t i) {
  return report && i < report->results.size() ? report->results[i].cases : 0;
}

}  // extern "C"
