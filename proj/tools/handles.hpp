#pragma once

// RAII ownership for the C API handles.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgateaux/ncgateaux.h"

namespace ncg_cli {

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Destroy(p); }
};

using Algebra = std::unique_ptr<ncg_algebra, Deleter<ncg_algebra, ncg_algebra_destroy>>;
using Element = std::unique_ptr<ncg_element, Deleter<ncg_element, ncg_element_destroy>>;
using Poly = std::unique_ptr<ncg_poly, Deleter<ncg_poly, ncg_poly_destroy>>;
using Form = std::unique_ptr<ncg_form, Deleter<ncg_form, ncg_form_destroy>>;
using LinMap = std::unique_ptr<ncg_linmap, Deleter<ncg_linmap, ncg_linmap_destroy>>;
using Taylor = std::unique_ptr<ncg_taylor, Deleter<ncg_taylor, ncg_taylor_destroy>>;
using CheckReport = std::unique_ptr<ncg_check_report, Deleter<ncg_check_report, ncg_check_report_destroy>>;

/// Library failure carried up to main(), which turns it into an exit code.
class ApiFailure : public std::runtime_error {
 public:
  ApiFailure(ncg_status status, std::string message, long position)
      : std::runtime_error(std::move(message)), status_(status), position_(position) {}
  ncg_status status() const noexcept { return status_; }
  long position() const noexcept { return position_; }

 private:
  ncg_status status_;
  long position_;
};

inline void check(ncg_status s) {
  if (s != NCG_OK) throw ApiFailure(s, ncg_last_error_message(), ncg_last_error_position());
}

template <class Handle, class F, class... Args>
Handle make(F f, Args... args) {
  typename Handle::pointer raw = nullptr;
  check(f(args..., &raw));
  return Handle(raw);
}

inline std::string take_string(char* s) {
  std::string out(s);
  ncg_string_free(s);
  return out;
}

inline std::vector<double> coords(const ncg_element* e, std::size_t dimension) {
  std::vector<double> c(dimension);
  check(ncg_element_coords(e, c.data(), c.size()));
  for (double& v : c)
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  return c;
}

inline std::string format(const ncg_element* e) {
  char* s = nullptr;
  check(ncg_element_format(e, &s));
  return take_string(s);
}

}  // namespace ncg_cli
