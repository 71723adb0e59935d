#include "ncg/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ncg/error.hpp"
#include "ncg/random.hpp"

namespace ncg {

namespace {

constexpr int kPowerIterations = 50;
constexpr double kPowerTolerance = 1e-12;

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::domain, "non-finite scalar in algebra element");
  }
}

// Largest singular value of a row-major n×n matrix: power iteration on MᵀM,
// restarted from every unit vector, keeping the largest Rayleigh quotient.
double spectral_norm(std::span<const double> m, std::size_t n) {
  if (n == 1) return std::abs(m[0]);
  std::vector<double> gram(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += m[k * n + i] * m[k * n + j];
      gram[i * n + j] = s;
    }

  double best = 0.0;
  std::vector<double> v(n), w(n);
  for (std::size_t start = 0; start < n; ++start) {
    std::fill(v.begin(), v.end(), 0.0);
    v[start] = 1.0;
    double lambda = 0.0;
    for (int it = 0; it < kPowerIterations; ++it) {
      double wn = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += gram[i * n + j] * v[j];
        w[i] = s;
        wn += s * s;
      }
      wn = std::sqrt(wn);
      if (wn == 0.0) break;
      for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
      // Rayleigh quotient vᵀ G v with |v| = 1.
      double next = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += gram[i * n + j] * v[j];
        next += v[i] * s;
      }
      const bool converged = std::abs(next - lambda) <= kPowerTolerance * std::max(next, 1e-300);
      lambda = next;
      if (converged) break;
    }
    best = std::max(best, lambda);
  }
  return std::sqrt(best);
}

void append_signed(std::string& out, double v, const char* suffix) {
  if (std::signbit(v) && v != 0.0) {
    out += '-';
    out += format_real(-v);
  } else {
    out += '+';
    out += format_real(v);
  }
  out += suffix;
}

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, end);
}

Algebra Algebra::matrix(std::size_t n) {
  if (n < 1 || n > max_matrix_size)
    throw Error(ErrorCode::invalid_argument,
                "matrix size must be in [1, " + std::to_string(max_matrix_size) + "]");
  return Algebra(AlgebraKind::matrix, n);
}

Algebra Algebra::parse(const std::string& spec) {
  if (spec == "quat" || spec == "quaternion") return quaternion();
  if (spec == "complex") return complex();
  const std::string prefix = "matrix:";
  if (spec.rfind(prefix, 0) == 0) {
    std::size_t n = 0;
    const char* first = spec.data() + prefix.size();
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && first != last) return matrix(n);
  }
  throw Error(ErrorCode::invalid_argument,
              "unknown algebra '" + spec + "' (expected quat, complex or matrix:N)");
}

std::size_t Algebra::dimension() const noexcept {
  switch (kind_) {
    case AlgebraKind::quaternion: return 4;
    case AlgebraKind::complex: return 2;
    case AlgebraKind::matrix: return n_ * n_;
  }
  return 0;
}

std::string Algebra::name() const {
  switch (kind_) {
    case AlgebraKind::quaternion: return "quat";
    case AlgebraKind::complex: return "complex";
    case AlgebraKind::matrix: return "matrix:" + std::to_string(n_);
  }
  return "?";
}

AlgebraDescriptor::AlgebraDescriptor(Algebra algebra) : algebra_(algebra) {
  const std::size_t d = algebra.dimension();
  basis_.reserve(d);
  std::vector<double> c(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    c[k] = 1.0;
    basis_.push_back(Element::from_coords(algebra, c));
    c[k] = 0.0;
  }
}

const Element& AlgebraDescriptor::unit() const { return basis_.front(); }

void require_same_algebra(const Algebra& a, const Algebra& b) {
  if (!(a == b))
    throw Error(ErrorCode::tag_mismatch, "algebra mismatch: " + a.name() + " vs " + b.name());
}

namespace {

// Matrix coordinates relative to {I, E_rc (r·n+c > 0)} ↔ row-major entries.
std::vector<double> matrix_entries(std::span<const double> coords, std::size_t n) {
  std::vector<double> m(coords.begin(), coords.end());
  for (std::size_t i = 1; i < n; ++i) m[i * n + i] += coords[0];
  return m;
}

std::vector<double> matrix_coords(std::span<const double> entries, std::size_t n) {
  std::vector<double> c(entries.begin(), entries.end());
  for (std::size_t i = 1; i < n; ++i) c[i * n + i] -= entries[0];
  return c;
}

}  // namespace

Element Element::zero(const Algebra& algebra) {
  return Element(algebra, std::vector<double>(algebra.dimension(), 0.0));
}

Element Element::unit(const Algebra& algebra) { return real(algebra, 1.0); }

Element Element::real(const Algebra& algebra, double r) {
  if (!std::isfinite(r)) throw Error(ErrorCode::domain, "non-finite scalar in algebra element");
  // The unit is basis vector 0 in every algebra.
  Element e = zero(algebra);
  e.coords_[0] = r;
  return e;
}

Element Element::from_coords(const Algebra& algebra, std::span<const double> coords) {
  if (coords.size() != algebra.dimension())
    throw Error(ErrorCode::dimension, "expected " + std::to_string(algebra.dimension()) +
                                          " coordinates for " + algebra.name() + ", got " +
                                          std::to_string(coords.size()));
  require_finite(coords);
  return Element(algebra, std::vector<double>(coords.begin(), coords.end()));
}

Element Element::from_raw(const Algebra& algebra, std::vector<double> raw) {
  if (raw.size() != algebra.dimension())
    throw Error(ErrorCode::dimension, "expected " + std::to_string(algebra.dimension()) +
                                          " components for " + algebra.name() + ", got " +
                                          std::to_string(raw.size()));
  require_finite(raw);
  if (algebra.kind() == AlgebraKind::matrix) return Element(algebra, matrix_coords(raw, algebra.matrix_size()));
  return Element(algebra, std::move(raw));
}

Element Element::quaternion(double w, double x, double y, double z) {
  return from_raw(Algebra::quaternion(), {w, x, y, z});
}

std::vector<double> Element::raw() const {
  if (algebra_.kind() == AlgebraKind::matrix) return matrix_entries(coords_, algebra_.matrix_size());
  return coords_;
}

bool Element::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double v) { return v == 0.0; });
}

double Element::norm() const {
  if (algebra_.kind() == AlgebraKind::matrix) return spectral_norm(raw(), algebra_.matrix_size());
  double s = 0.0;
  for (double v : coords_) s += v * v;
  return std::sqrt(s);
}

Element Element::operator-() const {
  Element r = *this;
  for (double& v : r.coords_) v = -v;
  return r;
}

Element operator+(const Element& a, const Element& b) {
  Element r = a;
  r += b;
  return r;
}

Element& Element::operator+=(const Element& b) {
  require_same_algebra(algebra_, b.algebra_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
  return *this;
}

Element operator-(const Element& a, const Element& b) {
  require_same_algebra(a.algebra_, b.algebra_);
  Element r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

Element operator*(double r, const Element& a) {
  if (!std::isfinite(r)) throw Error(ErrorCode::domain, "non-finite scalar in algebra element");
  Element out = a;
  for (double& v : out.coords_) v *= r;
  return out;
}

Element operator*(const Element& a, const Element& b) {
  require_same_algebra(a.algebra_, b.algebra_);
  const auto& x = a.coords_;
  const auto& y = b.coords_;
  switch (a.algebra_.kind()) {
    case AlgebraKind::quaternion:
      // Hamilton: i² = j² = k² = ijk = −1.
      return Element(a.algebra_, {
          x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
          x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0],
      });
    case AlgebraKind::complex:
      return Element(a.algebra_, {x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]});
    case AlgebraKind::matrix: {
      const std::size_t n = a.algebra_.matrix_size();
      const std::vector<double> l = matrix_entries(x, n);
      const std::vector<double> m = matrix_entries(y, n);
      std::vector<double> r(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          const double lik = l[i * n + k];
          for (std::size_t j = 0; j < n; ++j) r[i * n + j] += lik * m[k * n + j];
        }
      return Element(a.algebra_, matrix_coords(r, n));
    }
  }
  return a;
}

bool operator==(const Element& a, const Element& b) {
  return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
}

std::string Element::to_string() const {
  std::string out;
  switch (algebra_.kind()) {
    case AlgebraKind::quaternion:
    case AlgebraKind::complex: {
      out += '(';
      const double w = coords_[0];
      if (std::signbit(w) && w != 0.0) out += '-';
      out += format_real(std::abs(w));
      append_signed(out, coords_[1], "i");
      if (algebra_.kind() == AlgebraKind::quaternion) {
        append_signed(out, coords_[2], "j");
        append_signed(out, coords_[3], "k");
      }
      out += ')';
      break;
    }
    case AlgebraKind::matrix: {
      const std::size_t n = algebra_.matrix_size();
      const std::vector<double> m = raw();
      out += "[[";
      for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < n; ++j) {
          if (j) out += ',';
          out += format_real(m[i * n + j]);
        }
      }
      out += "]]";
      break;
    }
  }
  return out;
}

double distance(const Element& a, const Element& b) { return (a - b).norm(); }

Element random_element(const Algebra& algebra, Rng& rng) {
  std::vector<double> c(algebra.dimension());
  for (double& v : c) v = rng.normal();
  return Element::from_raw(algebra, std::move(c));
}

Element random_unit(const Algebra& algebra, Rng& rng) {
  for (;;) {
    Element e = random_element(algebra, rng);
    const double n = e.norm();
    if (n > 1e-8) return (1.0 / n) * e;
  }
}

Element random_unit(const Algebra& algebra, std::uint64_t seed) {
  Rng rng(seed);
  return random_unit(algebra, rng);
}

}  // namespace ncg
