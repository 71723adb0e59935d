#include "ncg/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "ncg/error.hpp"
#include "ncg/random.hpp"

namespace ncg {

namespace {

constexpr std::size_t kMaxFdOrder = 4;

const Element& require_finite(const Element& e) {
  for (double v : e.raw())
    if (!std::isfinite(v)) throw Error(ErrorCode::numeric_overflow, "non-finite value in finite difference");
  return e;
}

Element call(const AlgebraMap& f, const Element& x) {
  try {
    return require_finite(f(x));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::domain) throw Error(ErrorCode::numeric_overflow, e.what());
    throw;
  }
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// m-th difference quotient with step t. Central: Σⱼ (−1)ʲ C(m,j) f(x + (m/2 − j)·t·h) / tᵐ.
// Forward: the same weights on the points x + (m − j)·t·h.
Element difference_quotient(const AlgebraMap& f, const Element& x, const Element& h, std::size_t m,
                            double t, FdMode mode) {
  const double md = static_cast<double>(m);
  const double offset = mode == FdMode::central ? md / 2.0 : md;
  Element sum = Element::zero(x.algebra());
  for (std::size_t j = 0; j <= m; ++j) {
    const double s = offset - static_cast<double>(j);
    const double w = ((j % 2) ? -1.0 : 1.0) * binomial(m, j);
    const Element point = s == 0.0 ? x : x + (s * t) * h;
    sum += w * call(f, point);
  }
  double tm = 1.0;
  for (std::size_t k = 0; k < m; ++k) tm *= t;
  return require_finite((1.0 / tm) * sum);
}

Element extrapolate(const AlgebraMap& f, const Element& x, const Element& h, std::size_t m,
                    const FdSchedule& schedule) {
  schedule.validate();
  require_same_algebra(x.algebra(), h.algebra());
  std::vector<Element> row;
  row.reserve(schedule.levels);
  double t = schedule.t0;
  for (std::size_t level = 0; level < schedule.levels; ++level, t *= 0.5)
    row.push_back(difference_quotient(f, x, h, m, t, schedule.mode));
  if (!schedule.richardson) return row.back();

  // Neville-style tableau; column j removes the error term of order p·j.
  const double base = schedule.mode == FdMode::central ? 4.0 : 2.0;
  double factor = 1.0;
  for (std::size_t j = 1; j < row.size(); ++j) {
    factor *= base;
    for (std::size_t i = row.size() - 1; i >= j; --i)
      row[i] = row[i] + (1.0 / (factor - 1.0)) * (row[i] - row[i - 1]);
  }
  return require_finite(row.back());
}

}  // namespace

void FdSchedule::validate() const {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw Error(ErrorCode::invalid_argument, "t0 must be positive");
  if (levels < 1) throw Error(ErrorCode::invalid_argument, "schedule needs at least one level");
}

Element directional_fd(const AlgebraMap& f, const Element& x, const Element& h, const FdSchedule& schedule) {
  return extrapolate(f, x, h, 1, schedule);
}

Element higher_fd(const AlgebraMap& f, const Element& x, const Element& h, std::size_t order,
                  const FdSchedule& schedule) {
  if (order > kMaxFdOrder) throw Error(ErrorCode::invalid_argument, "higher_fd supports order <= 4");
  if (order == 0) return call(f, x);
  return extrapolate(f, x, h, order, schedule);
}

std::vector<ProbeSample> infinitesimal_order_probe(const AlgebraMap& f, const Element& x0,
                                                   const Element& h, std::size_t n,
                                                   std::span<const double> t_schedule) {
  require_same_algebra(x0.algebra(), h.algebra());
  require_decreasing_schedule(t_schedule);
  std::vector<ProbeSample> out;
  out.reserve(t_schedule.size());
  for (double t : t_schedule) {
    double tn = 1.0;
    for (std::size_t k = 0; k < n; ++k) tn *= t;
    out.push_back({t, call(f, x0 + t * h).norm() / tn});
  }
  return out;
}

std::vector<ContinuitySample> continuity_probe(const AlgebraMap& f, const Element& x,
                                               std::span<const double> deltas, std::size_t samples,
                                               std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::invalid_argument, "continuity_probe needs samples >= 1");
  const Element fx = call(f, x);
  std::vector<ContinuitySample> out;
  out.reserve(deltas.size());
  for (double delta : deltas) {
    if (!(delta >= 0.0)) throw Error(ErrorCode::invalid_argument, "deltas must be nonnegative");
    Rng rng(seed);
    double sup = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      const double r = s < (samples + 1) / 2 ? 1.0 : rng.uniform();
      const Element a = (delta * r) * random_unit(x.algebra(), rng);
      sup = std::max(sup, distance(call(f, x + a), fx));
    }
    out.push_back({delta, sup});
  }
  return out;
}

AlgebraMap as_map(const NcPolynomial& p) {
  return [p](const Element& x) { return p.eval(x); };
}

}  // namespace ncg
