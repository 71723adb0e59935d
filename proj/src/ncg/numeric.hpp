#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/taylor.hpp"

namespace ncg {

using AlgebraMap = std::function<Element(const Element&)>;

enum class FdMode { forward, central };

struct FdSchedule {
  double t0 = 1e-2;
  std::size_t levels = 3;
  FdMode mode = FdMode::central;
  bool richardson = true;

  void validate() const;
};

/// Difference quotient of f along h. Level ℓ uses step t₀/2^ℓ; with
/// Richardson the levels are combined into a tableau that cancels the
/// leading error terms (powers of t for forward, of t² for central).
/// Without it the finest-level quotient is returned.
Element directional_fd(const AlgebraMap& f, const Element& x, const Element& h,
                       const FdSchedule& schedule = {});

/// Estimate of ∂ᵐf(x)∘hᵐ by the (m+1)-point central stencil on x + s·t·h,
/// s ∈ {−m/2, …, m/2}, with the same schedule handling. m ≤ 4.
Element higher_fd(const AlgebraMap& f, const Element& x, const Element& h, std::size_t order,
                  const FdSchedule& schedule = {});

/// |f(x₀ + t·h)| / tⁿ over the schedule.
std::vector<ProbeSample> infinitesimal_order_probe(const AlgebraMap& f, const Element& x0,
                                                   const Element& h, std::size_t n,
                                                   std::span<const double> t_schedule);

struct ContinuitySample {
  double delta;
  double sup;  // max |f(x+a) − f(x)| over sampled |a| ≤ δ
};

/// Sampled modulus of continuity. Increments are δ·r·u with u on the unit
/// sphere and r = 1 for the first half of the samples, uniform in [0,1]
/// afterwards.
std::vector<ContinuitySample> continuity_probe(const AlgebraMap& f, const Element& x,
                                               std::span<const double> deltas,
                                               std::size_t samples = 256, std::uint64_t seed = 0);

AlgebraMap as_map(const NcPolynomial& p);

}  // namespace ncg
