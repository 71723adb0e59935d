#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ncg/gateaux.hpp"

namespace ncg {

/// Truncated expansion Σₖ₌₀ⁿ (k!)⁻¹·∂ᵏf(x₀)∘(y − x₀)ᵏ.
class TaylorExpansion {
 public:
  TaylorExpansion(Element center, std::vector<SlottedForm> forms);

  const Element& center() const noexcept { return center_; }
  std::size_t order() const noexcept { return forms_.size() - 1; }
  const std::vector<SlottedForm>& forms() const noexcept { return forms_; }

  /// (k!)⁻¹·∂ᵏf(x₀)∘(y − x₀)ᵏ for a single k.
  Element term(std::size_t k, const Element& y) const;
  /// (k!)⁻¹·∂ᵏf(x₀)∘hᵏ, the coefficient of tᵏ in t ↦ eval(x₀ + t·h).
  Element increment_term(std::size_t k, const Element& h) const;
  Element eval(const Element& y) const;

  /// The Taylor polynomial as a polynomial in y.
  NcPolynomial to_polynomial() const;

 private:
  Element center_;
  std::vector<SlottedForm> forms_;
};

TaylorExpansion expand(const NcPolynomial& f, const Element& center, std::size_t order);

/// Expansions of increasing order around one center. Successive calls to
/// next() differentiate the previous top form once instead of starting over.
class TaylorSeries {
 public:
  TaylorSeries(NcPolynomial f, Element center);
  TaylorExpansion next();

 private:
  Element center_;
  std::vector<SlottedForm> forms_;
};

struct ProbeSample {
  double t;
  double ratio;
};

/// |f(x₀+th) − e(x₀+th)| / tⁿ over the schedule, n = e.order(). Both sides
/// are expanded as polynomials in t and subtracted coefficientwise before
/// evaluation, which avoids cancellation between two nearly equal values.
std::vector<ProbeSample> remainder_probe(const NcPolynomial& f, const TaylorExpansion& e,
                                         const Element& h, std::span<const double> t_schedule);

/// Throws unless the schedule is positive and strictly decreasing.
void require_decreasing_schedule(std::span<const double> t_schedule);

}  // namespace ncg
