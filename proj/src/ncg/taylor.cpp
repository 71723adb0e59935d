#include "ncg/taylor.hpp"

#include <cmath>

#include "ncg/error.hpp"

namespace ncg {

TaylorExpansion::TaylorExpansion(Element center, std::vector<SlottedForm> forms)
    : center_(std::move(center)), forms_(std::move(forms)) {
  if (forms_.empty()) throw Error(ErrorCode::invalid_argument, "expansion needs the order-0 form");
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    require_same_algebra(center_.algebra(), forms_[k].algebra());
    if (forms_[k].order() != k) throw Error(ErrorCode::arity, "expansion forms must have orders 0..n");
  }
}

Element TaylorExpansion::term(std::size_t k, const Element& y) const {
  require_same_algebra(center_.algebra(), y.algebra());
  if (k > order()) throw Error(ErrorCode::arity, "term order exceeds expansion order");
  return increment_term(k, y - center_);
}

Element TaylorExpansion::increment_term(std::size_t k, const Element& h) const {
  require_same_algebra(center_.algebra(), h.algebra());
  if (k > order()) throw Error(ErrorCode::arity, "term order exceeds expansion order");
  return (1.0 / factorial(k)) * apply_diag(forms_[k], center_, h);
}

Element TaylorExpansion::eval(const Element& y) const {
  Element sum = Element::zero(center_.algebra());
  for (std::size_t k = 0; k <= order(); ++k) sum += term(k, y);
  return sum;
}

NcPolynomial TaylorExpansion::to_polynomial() const {
  // Polynomial in the increment h, then h = y − x₀.
  NcPolynomial in_h(center_.algebra());
  for (std::size_t k = 0; k <= order(); ++k)
    in_h = in_h + scale(diagonal_polynomial(forms_[k], center_), 1.0 / factorial(k));
  return shift(in_h, center_);
}

TaylorExpansion expand(const NcPolynomial& f, const Element& center, std::size_t order) {
  require_same_algebra(f.algebra(), center.algebra());
  std::vector<SlottedForm> forms;
  forms.reserve(order + 1);
  forms.push_back(lift(f));
  for (std::size_t k = 1; k <= order; ++k) forms.push_back(differentiate(forms.back()));
  return TaylorExpansion(center, std::move(forms));
}

TaylorSeries::TaylorSeries(NcPolynomial f, Element center) : center_(std::move(center)) {
  require_same_algebra(f.algebra(), center_.algebra());
  forms_.push_back(lift(f));
}

TaylorExpansion TaylorSeries::next() {
  TaylorExpansion e(center_, forms_);
  forms_.push_back(differentiate(forms_.back()));
  return e;
}

void require_decreasing_schedule(std::span<const double> t_schedule) {
  if (t_schedule.empty()) throw Error(ErrorCode::invalid_argument, "empty t schedule");
  for (std::size_t i = 0; i < t_schedule.size(); ++i) {
    if (!(t_schedule[i] > 0.0) || !std::isfinite(t_schedule[i]))
      throw Error(ErrorCode::invalid_argument, "t schedule entries must be positive");
    if (i && !(t_schedule[i] < t_schedule[i - 1]))
      throw Error(ErrorCode::invalid_argument, "t schedule must be strictly decreasing");
  }
}

std::vector<ProbeSample> remainder_probe(const NcPolynomial& f, const TaylorExpansion& e,
                                         const Element& h, std::span<const double> t_schedule) {
  require_same_algebra(f.algebra(), h.algebra());
  require_decreasing_schedule(t_schedule);
  const std::size_t n = e.order();
  std::vector<Element> diff = line_coefficients(f, e.center(), h);
  if (diff.size() < n + 1) diff.resize(n + 1, Element::zero(f.algebra()));
  for (std::size_t k = 0; k <= n; ++k) diff[k] = diff[k] - e.increment_term(k, h);

  std::vector<ProbeSample> out;
  out.reserve(t_schedule.size());
  for (double t : t_schedule) {
    // Σₖ dₖ·t^(k−n)
    Element sum = Element::zero(f.algebra());
    for (std::size_t k = 0; k < diff.size(); ++k) {
      double w = 1.0;
      if (k < n) {
        for (std::size_t j = k; j < n; ++j) w *= t;
        w = 1.0 / w;
      } else {
        for (std::size_t j = n; j < k; ++j) w *= t;
      }
      sum += w * diff[k];
    }
    out.push_back({t, sum.norm()});
  }
  return out;
}

}  // namespace ncg
