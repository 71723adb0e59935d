#include "ncg/linmap.hpp"

#include <algorithm>

#include "ncg/error.hpp"
#include "ncg/random.hpp"

namespace ncg {

TensorLinMap::TensorLinMap(Algebra algebra, std::vector<Term> terms) : algebra_(algebra) {
  terms_.reserve(terms.size());
  for (auto& [l, r] : terms) add_term(std::move(l), std::move(r));
}

TensorLinMap TensorLinMap::identity(const Algebra& algebra) {
  TensorLinMap m(algebra);
  m.add_term(Element::unit(algebra), Element::unit(algebra));
  return m;
}

void TensorLinMap::add_term(Element left, Element right) {
  require_same_algebra(algebra_, left.algebra());
  require_same_algebra(algebra_, right.algebra());
  terms_.emplace_back(std::move(left), std::move(right));
}

Element TensorLinMap::apply(const Element& x) const {
  require_same_algebra(algebra_, x.algebra());
  Element sum = Element::zero(algebra_);
  for (const auto& [l, r] : terms_) sum += l * x * r;
  return sum;
}

double TensorLinMap::term_norm_bound() const {
  double s = 0.0;
  for (const auto& [l, r] : terms_) s += l.norm() * r.norm();
  return s;
}

TensorLinMap compose(const TensorLinMap& outer, const TensorLinMap& inner) {
  require_same_algebra(outer.algebra(), inner.algebra());
  TensorLinMap out(outer.algebra());
  for (const auto& [a, b] : outer.terms())
    for (const auto& [c, d] : inner.terms()) out.add_term(a * c, d * b);
  return out;
}

TensorLinMap add(const TensorLinMap& a, const TensorLinMap& b) {
  require_same_algebra(a.algebra(), b.algebra());
  TensorLinMap out = a;
  for (const auto& [l, r] : b.terms()) out.add_term(l, r);
  return out;
}

TensorLinMap scale(const TensorLinMap& map, double r) {
  TensorLinMap out(map.algebra());
  const Element s = Element::real(map.algebra(), r);
  for (const auto& [a, b] : map.terms()) out.add_term(s * a, b);
  return out;
}

bool apply_equal(const TensorLinMap& a, const TensorLinMap& b, double tolerance) {
  require_same_algebra(a.algebra(), b.algebra());
  const AlgebraDescriptor desc(a.algebra());
  return std::all_of(desc.basis().begin(), desc.basis().end(), [&](const Element& e) {
    return distance(a.apply(e), b.apply(e)) <= tolerance;
  });
}

JacobianMatrix::JacobianMatrix(std::size_t dimension, std::vector<double> entries)
    : dim_(dimension), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_)
    throw Error(ErrorCode::dimension, "jacobian entry count does not match dimension");
}

std::vector<double> JacobianMatrix::apply(std::span<const double> coords) const {
  if (coords.size() != dim_) throw Error(ErrorCode::dimension, "coordinate vector length mismatch");
  std::vector<double> out(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out[i] += entries_[i * dim_ + j] * coords[j];
  return out;
}

JacobianMatrix to_jacobian(const TensorLinMap& map, const AlgebraDescriptor& descriptor) {
  require_same_algebra(map.algebra(), descriptor.algebra());
  const std::size_t d = descriptor.dimension();
  std::vector<double> entries(d * d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    const std::vector<double> col = map.apply(descriptor.basis()[j]).coords();
    for (std::size_t i = 0; i < d; ++i) entries[i * d + j] = col[i];
  }
  return JacobianMatrix(d, std::move(entries));
}

NormEstimate norm_estimate(const TensorLinMap& map, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::invalid_argument, "norm_estimate needs at least one sample");
  Rng rng(seed);
  double best = 0.0;
  if (!map.empty()) {
    for (std::size_t s = 0; s < samples; ++s)
      best = std::max(best, map.apply(random_unit(map.algebra(), rng)).norm());
  }
  return {best, map.term_norm_bound()};
}

}  // namespace ncg
