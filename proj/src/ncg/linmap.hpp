#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ncg/algebra.hpp"

namespace ncg {

/// Linear map x ↦ Σ leftᵢ·x·rightᵢ, i.e. an element of A⊗A acting on A.
/// The empty term list is the zero map. No canonical tensor form is kept;
/// two maps are the same map when they agree on the basis.
class TensorLinMap {
 public:
  using Term = std::pair<Element, Element>;

  explicit TensorLinMap(Algebra algebra) : algebra_(algebra) {}
  TensorLinMap(Algebra algebra, std::vector<Term> terms);

  static TensorLinMap identity(const Algebra& algebra);

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add_term(Element left, Element right);

  Element apply(const Element& x) const;

  /// Σ |leftᵢ|·|rightᵢ|, an upper bound on the operator norm.
  double term_norm_bound() const;

 private:
  Algebra algebra_;
  std::vector<Term> terms_;
};

/// (L1 ∘ L2)(x) = L1(L2(x)); terms are (a·c, d·b) for (a,b) ∈ L1, (c,d) ∈ L2.
TensorLinMap compose(const TensorLinMap& outer, const TensorLinMap& inner);
TensorLinMap add(const TensorLinMap& a, const TensorLinMap& b);
TensorLinMap scale(const TensorLinMap& map, double r);

/// Agreement on every basis vector, which decides equality of linear maps.
bool apply_equal(const TensorLinMap& a, const TensorLinMap& b, double tolerance);

/// Matrix of a linear map relative to the canonical basis; column j holds
/// the coordinates of L(eⱼ).
class JacobianMatrix {
 public:
  JacobianMatrix(std::size_t dimension, std::vector<double> entries);

  std::size_t dimension() const noexcept { return dim_; }
  double operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  std::vector<double> apply(std::span<const double> coords) const;

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

JacobianMatrix to_jacobian(const TensorLinMap& map, const AlgebraDescriptor& descriptor);

struct NormEstimate {
  double sampled;      // max |L(u)| over sampled unit u; a lower bound
  double upper_bound;  // Σ |aᵢ||bᵢ|
};

NormEstimate norm_estimate(const TensorLinMap& map, std::size_t samples, std::uint64_t seed);

}  // namespace ncg
