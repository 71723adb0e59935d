#pragma once

#include <cstdint>
#include <vector>

#include "ncg/algebra.hpp"

namespace ncg {

/// a₀·x·a₁·x·…·x·aₖ. The coefficient list always has degree()+1 entries.
class Monomial {
 public:
  explicit Monomial(std::vector<Element> coeffs);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
  const Algebra& algebra() const noexcept { return coeffs_.front().algebra(); }
  bool has_zero_coeff() const noexcept;

  Element eval(const Element& x) const;

 private:
  std::vector<Element> coeffs_;
};

/// [a₀…aₘ]·[b₀…bₙ] = [a₀,…,aₘ·b₀,…,bₙ].
Monomial operator*(const Monomial& a, const Monomial& b);

/// Finite sum of monomials kept as a raw term list. Terms with an exactly
/// zero coefficient are dropped on insertion; no like-term merging is done.
class NcPolynomial {
 public:
  explicit NcPolynomial(Algebra algebra) : algebra_(algebra) {}
  NcPolynomial(Algebra algebra, std::vector<Monomial> terms);

  static NcPolynomial constant(const Element& a);
  static NcPolynomial variable(const Algebra& algebra);
  static NcPolynomial monomial(std::vector<Element> coeffs);

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Maximum term degree; 0 for the zero polynomial.
  std::size_t degree() const noexcept;

  void add_term(Monomial m);
  Element eval(const Element& x) const;

  /// Parser-compatible text, e.g. "(1+0i+0j+0k)*x*(0+1i+0j+0k) + …".
  std::string to_string() const;

 private:
  Algebra algebra_;
  std::vector<Monomial> terms_;
};

NcPolynomial operator+(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial operator-(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial operator*(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial scale(const NcPolynomial& p, double r);
/// Left multiplication by an algebra element: a·p.
NcPolynomial operator*(const Element& a, const NcPolynomial& p);

/// q with q(y) = p(y − y0).
NcPolynomial shift(const NcPolynomial& p, const Element& y0);

/// Coefficients c₀…c_d of the polynomial t ↦ p(x0 + t·h), d = degree(p).
std::vector<Element> line_coefficients(const NcPolynomial& p, const Element& x0, const Element& h);

/// Every degree 0..max_degree gets terms_per_degree monomials whose
/// coefficients have norm in (coeff_bound/2, coeff_bound].
NcPolynomial random_poly(const Algebra& algebra, std::size_t max_degree,
                         std::size_t terms_per_degree, double coeff_bound, std::uint64_t seed);

class Rng;
Monomial random_monomial(const Algebra& algebra, std::size_t degree, double coeff_bound, Rng& rng);

/// Evaluation-based equality at `points` random points of norm ≤ 2. This is a
/// probabilistic check: distinct polynomials agree on a measure-zero set.
bool evaluation_equal(const NcPolynomial& p, const NcPolynomial& q, double tolerance,
                      std::uint64_t seed = 0, std::size_t points = 20);

}  // namespace ncg
