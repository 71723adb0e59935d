#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/linmap.hpp"
#include "ncg/ncpoly.hpp"

namespace ncg {

struct Var {
  friend bool operator==(Var, Var) = default;
};
/// Increment argument hᵢ, 1-based. Slot(i) is introduced by the i-th
/// differentiation step.
struct Slot {
  std::size_t index;
  friend bool operator==(Slot, Slot) = default;
};
struct Coef {
  Element value;
  friend bool operator==(const Coef&, const Coef&) = default;
};

using Factor = std::variant<Coef, Var, Slot>;

/// One summand of a multilinear form: an ordered product of factors.
class SlottedTerm {
 public:
  /// Merges adjacent coefficients and drops unit coefficients. Returns
  /// nullopt when a coefficient is exactly zero (the term vanishes).
  static std::optional<SlottedTerm> make(std::vector<Factor> word);

  const std::vector<Factor>& word() const noexcept { return word_; }
  std::size_t var_count() const noexcept;

  friend bool operator==(const SlottedTerm&, const SlottedTerm&) = default;

 private:
  explicit SlottedTerm(std::vector<Factor> word) : word_(std::move(word)) {}
  std::vector<Factor> word_;
};

/// Order-n multilinear form (x; h₁,…,hₙ) ↦ Σ words. Order 0 forms are the
/// polynomials themselves. Every term holds each Slot(1..n) exactly once.
class SlottedForm {
 public:
  SlottedForm(Algebra algebra, std::size_t order) : algebra_(algebra), order_(order) {}

  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t order() const noexcept { return order_; }
  const std::vector<SlottedTerm>& terms() const noexcept { return terms_; }
  /// Structural zero: no terms survive.
  bool empty() const noexcept { return terms_.empty(); }

  void add_term(SlottedTerm term);

  /// Text such as "i*h1*j*x*k + i*x*j*h1*k".
  std::string to_string() const;

 private:
  Algebra algebra_;
  std::size_t order_;
  std::vector<SlottedTerm> terms_;
};

SlottedForm lift(const NcPolynomial& p);
/// Each Var occurrence in turn becomes Slot(order+1); the copies are summed.
SlottedForm differentiate(const SlottedForm& form);
/// m-fold differentiate of lift(p).
SlottedForm derivative(const NcPolynomial& p, std::size_t order);

Element apply(const SlottedForm& form, const Element& x, std::span<const Element> hs);
Element apply_diag(const SlottedForm& form, const Element& x, const Element& h);

/// Order-0 form back to a polynomial.
NcPolynomial to_polynomial(const SlottedForm& form);
/// Polynomial in h equal to apply_diag(form, x, h).
NcPolynomial diagonal_polynomial(const SlottedForm& form, const Element& x);

/// Words after identifying all slots, with multiplicities. Used to check
/// identities such as ∂ⁿpₙ∘hⁿ = n!·a₀h…haₙ at the word level.
std::vector<std::pair<SlottedTerm, std::size_t>> diagonal_words(const SlottedForm& form);

/// First derivative at x as a sum of (left, right) components.
TensorLinMap first_derivative_as_linmap(const NcPolynomial& p, const Element& x);

/// g∘f as a polynomial: every Var in g replaced by f.
NcPolynomial substitute(const NcPolynomial& g, const NcPolynomial& f);

/// n! as a double; n ≤ 20 so the value is exact.
double factorial(std::size_t n);

}  // namespace ncg
