#include "ncg/ncpoly.hpp"

#include <algorithm>

#include "ncg/error.hpp"
#include "ncg/random.hpp"

namespace ncg {

constexpr std::size_t kMaxRandomDegree = 8;

Monomial::Monomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::invalid_argument, "monomial needs at least one coefficient");
  for (const auto& c : coeffs_) require_same_algebra(coeffs_.front().algebra(), c.algebra());
}

bool Monomial::has_zero_coeff() const noexcept {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](const Element& c) { return c.is_zero(); });
}

Element Monomial::eval(const Element& x) const {
  require_same_algebra(algebra(), x.algebra());
  // p_k(x) = p_{k-1}(x)·x·a_k
  Element acc = coeffs_.front();
  for (std::size_t k = 1; k < coeffs_.size(); ++k) acc = acc * x * coeffs_[k];
  return acc;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_algebra(a.algebra(), b.algebra());
  std::vector<Element> c;
  c.reserve(a.coeffs().size() + b.coeffs().size() - 1);
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end() - 1);
  c.push_back(a.coeffs().back() * b.coeffs().front());
  c.insert(c.end(), b.coeffs().begin() + 1, b.coeffs().end());
  return Monomial(std::move(c));
}

NcPolynomial::NcPolynomial(Algebra algebra, std::vector<Monomial> terms) : algebra_(algebra) {
  for (auto& m : terms) add_term(std::move(m));
}

NcPolynomial NcPolynomial::constant(const Element& a) {
  NcPolynomial p(a.algebra());
  p.add_term(Monomial({a}));
  return p;
}

NcPolynomial NcPolynomial::variable(const Algebra& algebra) {
  return monomial({Element::unit(algebra), Element::unit(algebra)});
}

NcPolynomial NcPolynomial::monomial(std::vector<Element> coeffs) {
  Monomial m(std::move(coeffs));
  NcPolynomial p(m.algebra());
  p.add_term(std::move(m));
  return p;
}

std::size_t NcPolynomial::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& m : terms_) d = std::max(d, m.degree());
  return d;
}

void NcPolynomial::add_term(Monomial m) {
  require_same_algebra(algebra_, m.algebra());
  if (m.has_zero_coeff()) return;
  terms_.push_back(std::move(m));
}

Element NcPolynomial::eval(const Element& x) const {
  require_same_algebra(algebra_, x.algebra());
  Element sum = Element::zero(algebra_);
  for (const auto& m : terms_) sum += m.eval(x);
  return sum;
}

std::string NcPolynomial::to_string() const {
  if (terms_.empty()) return Element::zero(algebra_).to_string();
  std::string out;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    if (t) out += " + ";
    const auto& c = terms_[t].coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += "*x*";
      out += c[k].to_string();
    }
  }
  return out;
}

std::vector<Element> line_coefficients(const NcPolynomial& p, const Element& x0, const Element& h) {
  require_same_algebra(p.algebra(), x0.algebra());
  require_same_algebra(p.algebra(), h.algebra());
  std::vector<Element> total(p.degree() + 1, Element::zero(p.algebra()));
  for (const auto& m : p.terms()) {
    const auto& a = m.coeffs();
    std::vector<Element> acc{a.front()};
    for (std::size_t k = 1; k < a.size(); ++k) {
      std::vector<Element> next;
      next.reserve(acc.size() + 1);
      for (std::size_t j = 0; j <= acc.size(); ++j) {
        Element c = j < acc.size() ? acc[j] * x0 * a[k] : Element::zero(p.algebra());
        if (j > 0) c += acc[j - 1] * h * a[k];
        next.push_back(std::move(c));
      }
      acc = std::move(next);
    }
    for (std::size_t j = 0; j < acc.size(); ++j) total[j] += acc[j];
  }
  return total;
}

NcPolynomial operator+(const NcPolynomial& p, const NcPolynomial& q) {
  require_same_algebra(p.algebra(), q.algebra());
  NcPolynomial r = p;
  for (const auto& m : q.terms()) r.add_term(m);
  return r;
}

NcPolynomial operator-(const NcPolynomial& p, const NcPolynomial& q) { return p + scale(q, -1.0); }

NcPolynomial operator*(const NcPolynomial& p, const NcPolynomial& q) {
  require_same_algebra(p.algebra(), q.algebra());
  NcPolynomial r(p.algebra());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) r.add_term(a * b);
  return r;
}

NcPolynomial scale(const NcPolynomial& p, double r) {
  NcPolynomial out(p.algebra());
  for (const auto& m : p.terms()) {
    std::vector<Element> c = m.coeffs();
    c.front() = r * c.front();
    out.add_term(Monomial(std::move(c)));
  }
  return out;
}

NcPolynomial operator*(const Element& a, const NcPolynomial& p) {
  return NcPolynomial::constant(a) * p;
}

NcPolynomial shift(const NcPolynomial& p, const Element& y0) {
  require_same_algebra(p.algebra(), y0.algebra());
  // x = y − y0 substituted for every occurrence of the variable.
  const NcPolynomial increment = NcPolynomial::variable(p.algebra()) - NcPolynomial::constant(y0);
  NcPolynomial out(p.algebra());
  for (const auto& m : p.terms()) {
    NcPolynomial acc = NcPolynomial::constant(m.coeffs().front());
    for (std::size_t k = 1; k < m.coeffs().size(); ++k)
      acc = acc * increment * NcPolynomial::constant(m.coeffs()[k]);
    out = out + acc;
  }
  return out;
}

Monomial random_monomial(const Algebra& algebra, std::size_t degree, double coeff_bound, Rng& rng) {
  std::vector<Element> c;
  c.reserve(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) {
    const double radius = coeff_bound * (1.0 - 0.5 * rng.uniform());
    c.push_back(radius * random_unit(algebra, rng));
  }
  return Monomial(std::move(c));
}

NcPolynomial random_poly(const Algebra& algebra, std::size_t max_degree,
                         std::size_t terms_per_degree, double coeff_bound, std::uint64_t seed) {
  if (max_degree > kMaxRandomDegree)
    throw Error(ErrorCode::invalid_argument, "random_poly supports max_degree <= 8");
  if (!(coeff_bound > 0.0)) throw Error(ErrorCode::invalid_argument, "coeff_bound must be positive");
  Rng rng(seed);
  NcPolynomial p(algebra);
  for (std::size_t d = 0; d <= max_degree; ++d)
    for (std::size_t t = 0; t < terms_per_degree; ++t)
      p.add_term(random_monomial(algebra, d, coeff_bound, rng));
  return p;
}

bool evaluation_equal(const NcPolynomial& p, const NcPolynomial& q, double tolerance,
                      std::uint64_t seed, std::size_t points) {
  require_same_algebra(p.algebra(), q.algebra());
  Rng rng(seed);
  for (std::size_t i = 0; i < points; ++i) {
    const Element x = rng.uniform(0.0, 2.0) * random_unit(p.algebra(), rng);
    const Element a = p.eval(x);
    const Element b = q.eval(x);
    if (distance(a, b) > tolerance * (1.0 + std::max(a.norm(), b.norm()))) return false;
  }
  return true;
}

}  // namespace ncg
