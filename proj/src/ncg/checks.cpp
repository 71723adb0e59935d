#include "ncg/checks.hpp"

#include <algorithm>
#include <cmath>

#include "ncg/error.hpp"
#include "ncg/gateaux.hpp"
#include "ncg/random.hpp"
#include "ncg/taylor.hpp"

namespace ncg {

namespace {

constexpr std::size_t kCases = 20;
constexpr std::size_t kMaxMonomialDegree = 6;

Element random_point(const Algebra& algebra, Rng& rng) {
  return rng.uniform(0.5, 1.5) * random_unit(algebra, rng);
}

double mixed_error(const Element& got, const Element& want) {
  return distance(got, want) / std::max(1.0, want.norm());
}

NcPolynomial random_small_poly(const Algebra& algebra, Rng& rng, std::size_t max_degree) {
  const std::size_t degree = rng.next() % (max_degree + 1);
  return random_poly(algebra, degree, 1, 1.0, rng.next());
}

TheoremResult finish(std::string name, double max_error, double tolerance, std::size_t cases) {
  return {std::move(name), max_error <= tolerance, max_error, tolerance, cases};
}

std::vector<TheoremResult> monomial_suite(const Algebra& algebra, Rng& rng) {
  std::vector<TheoremResult> out;

  double nonempty = 0.0;
  for (std::size_t c = 0; c < kCases; ++c) {
    const std::size_t n = rng.next() % (kMaxMonomialDegree + 1);
    const NcPolynomial p(algebra, {random_monomial(algebra, n, 1.0, rng)});
    if (!derivative(p, n + 1).empty()) nonempty += 1.0;
  }
  out.push_back(finish("derivative of order n+1 of a degree-n monomial vanishes", nonempty, 0.0, kCases));

  double zero_err = 0.0;
  std::size_t zero_cases = 0;
  for (std::size_t n = 1; n <= kMaxMonomialDegree; ++n) {
    const NcPolynomial p(algebra, {random_monomial(algebra, n, 1.0, rng)});
    for (std::size_t m = 0; m < n; ++m) {
      const Element h = random_point(algebra, rng);
      zero_err = std::max(zero_err, apply_diag(derivative(p, m), Element::zero(algebra), h).norm());
      ++zero_cases;
    }
  }
  out.push_back(finish("derivative of order m<n of a degree-n monomial vanishes at 0", zero_err, 0.0, zero_cases));

  double fact_err = 0.0;
  for (std::size_t c = 0; c < kCases; ++c) {
    const std::size_t n = 1 + c % kMaxMonomialDegree;
    const Monomial m = random_monomial(algebra, n, 1.0, rng);
    const NcPolynomial p(algebra, {m});
    const Element h = random_point(algebra, rng);
    Element want = m.coeffs().front();
    double bound = m.coeffs().front().norm();
    for (std::size_t k = 1; k <= n; ++k) {
      want = want * h * m.coeffs()[k];
      bound *= h.norm() * m.coeffs()[k].norm();
    }
    want = factorial(n) * want;
    bound *= factorial(n);
    const SlottedForm d = derivative(p, n);
    for (int rep = 0; rep < 2; ++rep) {
      const Element x = random_point(algebra, rng);
      fact_err = std::max(fact_err, distance(apply_diag(d, x, h), want) / bound);
    }
  }
  out.push_back(finish("n-th derivative of a degree-n monomial is n!*a0*h*a1*...*h*an", fact_err, 1e-10, kCases));
  return out;
}

std::vector<TheoremResult> leibniz_suite(const Algebra& algebra, Rng& rng) {
  double sum_err = 0.0;
  double prod_err = 0.0;
  double zero_dir = 0.0;
  for (std::size_t c = 0; c < kCases; ++c) {
    const NcPolynomial f = random_small_poly(algebra, rng, 3);
    const NcPolynomial g = random_small_poly(algebra, rng, 3);
    const Element x = random_point(algebra, rng);
    const Element h = random_point(algebra, rng);
    const std::vector<Element> hs{h};
    const Element df = apply(derivative(f, 1), x, hs);
    const Element dg = apply(derivative(g, 1), x, hs);
    sum_err = std::max(sum_err, mixed_error(apply(derivative(f + g, 1), x, hs), df + dg));
    prod_err = std::max(prod_err, mixed_error(apply(derivative(f * g, 1), x, hs),
                                              df * g.eval(x) + f.eval(x) * dg));
    zero_dir = std::max(zero_dir, apply_diag(derivative(f, 1), x, Element::zero(algebra)).norm());
  }
  return {finish("derivative of a sum is the sum of derivatives", sum_err, 1e-12, kCases),
          finish("product rule d(fg) = df*g + f*dg", prod_err, 1e-12, kCases),
          finish("derivative applied to h = 0 is 0", zero_dir, 0.0, kCases)};
}

std::vector<TheoremResult> chain_suite(const Algebra& algebra, Rng& rng) {
  double err = 0.0;
  for (std::size_t c = 0; c < kCases; ++c) {
    const NcPolynomial g = random_small_poly(algebra, rng, 3);
    const NcPolynomial f = random_small_poly(algebra, rng, 3);
    const Element x = random_point(algebra, rng);
    const Element h = random_point(algebra, rng);
    const Element inner = apply_diag(derivative(f, 1), x, h);
    const Element want = apply_diag(derivative(g, 1), f.eval(x), inner);
    err = std::max(err, mixed_error(apply_diag(derivative(substitute(g, f), 1), x, h), want));
  }
  return {finish("chain rule d(g(f(x)))h = dg(f(x))(df(x)h)", err, 1e-10, kCases)};
}

std::vector<TheoremResult> taylor_suite(const Algebra& algebra, Rng& rng) {
  double exact_err = 0.0;
  for (std::size_t c = 0; c < kCases; ++c) {
    const std::size_t n = c % (kMaxMonomialDegree + 1);
    const NcPolynomial f = random_poly(algebra, n, 1, 1.0, rng.next());
    const TaylorExpansion e = expand(f, random_point(algebra, rng), n);
    for (int k = 0; k < 10; ++k) {
      const Element y = random_point(algebra, rng);
      exact_err = std::max(exact_err, mixed_error(e.eval(y), f.eval(y)));
    }
  }

  std::vector<double> ts;
  for (int k = 4; k <= 10; ++k) ts.push_back(std::ldexp(1.0, -k));
  double spread = 0.0;
  for (std::size_t c = 0; c < kCases; ++c) {
    const std::size_t n = c % 4;
    const NcPolynomial f = random_poly(algebra, n + 1, 1, 1.0, rng.next());
    const TaylorExpansion e = expand(f, random_point(algebra, rng), n);
    const auto probe = remainder_probe(f, e, random_unit(algebra, rng), ts);
    const double first = probe.front().ratio / probe.front().t;
    for (const auto& s : probe) spread = std::max(spread, std::abs(s.ratio / s.t / first - 1.0));
  }
  return {finish("Taylor polynomial of order n reproduces a degree-n polynomial", exact_err, 1e-10, kCases),
          finish("remainder of order n+1: ratio(t)/t constant for t = 2^-4..2^-10", spread, 0.05, kCases)};
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names{"monomial", "leibniz", "chain", "taylor"};
  return names;
}

std::vector<TheoremResult> run_check_suite(const std::string& suite, const Algebra& algebra,
                                           std::uint64_t seed) {
  Rng rng(seed);
  if (suite == "monomial") return monomial_suite(algebra, rng);
  if (suite == "leibniz") return leibniz_suite(algebra, rng);
  if (suite == "chain") return chain_suite(algebra, rng);
  if (suite == "taylor") return taylor_suite(algebra, rng);
  throw Error(ErrorCode::invalid_argument,
              "unknown check suite '" + suite + "' (expected monomial, leibniz, chain or taylor)");
}

}  // namespace ncg
