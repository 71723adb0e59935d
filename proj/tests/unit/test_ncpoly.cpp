#include "helpers.hpp"

#include "ncg/error.hpp"
#include "ncg/ncpoly.hpp"

using namespace ncg;
using namespace ncg::test;

namespace {

const Algebra quat = Algebra::quaternion();

// Interleaved product a₀·x·a₁·…·x·aₖ written out left to right.
Element brute_eval(const NcPolynomial& p, const Element& x) {
  Element sum = Element::zero(p.algebra());
  for (const auto& m : p.terms()) {
    Element prod = m.coeffs()[0];
    for (std::size_t k = 1; k < m.coeffs().size(); ++k) prod = prod * x * m.coeffs()[k];
    sum += prod;
  }
  return sum;
}

}  // namespace

TEST_SUITE("ncpoly") {

TEST_CASE("evaluation") {
  const Monomial m({qi(), qj(), qk()});
  CHECK(m.degree() == 2);
  const Element ijk = hamilton_table_product(hamilton_table_product(qi(), qj()), qk());
  CHECK(ijk == -qone());
  CHECK(m.eval(qone()) == ijk);

  const Element a0 = q(1, 2, 3, 4);
  CHECK(NcPolynomial::constant(a0).eval(q(5, 6, 7, 8)) == a0);
  CHECK(NcPolynomial::monomial({qone(), qone(), qone()}).eval(qi()) == -qone());
  CHECK(NcPolynomial(quat).eval(qi()).is_zero());
  CHECK_THROWS_AS(NcPolynomial::variable(quat).eval(Element::unit(Algebra::complex())), Error);
}

TEST_CASE("monomial recursion") {
  for (const auto& alg : algebras()) {
    Rng rng(20);
    for (int t = 0; t < 20; ++t) {
      const Monomial m = random_monomial(alg, 1 + t % 5, 1.0, rng);
      const Element x = random_element(alg, rng);
      std::vector<Element> head(m.coeffs().begin(), m.coeffs().end() - 1);
      CHECK(m.eval(x) == Monomial(head).eval(x) * x * m.coeffs().back());
    }
  }
}

TEST_CASE("products") {
  const NcPolynomial x = NcPolynomial::variable(quat);
  const NcPolynomial x2 = x * x;
  REQUIRE(x2.terms().size() == 1);
  CHECK(x2.terms()[0].coeffs() == std::vector<Element>{qone(), qone(), qone()});

  const NcPolynomial ij = NcPolynomial::constant(qi()) * NcPolynomial::constant(qj());
  REQUIRE(ij.terms().size() == 1);
  CHECK(ij.terms()[0].coeffs() == std::vector<Element>{hamilton_table_product(qi(), qj())});

  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const NcPolynomial p = random_poly(quat, t % 4, 1, 1.0, 1000 + t);
    const NcPolynomial r = random_poly(quat, (t / 4) % 4, 1, 1.0, 2000 + t);
    const Element y = random_point(quat, rng);
    CHECK(near((p * r).eval(y), brute_eval(p, y) * brute_eval(r, y), 1e-12));
  }
}

TEST_CASE("ring axioms at the evaluation level") {
  for (const auto& alg : algebras()) {
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
      const NcPolynomial a = random_poly(alg, 2, 1, 1.0, 3 * t);
      const NcPolynomial b = random_poly(alg, 2, 1, 1.0, 3 * t + 1);
      const NcPolynomial c = random_poly(alg, 2, 1, 1.0, 3 * t + 2);
      const Element y = random_point(alg, rng);
      CHECK(near(((a * b) * c).eval(y), (a * (b * c)).eval(y), 1e-12));
      CHECK(near((a * (b + c)).eval(y), (a * b + a * c).eval(y), 1e-12));
      CHECK(near((a + b).eval(y), a.eval(y) + b.eval(y), 1e-12));
      CHECK(near((a - a).eval(y), Element::zero(alg), 1e-12));
      CHECK(near(scale(a, 3).eval(y), 3.0 * a.eval(y), 1e-12));
    }
  }
}

TEST_CASE("zero coefficients are dropped") {
  NcPolynomial p(quat);
  p.add_term(Monomial({qi(), Element::zero(quat), qj()}));
  CHECK(p.is_zero());
  CHECK(scale(NcPolynomial::variable(quat), 0).is_zero());
}

TEST_CASE("shift") {
  const NcPolynomial x = NcPolynomial::variable(quat);
  const NcPolynomial one = NcPolynomial::constant(qone());
  const NcPolynomial expected = x * x - scale(x, 2) + one;
  CHECK(evaluation_equal(shift(x * x, qone()), expected, 1e-12, 1, 10));

  const NcPolynomial p = random_poly(quat, 3, 2, 1.0, 5);
  CHECK(evaluation_equal(shift(p, Element::zero(quat)), p, 1e-12, 2, 10));

  const NcPolynomial ixj = NcPolynomial::monomial({qi(), qj()});
  const NcPolynomial s = shift(ixj, qk());
  const NcPolynomial want = ixj - NcPolynomial::constant(qi() * qk() * qj());
  CHECK(evaluation_equal(s, want, 1e-12, 3, 10));
  CHECK(s.eval(qk()).is_zero());

  for (const auto& alg : algebras()) {
    Rng rng(23);
    for (int t = 0; t < 10; ++t) {
      const NcPolynomial r = random_poly(alg, 4, 1, 1.0, 40 + t);
      const Element y0 = random_point(alg, rng);
      CHECK(evaluation_equal(shift(shift(r, y0), -y0), r, 1e-10, t, 10));
      const Element y = random_point(alg, rng);
      CHECK(near(shift(r, y0).eval(y), r.eval(y - y0), 1e-12));
    }
  }
}

TEST_CASE("line coefficients") {
  for (const auto& alg : algebras()) {
    Rng rng(24);
    for (int t = 0; t < 10; ++t) {
      const NcPolynomial p = random_poly(alg, 4, 2, 1.0, 50 + t);
      const Element x0 = random_point(alg, rng);
      const Element h = random_element(alg, rng);
      const auto c = line_coefficients(p, x0, h);
      CHECK(c.size() == 5);
      CHECK(c[0] == p.eval(x0));
      for (double s : {-1.5, 0.25, 2.0}) {
        Element sum = Element::zero(alg);
        double power = 1.0;
        for (const auto& ck : c) {
          sum += power * ck;
          power *= s;
        }
        CHECK(near(sum, p.eval(x0 + s * h), 1e-12));
      }
    }
  }
  const auto z = line_coefficients(NcPolynomial(quat), qi(), qj());
  REQUIRE(z.size() == 1);
  CHECK(z[0].is_zero());
}

TEST_CASE("random polynomials") {
  const NcPolynomial a = random_poly(quat, 4, 2, 1.0, 99);
  const NcPolynomial b = random_poly(quat, 4, 2, 1.0, 99);
  REQUIRE(a.terms().size() == b.terms().size());
  for (std::size_t t = 0; t < a.terms().size(); ++t) CHECK(a.terms()[t].coeffs() == b.terms()[t].coeffs());
  CHECK(a.degree() == 4);

  const NcPolynomial c = random_poly(quat, 0, 3, 1.0, 1);
  CHECK(c.degree() == 0);

  for (const auto& alg : algebras()) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const NcPolynomial r = random_poly(alg, 3, 1, 1.0, seed);
      for (const auto& m : r.terms())
        for (const auto& co : m.coeffs()) CHECK(co.norm() <= 1.0 + 1e-12);
    }
  }
  CHECK_THROWS_AS(random_poly(quat, 9, 1, 1.0, 0), Error);
}

TEST_CASE("evaluation equality detects differences") {
  const NcPolynomial x = NcPolynomial::variable(quat);
  const NcPolynomial ix = NcPolynomial::monomial({qi(), qone()});
  const NcPolynomial xi = NcPolynomial::monomial({qone(), qi()});
  CHECK_FALSE(evaluation_equal(ix, xi, 1e-10));
  CHECK(evaluation_equal(x * x, x * x, 0.0));
}

TEST_CASE("text form") {
  const NcPolynomial p = NcPolynomial::monomial({qi(), qj()}) + NcPolynomial::constant(qone());
  CHECK(p.to_string() == "(0+1i+0j+0k)*x*(0+0i+1j+0k) + (1+0i+0j+0k)");
  CHECK(NcPolynomial(quat).to_string() == "(0+0i+0j+0k)");
}

}
