#include "helpers.hpp"

#include "ncg/error.hpp"
#include "ncg/gateaux.hpp"

using namespace ncg;
using namespace ncg::test;

namespace {

const Algebra quat = Algebra::quaternion();

NcPolynomial x_poly() { return NcPolynomial::variable(quat); }

std::vector<Factor> word(std::initializer_list<Factor> f) { return f; }

SlottedTerm term(std::initializer_list<Factor> f) { return *SlottedTerm::make(word(f)); }

bool has_term(const SlottedForm& form, const SlottedTerm& t) {
  return std::find(form.terms().begin(), form.terms().end(), t) != form.terms().end();
}

// n!·a₀·h·a₁·…·h·aₙ computed directly.
Element factorial_word(const Monomial& m, const Element& h) {
  Element prod = m.coeffs()[0];
  for (std::size_t k = 1; k < m.coeffs().size(); ++k) prod = prod * h * m.coeffs()[k];
  return factorial(m.degree()) * prod;
}

}  // namespace

TEST_SUITE("gateaux") {

TEST_CASE("lift") {
  const SlottedForm sq = lift(x_poly() * x_poly());
  CHECK(sq.order() == 0);
  REQUIRE(sq.terms().size() == 1);
  CHECK(sq.terms()[0] == term({Var{}, Var{}}));

  const Element a0 = q(1, 2, 3, 4);
  const SlottedForm c = lift(NcPolynomial::constant(a0));
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0] == term({Coef{a0}}));
  CHECK(lift(NcPolynomial(quat)).empty());
  CHECK(to_polynomial(lift(x_poly())).eval(qj()) == qj());
}

TEST_CASE("slotted terms normalise") {
  CHECK(term({Coef{qi()}, Coef{qj()}, Var{}}) == term({Coef{qk()}, Var{}}));
  CHECK(term({Coef{qone()}, Var{}, Coef{qone()}}) == term({Var{}}));
  CHECK_FALSE(SlottedTerm::make(word({Coef{Element::zero(quat)}, Var{}})).has_value());
  CHECK(term({Var{}, Slot{1}, Var{}}).var_count() == 2);
}

TEST_CASE("differentiate") {
  const SlottedForm d = differentiate(lift(x_poly() * x_poly()));
  CHECK(d.order() == 1);
  CHECK(d.terms().size() == 2);
  CHECK(has_term(d, term({Slot{1}, Var{}})));
  CHECK(has_term(d, term({Var{}, Slot{1}})));
  CHECK(d.to_string() == "h1*x + x*h1");

  const SlottedForm e = differentiate(lift(NcPolynomial::monomial({qi(), qj(), qk()})));
  CHECK(e.terms().size() == 2);
  CHECK(has_term(e, term({Coef{qi()}, Slot{1}, Coef{qj()}, Var{}, Coef{qk()}})));
  CHECK(has_term(e, term({Coef{qi()}, Var{}, Coef{qj()}, Slot{1}, Coef{qk()}})));

  CHECK(differentiate(lift(NcPolynomial::constant(qi()))).empty());
}

TEST_CASE("derivative") {
  Rng rng(30);
  for (std::size_t n = 0; n <= 6; ++n) {
    const Monomial m = random_monomial(quat, n, 1.0, rng);
    CHECK(derivative(NcPolynomial(quat, {m}), n + 1).empty());
  }

  const SlottedForm d2 = derivative(x_poly() * x_poly(), 2);
  CHECK(d2.order() == 2);
  CHECK(d2.terms().size() == 2);
  CHECK(has_term(d2, term({Slot{1}, Slot{2}})));
  CHECK(has_term(d2, term({Slot{2}, Slot{1}})));

  const Element a0 = q(1, 2, 0, -1);
  const Element a1 = q(0, 1, 3, 0.5);
  const SlottedForm d1 = derivative(NcPolynomial::monomial({a0, a1}), 1);
  REQUIRE(d1.terms().size() == 1);
  CHECK(d1.terms()[0] == term({Coef{a0}, Slot{1}, Coef{a1}}));
}

TEST_CASE("apply") {
  const SlottedForm d = derivative(x_poly() * x_poly(), 1);
  const Element h = qj();
  const Element want = hamilton_table_product(h, qi()) + hamilton_table_product(qi(), h);
  CHECK(want.is_zero());
  const Element hs1[] = {h};
  CHECK(apply(d, qi(), hs1).is_zero());

  const SlottedForm d2 = derivative(x_poly() * x_poly(), 2);
  const Element hs2[] = {qj(), qj()};
  Rng rng(31);
  for (int t = 0; t < 5; ++t) CHECK(apply(d2, random_element(quat, rng), hs2) == -2.0 * qone());

  CHECK(apply(SlottedForm(quat, 1), qi(), hs1).is_zero());
  CHECK_THROWS_AS(apply(d2, qi(), hs1), Error);
  const Element wrong[] = {Element::unit(Algebra::complex())};
  CHECK_THROWS_AS(apply(d, qi(), wrong), Error);
}

TEST_CASE("apply_diag") {
  for (const auto& alg : algebras()) {
    Rng rng(32);
    for (std::size_t n = 1; n <= 6; ++n) {
      const Monomial m = random_monomial(alg, n, 1.0, rng);
      const NcPolynomial p(alg, {m});
      const Element h = random_element(alg, rng);
      const SlottedForm dn = derivative(p, n);
      const Element want = factorial_word(m, h);
      const Element x1 = random_element(alg, rng);
      const Element x2 = random_element(alg, rng);
      const Element v1 = apply_diag(dn, x1, h);
      CHECK(near(v1, want, 1e-10));
      CHECK(near(apply_diag(dn, x2, h), v1, 1e-12));

      for (std::size_t k = 0; k < n; ++k) CHECK(apply_diag(derivative(p, k), Element::zero(alg), h).is_zero());
    }
  }
  const NcPolynomial p = random_poly(quat, 3, 1, 1.0, 7);
  CHECK(apply_diag(lift(p), qi(), qj()) == p.eval(qi()));
}

TEST_CASE("n! at the word level") {
  Rng rng(33);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Monomial m = random_monomial(quat, n, 1.0, rng);
    const auto words = diagonal_words(derivative(NcPolynomial(quat, {m}), n));
    REQUIRE(words.size() == 1);
    CHECK(words[0].second == static_cast<std::size_t>(factorial(n)));
    std::vector<Factor> w{Coef{m.coeffs()[0]}};
    for (std::size_t k = 1; k <= n; ++k) {
      w.push_back(Slot{1});
      w.push_back(Coef{m.coeffs()[k]});
    }
    CHECK(words[0].first == *SlottedTerm::make(w));
  }
}

TEST_CASE("first derivative as a linear map") {
  const TensorLinMap l = first_derivative_as_linmap(x_poly() * x_poly(), qi());
  CHECK(l.terms().size() == 2);
  CHECK(apply_equal(l, TensorLinMap(quat, {{qone(), qi()}, {qi(), qone()}}), 0.0));
  CHECK(l.apply(qj()).is_zero());

  const Element a0 = q(1, 2, 0, -1);
  const Element a1 = q(0, 1, 3, 0.5);
  const TensorLinMap m = first_derivative_as_linmap(NcPolynomial::monomial({a0, a1}), q(3, 3, 3, 3));
  REQUIRE(m.terms().size() == 1);
  CHECK(m.terms()[0].first == a0);
  CHECK(m.terms()[0].second == a1);

  for (const auto& alg : algebras()) {
    Rng rng(34);
    for (int t = 0; t < 100; ++t) {
      const NcPolynomial p = random_poly(alg, 4, 1, 1.0, 500 + t);
      const Element x = random_point(alg, rng);
      const Element h = random_element(alg, rng);
      const Element hs[] = {h};
      CHECK(near(first_derivative_as_linmap(p, x).apply(h), apply(derivative(p, 1), x, hs), 1e-12));
    }
  }
}

TEST_CASE("substitute") {
  const NcPolynomial x = x_poly();
  const NcPolynomial one = NcPolynomial::constant(qone());
  CHECK(evaluation_equal(substitute(x * x, x + one), x * x + scale(x, 2) + one, 1e-12, 1, 10));

  const NcPolynomial g = random_poly(quat, 3, 2, 1.0, 8);
  CHECK(evaluation_equal(substitute(g, x), g, 1e-12, 2, 10));
  const NcPolynomial c = NcPolynomial::constant(q(1, 2, 3, 4));
  const NcPolynomial s = substitute(c, g);
  CHECK(s.degree() == 0);
  CHECK(evaluation_equal(s, c, 0.0));

  for (const auto& alg : algebras()) {
    Rng rng(35);
    for (int t = 0; t < 10; ++t) {
      const NcPolynomial gg = random_poly(alg, 3, 1, 1.0, 60 + t);
      const NcPolynomial ff = random_poly(alg, 2, 1, 1.0, 70 + t);
      const Element y = random_point(alg, rng);
      CHECK(near(substitute(gg, ff).eval(y), gg.eval(ff.eval(y)), 1e-12));
    }
  }
}

TEST_CASE("multilinearity of the second derivative") {
  for (const auto& alg : algebras()) {
    Rng rng(36);
    for (int t = 0; t < 50; ++t) {
      const SlottedForm d2 = derivative(random_poly(alg, 4, 1, 1.0, 800 + t), 2);
      const Element x = random_point(alg, rng);
      const Element a = random_element(alg, rng);
      const Element b = random_element(alg, rng);
      const Element c = random_element(alg, rng);
      const double alpha = rng.uniform(-2, 2);
      const double beta = rng.uniform(-2, 2);
      const Element mix = alpha * a + beta * b;
      const Element first[] = {mix, c}, fa[] = {a, c}, fb[] = {b, c};
      CHECK(near(apply(d2, x, first), alpha * apply(d2, x, fa) + beta * apply(d2, x, fb), 1e-12));
      const Element second[] = {c, mix}, sa[] = {c, a}, sb[] = {c, b};
      CHECK(near(apply(d2, x, second), alpha * apply(d2, x, sa) + beta * apply(d2, x, sb), 1e-12));
    }
  }
}

TEST_CASE("sum, product and chain rules") {
  for (const auto& alg : algebras()) {
    Rng rng(37);
    for (int t = 0; t < 100; ++t) {
      const NcPolynomial f = random_poly(alg, 3, 1, 1.0, 2 * t + 1000);
      const NcPolynomial g = random_poly(alg, 3, 1, 1.0, 2 * t + 1001);
      const Element x = random_point(alg, rng);
      const Element h = random_element(alg, rng);
      const Element hs[] = {h};
      const Element df = apply(derivative(f, 1), x, hs);
      const Element dg = apply(derivative(g, 1), x, hs);

      CHECK(near(apply(derivative(f + g, 1), x, hs), df + dg, 1e-12));
      CHECK(near(apply(derivative(f * g, 1), x, hs), df * g.eval(x) + f.eval(x) * dg, 1e-12));

      const NcPolynomial inner = random_poly(alg, 2, 1, 1.0, 3 * t + 5000);
      const Element di[] = {apply(derivative(inner, 1), x, hs)};
      CHECK(near(apply(derivative(substitute(g, inner), 1), x, hs), apply(derivative(g, 1), inner.eval(x), di),
                 1e-10));
    }
  }
}

TEST_CASE("derivative along zero is exactly zero") {
  for (const auto& alg : algebras()) {
    Rng rng(38);
    for (int t = 0; t < 20; ++t) {
      const NcPolynomial p = random_poly(alg, 5, 1, 1.0, 90 + t);
      const Element hs[] = {Element::zero(alg)};
      CHECK(apply(derivative(p, 1), random_point(alg, rng), hs).is_zero());
    }
  }
}

TEST_CASE("tensor product rule through a bilinear pairing") {
  // b(u, v) = u·c·v is bilinear; ∂b(f, g) = b(∂f, g) + b(f, ∂g).
  Rng rng(39);
  const Element c = random_element(quat, rng);
  const NcPolynomial f = random_poly(quat, 3, 1, 1.0, 11);
  const NcPolynomial g = random_poly(quat, 3, 1, 1.0, 12);
  const NcPolynomial paired = f * (c * g);
  for (int t = 0; t < 20; ++t) {
    const Element x = random_point(quat, rng);
    const Element hs[] = {random_element(quat, rng)};
    const Element lhs = apply(derivative(paired, 1), x, hs);
    const Element rhs = apply(derivative(f, 1), x, hs) * c * g.eval(x) + f.eval(x) * c * apply(derivative(g, 1), x, hs);
    CHECK(near(lhs, rhs, 1e-12));
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(6) == 720.0);
  CHECK(factorial(20) == 2432902008176640000.0);
  CHECK_THROWS_AS(factorial(21), Error);
}

}
