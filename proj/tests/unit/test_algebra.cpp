#include "helpers.hpp"

#include "ncg/error.hpp"

using namespace ncg;
using namespace ncg::test;

TEST_SUITE("algebra") {

TEST_CASE("addition is coordinatewise") {
  CHECK(qone() + qi() == q(1, 1, 0, 0));
  CHECK(mat(2, {1, 0, 0, 1}) + mat(2, {0, 1, 1, 0}) == mat(2, {1, 1, 1, 1}));

  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const Element a = random_element(Algebra::quaternion(), rng);
    CHECK(a + Element::zero(Algebra::quaternion()) == a);
  }
}

TEST_CASE("mismatched algebras are rejected") {
  const Element c = Element::unit(Algebra::complex());
  try {
    (void)(qone() + c);
    FAIL("expected tag mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::tag_mismatch);
  }
  CHECK_THROWS_AS((void)(qone() * c), Error);
  CHECK_THROWS_AS((void)(Element::unit(Algebra::matrix(2)) * Element::unit(Algebra::matrix(3))), Error);
}

TEST_CASE("Hamilton products") {
  CHECK(qi() * qj() == qk());
  CHECK(qj() * qi() == -qk());
  CHECK(qi() * qk() * qj() == qone());
  CHECK(qi() * qi() == -qone());

  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const Element a = random_element(Algebra::quaternion(), rng);
    const Element b = random_element(Algebra::quaternion(), rng);
    CHECK(distance(a * b, hamilton_table_product(a, b)) <= 1e-14 * (1 + a.norm() * b.norm()));
  }
}

TEST_CASE("unit law") {
  for (const auto& alg : algebras()) {
    Rng rng(3);
    const Element one = Element::unit(alg);
    for (int t = 0; t < 20; ++t) {
      const Element a = random_element(alg, rng);
      CHECK(a * one == a);
      CHECK(one * a == a);
    }
  }
}

TEST_CASE("matrix product agrees with Eigen") {
  Rng rng(4);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Algebra alg = Algebra::matrix(n);
    for (int t = 0; t < 10; ++t) {
      const Element a = random_element(alg, rng);
      const Element b = random_element(alg, rng);
      const Eigen::MatrixXd want = to_eigen(a) * to_eigen(b);
      CHECK((to_eigen(a * b) - want).norm() <= 1e-13 * (1 + want.norm()));
    }
  }
}

TEST_CASE("ring axioms") {
  for (const auto& alg : algebras()) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
      const Element a = random_element(alg, rng);
      const Element b = random_element(alg, rng);
      const Element c = random_element(alg, rng);
      CHECK(near((a * b) * c, a * (b * c), 1e-13));
      CHECK(near(a * (b + c), a * b + a * c, 1e-13));
      const Element r = Element::real(alg, rng.uniform(-3, 3));
      CHECK(r * a == a * r);
    }
  }
}

TEST_CASE("norms") {
  CHECK(q(1, 1, 1, 1).norm() == 2.0);
  CHECK(Element::zero(Algebra::quaternion()).norm() == 0.0);
  CHECK(Element::zero(Algebra::matrix(3)).norm() == 0.0);
  CHECK(Element::unit(Algebra::matrix(4)).norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mat(2, {3, 0, 0, -4}).norm() == doctest::Approx(4.0).epsilon(1e-15));

  Rng rng(6);
  SUBCASE("quaternion norm is multiplicative") {
    for (int t = 0; t < 100; ++t) {
      const Element a = random_element(Algebra::quaternion(), rng);
      const Element b = random_element(Algebra::quaternion(), rng);
      CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) <= 1e-12 * a.norm() * b.norm());
    }
  }
  SUBCASE("complex norm is multiplicative") {
    for (int t = 0; t < 100; ++t) {
      const Element a = random_element(Algebra::complex(), rng);
      const Element b = random_element(Algebra::complex(), rng);
      CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) <= 1e-12 * a.norm() * b.norm());
    }
  }
  SUBCASE("matrix norm is the spectral norm and submultiplicative") {
    for (std::size_t n = 2; n <= 8; ++n) {
      const Algebra alg = Algebra::matrix(n);
      for (int t = 0; t < 20; ++t) {
        const Element a = random_element(alg, rng);
        const Element b = random_element(alg, rng);
        const double exact = svd_norm(a);
        CHECK(a.norm() <= exact * (1 + 1e-12));
        CHECK(a.norm() >= exact * (1 - 1e-4));
        CHECK((a * b).norm() <= a.norm() * b.norm() * (1 + 1e-9));
      }
    }
  }
  SUBCASE("power iteration is sharp for a well separated spectrum") {
    const Element d = mat(3, {5, 0, 0, 0, -2, 0, 0, 0, 1});
    CHECK(d.norm() == doctest::Approx(5.0).epsilon(1e-12));
    const Element r = mat(2, {1, 2, 3, 4});
    CHECK(r.norm() == doctest::Approx(svd_norm(r)).epsilon(1e-12));
  }
  SUBCASE("triangle inequality and definiteness") {
    for (const auto& alg : algebras()) {
      for (int t = 0; t < 50; ++t) {
        const Element a = random_element(alg, rng);
        const Element b = random_element(alg, rng);
        CHECK((a + b).norm() <= (a.norm() + b.norm()) * (1 + 1e-9));
        CHECK(a.norm() > 0.0);
      }
    }
  }
}

TEST_CASE("random_unit") {
  for (const auto& alg : algebras()) {
    const Element u = random_unit(alg, 0);
    CHECK(std::abs(u.norm() - 1.0) <= 1e-12);
    CHECK(random_unit(alg, 0) == u);
    CHECK(random_unit(alg, 1) != u);
  }

  SUBCASE("coordinate means are near zero") {
    Rng rng(7);
    for (const auto& alg : algebras()) {
      std::vector<double> mean(alg.dimension(), 0.0);
      for (int s = 0; s < 1000; ++s) {
        const auto c = random_unit(alg, rng).coords();
        for (std::size_t k = 0; k < c.size(); ++k) mean[k] += c[k] / 1000.0;
      }
      for (double m : mean) CHECK(std::abs(m) < 0.1);
    }
  }
}

TEST_CASE("coordinates") {
  const Element a = q(1, 2, 3, 4);
  CHECK(a.coords() == std::vector<double>{1, 2, 3, 4});
  CHECK(Element::from_coords(Algebra::quaternion(), a.coords()) == a);

  const AlgebraDescriptor quat(Algebra::quaternion());
  CHECK(quat.basis()[2].coords() == std::vector<double>{0, 0, 1, 0});
  CHECK(Element::from_coords(Algebra::complex(), std::vector<double>{0, 0}).is_zero());
  CHECK_THROWS_AS(Element::from_coords(Algebra::complex(), std::vector<double>{1, 2, 3}), Error);
  CHECK_THROWS_AS(Element::from_coords(Algebra::complex(), std::vector<double>{NAN, 0}), Error);

  SUBCASE("basis starts with the unit in every algebra") {
    for (const auto& alg : algebras()) {
      const AlgebraDescriptor d(alg);
      CHECK(d.basis().size() == alg.dimension());
      CHECK(d.unit() == Element::unit(alg));
    }
  }

  SUBCASE("matrix coordinates expand over the basis") {
    Rng rng(8);
    const AlgebraDescriptor d(Algebra::matrix(3));
    for (int t = 0; t < 10; ++t) {
      const Element m = random_element(d.algebra(), rng);
      const auto c = m.coords();
      Element sum = Element::zero(d.algebra());
      for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] * d.basis()[k];
      CHECK(distance(sum, m) <= 1e-14 * (1 + m.norm()));
      CHECK(Element::from_coords(d.algebra(), c) == m);
    }
  }
}

TEST_CASE("algebra selection") {
  CHECK(Algebra::parse("quat") == Algebra::quaternion());
  CHECK(Algebra::parse("complex") == Algebra::complex());
  CHECK(Algebra::parse("matrix:3") == Algebra::matrix(3));
  CHECK(Algebra::parse("matrix:3").dimension() == 9);
  CHECK_THROWS_AS(Algebra::parse("matrix:9"), Error);
  CHECK_THROWS_AS(Algebra::parse("matrix:"), Error);
  CHECK_THROWS_AS(Algebra::parse("octonion"), Error);
}

TEST_CASE("text rendering") {
  CHECK(q(1, -2, 0.5, 0).to_string() == "(1-2i+0.5j+0k)");
  CHECK(Element::from_raw(Algebra::complex(), {-1, 3}).to_string() == "(-1+3i)");
  CHECK(mat(2, {1, 0, -0.25, 2}).to_string() == "[[1,0;-0.25,2]]");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(0.1) == "0.1");
}

}
