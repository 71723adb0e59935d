#pragma once

#include <Eigen/Dense>
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/ncpoly.hpp"
#include "ncg/random.hpp"

namespace ncg::test {

inline Element q(double w, double x, double y, double z) { return Element::quaternion(w, x, y, z); }
inline Element qone() { return q(1, 0, 0, 0); }
inline Element qi() { return q(0, 1, 0, 0); }
inline Element qj() { return q(0, 0, 1, 0); }
inline Element qk() { return q(0, 0, 0, 1); }

inline Element mat(std::size_t n, std::vector<double> entries) {
  return Element::from_raw(Algebra::matrix(n), std::move(entries));
}

inline const std::vector<Algebra>& algebras() {
  static const std::vector<Algebra> all{Algebra::quaternion(), Algebra::complex(), Algebra::matrix(2),
                                        Algebra::matrix(3)};
  return all;
}

inline Element random_point(const Algebra& a, Rng& rng) {
  return rng.uniform(0.5, 1.5) * random_unit(a, rng);
}

// One monomial per degree 0..degree, coefficient norms in [0.5, 1.5].
inline NcPolynomial well_scaled_poly(const Algebra& a, std::size_t degree, Rng& rng) {
  NcPolynomial p(a);
  for (std::size_t d = 0; d <= degree; ++d) {
    std::vector<Element> c;
    for (std::size_t k = 0; k <= d; ++k) c.push_back(rng.uniform(0.5, 1.5) * random_unit(a, rng));
    p.add_term(Monomial(std::move(c)));
  }
  return p;
}

inline bool near(const Element& a, const Element& b, double tol) {
  return distance(a, b) <= tol * (1.0 + b.norm());
}

// Quaternion product from the basis multiplication table alone:
// e_a·e_b = sign[a][b]·e_{index[a][b]} with e = (1, i, j, k).
inline Element hamilton_table_product(const Element& a, const Element& b) {
  static constexpr std::array<std::array<int, 4>, 4> index{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign{{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}}};
  std::vector<double> out(4, 0.0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[index[r][c]] += sign[r][c] * a.raw()[r] * b.raw()[c];
  return Element::from_raw(Algebra::quaternion(), out);
}

inline Eigen::MatrixXd to_eigen(const Element& m) {
  const std::size_t n = m.algebra().matrix_size();
  Eigen::MatrixXd out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = m.raw()[r * n + c];
  return out;
}

inline double svd_norm(const Element& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
  return svd.singularValues()(0);
}

}  // namespace ncg::test
