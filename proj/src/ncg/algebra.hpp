#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ncg {

enum class AlgebraKind { quaternion, complex, matrix };

/// Descriptor of one concrete finite-dimensional normed algebra over the
/// reals. Elements carry their descriptor so mixed-algebra arithmetic is
/// detected at run time.
class Algebra {
 public:
  static constexpr std::size_t max_matrix_size = 8;

  static Algebra quaternion() { return Algebra(AlgebraKind::quaternion, 0); }
  static Algebra complex() { return Algebra(AlgebraKind::complex, 0); }
  /// Real n×n matrices, 1 ≤ n ≤ 8.
  static Algebra matrix(std::size_t n);
  /// Parses "quat", "complex" or "matrix:N".
  static Algebra parse(const std::string& spec);

  AlgebraKind kind() const noexcept { return kind_; }
  std::size_t matrix_size() const noexcept { return n_; }
  /// Number of real coordinates: 4, 2 or n².
  std::size_t dimension() const noexcept;
  std::string name() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  Algebra(AlgebraKind kind, std::size_t n) : kind_(kind), n_(n) {}

  AlgebraKind kind_;
  std::size_t n_;
};

class Element;

/// Algebra plus its canonical basis. basis()[0] is always the unit.
///
/// Matrix basis: e₀ = I and e_k = E_{rc} (k = r·n + c) for k ≥ 1, where E_{rc}
/// is the matrix unit. This keeps the unit first while the remaining
/// coordinates stay readable as matrix entries.
class AlgebraDescriptor {
 public:
  explicit AlgebraDescriptor(Algebra algebra);

  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t dimension() const noexcept { return algebra_.dimension(); }
  const std::vector<Element>& basis() const noexcept { return basis_; }
  const Element& unit() const;

 private:
  Algebra algebra_;
  std::vector<Element> basis_;
};

/// A value of a concrete algebra, stored as coordinates relative to the
/// canonical basis; coords()/from_coords() round-trip exactly. raw()
/// gives the natural representation (quaternion components, complex parts,
/// row-major matrix entries); for quaternions and complex numbers the two
/// coincide.
class Element {
 public:
  static Element zero(const Algebra& algebra);
  static Element unit(const Algebra& algebra);
  static Element real(const Algebra& algebra, double r);
  static Element from_coords(const Algebra& algebra, std::span<const double> coords);
  /// Natural payload: (w, x, y, z) for quaternions, (re, im) for complex,
  /// row-major entries for matrices.
  static Element from_raw(const Algebra& algebra, std::vector<double> raw);
  static Element quaternion(double w, double x, double y, double z);

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<double>& coords() const noexcept { return coords_; }
  std::vector<double> raw() const;

  bool is_zero() const noexcept;
  double norm() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(double r, const Element& a);
  friend Element operator*(const Element& a, double r) { return r * a; }
  Element& operator+=(const Element& b);

  /// Exact comparison of payloads.
  friend bool operator==(const Element& a, const Element& b);

  /// Shortest round-trip text: "(1+2i-3j+0.5k)", "(1-2i)" or "[[1,0;0,1]]".
  std::string to_string() const;

 private:
  Element(Algebra algebra, std::vector<double> coords)
      : algebra_(algebra), coords_(std::move(coords)) {}

  Algebra algebra_;
  std::vector<double> coords_;
};

void require_same_algebra(const Algebra& a, const Algebra& b);
double distance(const Element& a, const Element& b);

/// Uniformly distributed direction on the unit sphere (Gaussian coordinates,
/// normalised by the algebra norm). Deterministic given the seed.
Element random_unit(const Algebra& algebra, std::uint64_t seed);

class Rng;
Element random_unit(const Algebra& algebra, Rng& rng);
/// Gaussian coordinates without normalisation.
Element random_element(const Algebra& algebra, Rng& rng);

/// Shortest round-trip decimal rendering of a finite double; -0 prints as 0.
std::string format_real(double value);

}  // namespace ncg
