#pragma once

// The free graded-commutative algebra on x1 (8), x2 (10), y1 (33), y2 (35),
// y3 (37) and w_1..w_n (40) with the differential
//   d x1 = d x2 = d w_j = 0,  d y1 = x1^3 x2,  d y2 = x1^2 x2^2,  d y3 = x1 x2^3,
// plus the degree-120 cocycles d z_j attached to a group. Only the degree
// window 119..121 is ever assembled into matrices.

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "grpmat/encoder.hpp"
#include "grpmat/groups.hpp"
#include "grpmat/linalg.hpp"

namespace grpmat::sullivan {

inline constexpr int kDegreeX1 = 8;
inline constexpr int kDegreeX2 = 10;
inline constexpr std::array<int, 3> kDegreeY = {33, 35, 37};
inline constexpr int kDegreeW = 40;
inline constexpr int kDegreeZ = 119;

inline constexpr int kMaxBasisDegree = 200;
inline constexpr int kMaxBasisGenerators = 8;
inline constexpr int kMaxSliceOrder = 4;

/// x1^a x2^b y1^e1 y2^e2 y3^e3 w_1^c1 ... w_n^cn, written in that factor order
/// (odd factors ascending), which fixes the sign of the coefficient.
struct Monomial {
  int a = 0;
  int b = 0;
  std::array<int, 3> y{};
  std::vector<int> w;

  static Monomial one(int n) { return Monomial{0, 0, {}, std::vector<int>(n, 0)}; }

  int degree() const;
  bool is_odd() const { return (y[0] + y[1] + y[2]) % 2 == 1; }

  /// Graded-lex: degree first, then (a, b, e1, e2, e3, c1..cn) lexicographically.
  friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;  // leading term first

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}
  Polynomial(const Monomial& m, Rational coefficient = 1);

  int generators() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Degree of a homogeneous polynomial; -1 for zero or mixed degrees.
  int homogeneous_degree() const;

  void add(const Monomial& m, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  /// Graded-commutative product.
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// "q * x1^a x2^b y1 y2 y3 w<j>^c" terms, leading term first; "0" when zero.
  std::string to_string() const;

 private:
  int n_ = 0;
  Terms terms_;
};

// Generators as polynomials.
Polynomial x1(int n);
Polynomial x2(int n);
Polynomial y(int i, int n);  // i in 1..3
Polynomial w(int j, int n);  // j in 1..n

/// y1 y2 x1^4 x2^2 - y1 y3 x1^5 x2 + y2 y3 x1^6.
Polynomial y_term(int n);

/// Graded Leibniz extension of the differential on the generators.
Polynomial differential(const Polynomial& p);

/// Differential of z_j for the group, assembled from the Cayley embedding and
/// the cycle data of sigma_2; always homogeneous of degree 120.
Polynomial d_z(int j, const Group& group);

/// All monomials of exact degree d in x1, x2, y1..y3, w_1..w_n, descending in
/// graded-lex order. Throws ScaleLimit past d = 200 or n = 8.
std::vector<Monomial> monomial_basis(int degree, int n);

/// Matrix of the differential from degree d to d+1 in monomial coordinates.
RatMatrix differential_matrix(const std::vector<Monomial>& source, const std::vector<Monomial>& target);

RatVector coordinates(const Polynomial& p, const std::vector<Monomial>& basis);
Polynomial from_coordinates(const RatVector& v, const std::vector<Monomial>& basis, int n);

/// Full Sigma-extended row set: cube, every pair, every diagonal, y-term, x1^15.
std::vector<RowLabel> sigma_layout(int n);
/// Cocycle representing a row label: w_i^3, w_i w_j x2^4, w_i^2 x2^4, the y-term or x1^15.
Polynomial representative(const RowLabel& label, int n);

struct CohomologySlice {
  int degree = 120;
  int n = 0;
  std::vector<Monomial> basis_119, basis_120, basis_121;
  std::vector<RatVector> coboundary_basis;  // in basis_120 coordinates
  std::vector<RatVector> cocycle_basis;
  std::vector<RatVector> quotient_basis;    // representatives; Sigma rows first
  bool sigma_are_cocycles = false;

  int dimension() const { return static_cast<int>(cocycle_basis.size() - coboundary_basis.size()); }
};

/// Degree-120 cohomology of the w/x/y algebra. n <= 4, else ScaleLimit.
CohomologySlice cohomology_slice_120(const Group& group);

struct IndependenceCertificate {
  bool independent = false;
  int sigma_size = 0;
  int coboundary_rank = 0;
  int combined_rank = 0;             // rank of [coboundaries | Sigma]
  std::vector<int> sigma_pivots;     // pivot columns falling on Sigma, 0-based within Sigma
};

/// Whether the classes of the Sigma-extended representatives are linearly
/// independent in degree-120 cohomology.
IndependenceCertificate sigma_independence(const Group& group);

/// Coordinates of the classes of d z_1..d z_n on sigma_layout(n), solved
/// modulo coboundaries. n <= 4.
RatMatrix b_matrix(const Group& group);

/// Rows of `m` (labelled by `from`) selected in the order of `to`.
RatMatrix restrict_rows(const RatMatrix& m, const std::vector<RowLabel>& from, const std::vector<RowLabel>& to);

/// Matrix of the algebra map w_j -> w_sigma(j) (identity on x, y) on the
/// representatives of `layout`, found by substituting into each representative.
RatMatrix induced_matrix_120(const Permutation& sigma, const std::vector<RowLabel>& layout);
/// Uses the layout of build_B(group, Auto).
RatMatrix induced_matrix_120(const Permutation& sigma, const Group& group);

}  // namespace grpmat::sullivan
