#pragma once

// Exact dense linear algebra over the rationals.
//
// Matrix row and column indices are 0-based here; permutation arguments keep
// the library-wide 1-based convention.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grpmat/groups.hpp"

namespace grpmat {

/// Always canonical (reduced, positive denominator) after every arithmetic op.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}
  RatMatrix(int rows, int cols, RatVector entries);

  static RatMatrix identity(int n);
  /// Builds from nested integer rows; all rows must have equal length.
  static RatMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const RatVector& entries() const noexcept { return entries_; }

  Rational& operator()(int r, int c) { return entries_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return entries_[index(r, c)]; }

  RatMatrix transpose() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  RatVector entries_;
};

RatVector operator*(const RatMatrix& a, const RatVector& v);

struct RrefResult {
  RatMatrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank = 0;
};

/// Unique reduced row echelon form; pivots are the first nonzero column
/// available when scanning columns left to right.
RrefResult rref(const RatMatrix& m);
int rank(const RatMatrix& m);

/// Basis of {v : Mv = 0}, one vector per free column in ascending order,
/// with that free variable set to 1 and the other free variables 0.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Solution space of XB = BY, vectorized column-major with the m*m entries of
/// X before the n*n entries of Y.
class IntertwinerSpace {
 public:
  static constexpr int kDefaultSizeLimit = 10000;

  /// Throws SizeLimit when m^2 + n^2 exceeds `size_limit`.
  explicit IntertwinerSpace(const RatMatrix& b, int size_limit = kDefaultSizeLimit);

  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  int unknowns() const noexcept { return m_ * m_ + n_ * n_; }
  const std::vector<RatVector>& basis() const noexcept { return basis_; }

  /// The basis as (X, Y) pairs.
  std::vector<std::pair<RatMatrix, RatMatrix>> pairs() const;
  std::pair<RatMatrix, RatMatrix> unpack(const RatVector& v) const;
  RatVector pack(const RatMatrix& x, const RatMatrix& y) const;

  /// Coordinates of (X, Y) in the basis, or nullopt when the pair is not in
  /// the space. Read off at the free columns, then checked by reconstruction.
  std::optional<RatVector> coordinates(const RatMatrix& x, const RatMatrix& y) const;

  /// The m*n by (m^2+n^2) coefficient matrix of the vectorized system.
  static RatMatrix system(const RatMatrix& b);

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int> free_columns_;
  std::vector<RatVector> basis_;
};

/// Entry (sigma(j), j) is 1, so P_sigma e_j = e_sigma(j) and P_s P_t = P_{s*t}.
RatMatrix perm_matrix(const Permutation& sigma);

/// Unordered index pairs {i, j} (1-based, i <= j; i == j for diagonal slots).
using PairLayout = std::vector<std::pair<int, int>>;

PairLayout lex_pairs(int n, bool with_diagonal = false);

/// Permutation matrix of the induced action of sigma on `layout`: entry
/// (slot of {sigma(i), sigma(j)}, slot of {i, j}) is 1.
RatMatrix pair_perm_matrix(const Permutation& sigma, const PairLayout& layout);

/// "# rows=<r> cols=<c>" followed by r lines of space-separated entries.
std::string serialize_matrix(const RatMatrix& m);
RatMatrix parse_matrix(std::string_view text);

}  // namespace grpmat
