#pragma once

// The 0/1 matrix B_G of a finite group: rows are coordinates on the classes
// w_i^3 (cube), w_i w_j x2^4 (pair), w_i^2 x2^4 (diagonal, extended layout
// only), the y-term and x1^15; column j is the class of the differential of z_j.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grpmat/groups.hpp"
#include "grpmat/linalg.hpp"

namespace grpmat {

struct RowLabel {
  enum class Kind { Cube, Pair, Diag, YTerm, X15 };

  Kind kind = Kind::Cube;
  int i = 0;
  int j = 0;

  static RowLabel cube(int i) { return {Kind::Cube, i, 0}; }
  static RowLabel pair(int i, int j) { return {Kind::Pair, i, j}; }
  static RowLabel diag(int i) { return {Kind::Diag, i, 0}; }
  static RowLabel yterm() { return {Kind::YTerm, 0, 0}; }
  static RowLabel x15() { return {Kind::X15, 0, 0}; }

  /// "cube:i", "pair:i,j", "diag:i", "yterm", "x15".
  std::string to_string() const;
  static RowLabel parse(std::string_view text);

  friend auto operator<=>(const RowLabel&, const RowLabel&) = default;
};

enum class LayoutMode { Strict, Extended };
enum class BuildMode { Strict, Extended, Auto };

std::string_view to_string(LayoutMode mode);

/// Cube(1..n), Pair(i<j) lexicographic, [Diag(1..n) when extended], YTerm, X15.
std::vector<RowLabel> row_layout(int n, LayoutMode mode);

class BMatrix {
 public:
  BMatrix() = default;
  /// entries are row-major over row_layout(n, mode); throws LayoutMismatch on
  /// a shape mismatch and MalformedFile on entries outside {0, 1}.
  BMatrix(int n, LayoutMode mode, std::vector<std::uint8_t> entries);

  int n() const noexcept { return n_; }
  int rows() const noexcept { return static_cast<int>(layout_.size()); }
  LayoutMode mode() const noexcept { return mode_; }
  const std::vector<RowLabel>& layout() const noexcept { return layout_; }
  const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }

  /// 0-based row and column.
  int at(int row, int col) const { return entries_[static_cast<std::size_t>(row) * n_ + col]; }
  /// Row index of `label`, or -1 when the layout has no such row.
  int row_of(const RowLabel& label) const;

  RatMatrix to_rat() const;

  friend bool operator==(const BMatrix& a, const BMatrix& b) {
    return a.n_ == b.n_ && a.mode_ == b.mode_ && a.entries_ == b.entries_;
  }
  /// Strict sorts before extended, then row-major entries lexicographically.
  friend std::strong_ordering operator<=>(const BMatrix& a, const BMatrix& b);

 private:
  int n_ = 0;
  LayoutMode mode_ = LayoutMode::Strict;
  std::vector<RowLabel> layout_;
  std::vector<std::uint8_t> entries_;
};

/// Index pairs {j, t} (stored as (min, max)) carried by the differential of z_j:
/// {j, sigma_{j+1}(1)} and {j, sigma_{j+1}(i_tau)} for each cycle leader, or
/// {n, 1} and {n, i_tau} for the last column. A pair (j, j) is a diagonal term.
/// The trivial group has none.
std::vector<std::pair<int, int>> pair_terms(const Group& group, int column);

BMatrix build_B(const Group& group, BuildMode mode = BuildMode::Auto);

struct CanonicalForm {
  BMatrix matrix;
  Permutation ordering;  // build_B(group.relabeled(ordering)) == matrix
  bool diagonal_free_ordering_exists = false;
};

/// Least build_B over all identity-fixing element orderings. n <= 8.
CanonicalForm canonical_B(const Group& group);

struct CensusEntry {
  std::string name;
  CanonicalForm form;
};

struct Census {
  int order = 0;
  int count = 0;                 // distinct canonical matrices
  int group_count = 0;           // |enumerate_groups(order)|
  std::vector<BMatrix> matrices; // distinct canonical matrices, ascending
  std::vector<CensusEntry> entries;

  bool matches_group_count() const noexcept { return count == group_count; }
};

Census census(int n);

std::string serialize_B(const BMatrix& b);
BMatrix parse_B(std::string_view text);

}  // namespace grpmat
