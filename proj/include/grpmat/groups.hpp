#pragma once

// Finite groups given by multiplication tables, their Cayley embedding and the
// cycle data of the left translation by g2.
//
// Conventions used throughout the library:
//   * element indices are 1-based and g1 is the identity;
//   * table[j][k] is the index of g_j * g_k (stored 0-based in memory, values 1-based);
//   * permutations compose right to left: (s * t)(x) = s(t(x)).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grpmat/error.hpp"

namespace grpmat {

using Table = std::vector<std::vector<int>>;

struct ValidationResult;

/// Checks identity-first, Latin square, associativity and inverses, and
/// collects every violation found.
ValidationResult validate(const Table& candidate, std::vector<std::string> names = {});

class Permutation {
 public:
  Permutation() = default;
  /// images[k-1] = image of k. Throws MalformedFile unless a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Cycles are 1-based; points not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// All cycles including fixed points; each cycle starts at its minimum and
  /// cycles are ordered by their minima.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle notation without fixed points, e.g. "(1 2 3 4)"; "()" for the identity.
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

class Group {
 public:
  /// Validates and throws GroupValidationError on any violation.
  static Group from_table(Table table, std::vector<std::string> names = {});

  int order() const noexcept { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a - 1][b - 1]; }
  int inverse(int a) const;
  int element_order(int a) const;
  bool is_abelian() const;

  const Table& table() const noexcept { return table_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Reindexes the elements: new element i is old element ordering(i).
  /// ordering(1) must be 1 so the identity stays first.
  Group relabeled(const Permutation& ordering) const;

  friend bool operator==(const Group& a, const Group& b) { return a.table_ == b.table_; }

 private:
  Group(Table table, std::vector<std::string> names)
      : table_(std::move(table)), names_(std::move(names)) {}
  friend ValidationResult validate(const Table& candidate, std::vector<std::string> names);

  Table table_;
  std::vector<std::string> names_;
};

struct Violation {
  ErrorCode code;
  std::string message;
  std::vector<int> witness;  // 1-based indices; (a,b,c) for associativity
};

struct ValidationResult {
  std::optional<Group> group;
  std::vector<Violation> violations;

  bool ok() const noexcept { return group.has_value(); }
};

class GroupValidationError : public Error {
 public:
  explicit GroupValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Parses the JSON group file format ({"n", "names"?, "table"}).
Group parse_group(std::string_view text);
std::string serialize_group(const Group& group);

/// Catalog names: Z1..Z8, V4, S3, D4, Q8, Z2xZ4, Z2^3 (aliases Z2xZ2, Z2xZ2xZ2).
Group catalog(std::string_view name);
std::vector<std::string> catalog_names();

std::vector<Permutation> cayley_embed(const Group& group);

struct CycleData {
  std::vector<int> anchor_cycle;  // orbit of 1 under sigma_2, starting 1, 2, ...
  std::vector<int> leaders;       // minimum of every other cycle, ascending
  std::vector<int> cycle_lengths; // lengths of those other cycles, same order as leaders
  int k() const noexcept { return static_cast<int>(leaders.size()); }
};

CycleData cycle_decompose(const Permutation& sigma2);

/// First identity-preserving isomorphism found in lexicographic backtracking
/// order; phi.images()[a-1] is the image of element a.
std::optional<Permutation> brute_iso(const Group& g, const Group& h);

enum class EnumerationMode {
  Classified,  // known classification, via the catalog
  Exhaustive,  // Cayley-table search modulo brute_iso (oracle mode)
};

/// Catalog names of one representative per isomorphism class of order n.
std::vector<std::string> classified_names(int n);

/// Pairwise non-isomorphic groups of order n (1 <= n <= 8).
std::vector<Group> enumerate_groups(int n, EnumerationMode mode = EnumerationMode::Classified);

}  // namespace grpmat
