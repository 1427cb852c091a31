#pragma once

// Solutions of XB = BY inside the structured family: Y = P_sigma and X acts
// on the row labels of B through the induced action of sigma (cube rows by
// sigma, pair and diagonal rows by the action on index pairs, the y-term and
// x1^15 rows fixed).

#include <memory>
#include <string>
#include <vector>

#include "grpmat/encoder.hpp"
#include "grpmat/groups.hpp"
#include "grpmat/linalg.hpp"

namespace grpmat {

/// A labelled matrix shared by every solution computed against it.
struct SolverContext {
  int n = 0;
  std::vector<RowLabel> layout;
  RatMatrix b;
};

class SolutionPair {
 public:
  SolutionPair(std::shared_ptr<const SolverContext> context, Permutation sigma);

  const Permutation& sigma() const noexcept { return sigma_; }
  /// Induced permutation of the rows of B (1-based row indices).
  const Permutation& row_action() const noexcept { return row_action_; }
  const SolverContext& context() const noexcept { return *context_; }
  const std::shared_ptr<const SolverContext>& context_ptr() const noexcept { return context_; }

  RatMatrix x() const { return perm_matrix(row_action_); }
  RatMatrix y() const { return perm_matrix(sigma_); }

  /// X * B == B * Y by exact matrix multiplication.
  bool satisfies_equation() const;

 private:
  std::shared_ptr<const SolverContext> context_;
  Permutation sigma_;
  Permutation row_action_;
};

/// Row action of sigma on `layout`; throws LayoutMismatch when the layout is
/// not closed under sigma.
Permutation induced_row_action(const Permutation& sigma, const std::vector<RowLabel>& layout);

std::shared_ptr<const SolverContext> make_context(const BMatrix& b);
/// Arbitrary labelled matrix, e.g. I_n with a cube-only layout.
std::shared_ptr<const SolverContext> make_context(std::vector<RowLabel> layout, RatMatrix b);

/// Every sigma in S_n whose structured pair solves XB = BY, ascending in
/// sigma(1) and then lexicographically in the images.
std::vector<SolutionPair> structured_solutions(const std::shared_ptr<const SolverContext>& context);
std::vector<SolutionPair> structured_solutions(const BMatrix& b);

/// The structured condition B[r][c] == B[pi(r)][sigma(c)] for every entry,
/// evaluated directly without building matrices.
bool structured_condition_holds(const SolverContext& context, const Permutation& sigma);

/// (X1 X2, Y1 Y2) with sigma = sigma1 * sigma2. Throws MixedContext.
SolutionPair compose(const SolutionPair& p, const SolutionPair& q);
SolutionPair invert(const SolutionPair& p);

struct SolutionGroup {
  std::vector<SolutionPair> elements;  // elements[0] is the identity pair
  Table table;                         // 1-based indices into elements
  std::vector<int> labeling;           // sigma(1) of each element

  int order() const noexcept { return static_cast<int>(elements.size()); }
  Group as_group() const { return Group::from_table(table); }
};

/// Throws NotClosed when the solutions are not closed under compose or the
/// resulting table fails the group axioms.
SolutionGroup solution_group(const BMatrix& b);
SolutionGroup solution_group(const std::shared_ptr<const SolverContext>& context);

struct PsiReport {
  bool bijective = false;
  bool homomorphism = false;       // label(p*q) == label(p) label(q) everywhere
  bool anti_homomorphism = false;  // label(p*q) == label(q) label(p) everywhere
  int products_checked = 0;

  std::string verdict() const;
};

/// Checks the labeling s -> g_s against the group law of `group`.
/// Throws NotBijective when the labeling is not a bijection onto 1..n.
PsiReport psi_check(const SolutionGroup& solutions, const Group& group);

struct LinearCrossCheck {
  int structured_count = 0;
  int space_dimension = 0;
  int unknowns = 0;
  std::vector<bool> contained;  // per structured solution
  bool all_contained() const;
};

LinearCrossCheck cross_check_linear(const std::shared_ptr<const SolverContext>& context,
                                    int size_limit = IntertwinerSpace::kDefaultSizeLimit);
LinearCrossCheck cross_check_linear(const BMatrix& b, int size_limit = IntertwinerSpace::kDefaultSizeLimit);

}  // namespace grpmat
