#pragma once

// End-to-end checks composed from the encoder and solver: encode a group,
// solve XB = BY, and compare the solution group with the input.

#include <optional>
#include <string>
#include <vector>

#include "grpmat/encoder.hpp"
#include "grpmat/groups.hpp"
#include "grpmat/solver.hpp"

namespace grpmat {

struct VerifyReport {
  int order = 0;
  LayoutMode mode = LayoutMode::Strict;
  int solutions = 0;
  std::vector<Permutation> sigmas;
  bool matches_cayley = false;     // {sigma} equals the set of left translations
  bool group_valid = false;        // solution_group closed and passes validate
  bool isomorphic = false;         // brute_iso(solution group, input) found
  std::optional<PsiReport> psi;    // only when the orders agree
  std::string failure;             // first failed stage, empty on success

  bool ok() const noexcept { return failure.empty(); }
};

/// build_B (auto), structured_solutions, solution_group, brute_iso against
/// the input and psi_check. Never throws for a valid group; failures are
/// reported in `failure`.
VerifyReport verify(const Group& group);

struct IsoReport {
  CanonicalForm first;
  CanonicalForm second;
  bool canonical_equal = false;
  std::optional<Permutation> witness;  // brute_iso(first group, second group)

  bool isomorphic() const noexcept { return witness.has_value(); }
  bool agree() const noexcept { return canonical_equal == isomorphic(); }
};

/// Compares canonical matrices and cross-checks with brute_iso. n <= 8.
IsoReport iso_compare(const Group& g, const Group& h);

}  // namespace grpmat
