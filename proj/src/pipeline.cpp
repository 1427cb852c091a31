#include "grpmat/pipeline.hpp"

#include <algorithm>

namespace grpmat {

VerifyReport verify(const Group& group) {
  VerifyReport report;
  report.order = group.order();

  const BMatrix b = build_B(group, BuildMode::Auto);
  report.mode = b.mode();
  const auto context = make_context(b);
  for (const auto& pair : structured_solutions(context)) report.sigmas.push_back(pair.sigma());
  report.solutions = static_cast<int>(report.sigmas.size());

  auto expected = cayley_embed(group);
  auto found = report.sigmas;
  std::sort(expected.begin(), expected.end());
  std::sort(found.begin(), found.end());
  report.matches_cayley = expected == found;

  auto fail = [&](std::string why) {
    if (report.failure.empty()) report.failure = std::move(why);
  };
  if (report.solutions != report.order) {
    fail("expected " + std::to_string(report.order) + " structured solutions, found " +
         std::to_string(report.solutions));
  }

  std::optional<SolutionGroup> solutions;
  try {
    solutions = solution_group(context);
    report.group_valid = true;
  } catch (const Error& e) {
    fail(std::string("solution group: ") + e.what());
    return report;
  }

  report.isomorphic = brute_iso(solutions->as_group(), group).has_value();
  if (!report.isomorphic) fail("solution group is not isomorphic to the input");

  if (solutions->order() == report.order) {
    try {
      report.psi = psi_check(*solutions, group);
    } catch (const Error& e) {
      fail(std::string("labeling: ") + e.what());
    }
  }
  return report;
}

IsoReport iso_compare(const Group& g, const Group& h) {
  IsoReport report{canonical_B(g), canonical_B(h), false, brute_iso(g, h)};
  report.canonical_equal = report.first.matrix == report.second.matrix;
  return report;
}

}  // namespace grpmat
