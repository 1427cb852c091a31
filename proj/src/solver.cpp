#include "grpmat/solver.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace grpmat {

namespace {

RowLabel act(const Permutation& sigma, const RowLabel& label) {
  switch (label.kind) {
    case RowLabel::Kind::Cube: return RowLabel::cube(sigma(label.i));
    case RowLabel::Kind::Diag: return RowLabel::diag(sigma(label.i));
    case RowLabel::Kind::Pair: {
      const int a = sigma(label.i), b = sigma(label.j);
      return RowLabel::pair(std::min(a, b), std::max(a, b));
    }
    case RowLabel::Kind::YTerm:
    case RowLabel::Kind::X15: return label;
  }
  return label;
}

// Largest group index a label depends on.
int label_reach(const RowLabel& label) { return std::max(label.i, label.j); }

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Permutation induced_row_action(const Permutation& sigma, const std::vector<RowLabel>& layout) {
  std::map<RowLabel, int> row;
  for (int r = 0; r < static_cast<int>(layout.size()); ++r) row[layout[r]] = r + 1;
  std::vector<int> images;
  images.reserve(layout.size());
  for (const auto& label : layout) {
    const auto it = row.find(act(sigma, label));
    if (it == row.end()) throw Error(ErrorCode::LayoutMismatch, "layout is not closed under " + sigma.cycle_string());
    images.push_back(it->second);
  }
  return Permutation(std::move(images));
}

SolutionPair::SolutionPair(std::shared_ptr<const SolverContext> context, Permutation sigma)
    : context_(std::move(context)), sigma_(std::move(sigma)),
      row_action_(induced_row_action(sigma_, context_->layout)) {}

bool SolutionPair::satisfies_equation() const {
  const auto& b = context_->b;
  return x() * b == b * y();
}

std::shared_ptr<const SolverContext> make_context(const BMatrix& b) {
  return make_context(b.layout(), b.to_rat());
}

std::shared_ptr<const SolverContext> make_context(std::vector<RowLabel> layout, RatMatrix b) {
  if (static_cast<int>(layout.size()) != b.rows()) {
    throw Error(ErrorCode::LayoutMismatch, "one label per row is required");
  }
  for (const auto& label : layout) {
    if (label_reach(label) > b.cols()) throw Error(ErrorCode::LayoutMismatch, "label index exceeds n");
  }
  auto ctx = std::make_shared<SolverContext>();
  ctx->n = b.cols();
  ctx->layout = std::move(layout);
  ctx->b = std::move(b);
  return ctx;
}

// ---------------------------------------------------------------------------

namespace {

class StructuredSearch {
 public:
  explicit StructuredSearch(const SolverContext& ctx) : ctx_(ctx), n_(ctx.n) {
    for (int r = 0; r < static_cast<int>(ctx.layout.size()); ++r) row_of_[ctx.layout[r]] = r;
    nonzero_.resize(n_);
    ready_at_.resize(n_ + 1);
    for (int c = 0; c < n_; ++c) {
      int reach = c + 1;
      for (int r = 0; r < ctx.b.rows(); ++r) {
        if (sgn(ctx.b(r, c)) == 0) continue;
        nonzero_[c].push_back(r);
        reach = std::max(reach, label_reach(ctx.layout[r]));
      }
      ready_at_[reach].push_back(c);
    }
  }

  std::vector<Permutation> run() {
    sigma_.assign(n_ + 1, 0);
    used_.assign(n_ + 1, false);
    found_.clear();
    extend(1);
    return std::move(found_);
  }

 private:
  // Column c satisfies B[r][c] == B[pi(r)][sigma(c)] for all rows r.
  bool column_ok(int c) const {
    const int target = sigma_[c + 1] - 1;
    if (nonzero_[c].size() != nonzero_[target].size()) return false;
    for (int r : nonzero_[c]) {
      const RowLabel& label = ctx_.layout[r];
      RowLabel image = label;
      switch (label.kind) {
        case RowLabel::Kind::Cube: image = RowLabel::cube(sigma_[label.i]); break;
        case RowLabel::Kind::Diag: image = RowLabel::diag(sigma_[label.i]); break;
        case RowLabel::Kind::Pair: {
          const int a = sigma_[label.i], b = sigma_[label.j];
          image = RowLabel::pair(std::min(a, b), std::max(a, b));
          break;
        }
        default: break;
      }
      const auto it = row_of_.find(image);
      if (it == row_of_.end() || ctx_.b(it->second, target) != ctx_.b(r, c)) return false;
    }
    return true;
  }

  void extend(int k) {
    if (k > n_) {
      found_.emplace_back(std::vector<int>(sigma_.begin() + 1, sigma_.end()));
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[v]) continue;
      sigma_[k] = v;
      used_[v] = true;
      const bool ok = std::all_of(ready_at_[k].begin(), ready_at_[k].end(), [&](int c) { return column_ok(c); });
      if (ok) extend(k + 1);
      used_[v] = false;
    }
    sigma_[k] = 0;
  }

  const SolverContext& ctx_;
  int n_;
  std::map<RowLabel, int> row_of_;
  std::vector<std::vector<int>> nonzero_;
  std::vector<std::vector<int>> ready_at_;  // columns fully determined once sigma(1..k) is known
  std::vector<int> sigma_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

bool structured_condition_holds(const SolverContext& context, const Permutation& sigma) {
  Permutation pi;
  try {
    pi = induced_row_action(sigma, context.layout);
  } catch (const Error&) {
    return false;
  }
  for (int r = 1; r <= context.b.rows(); ++r)
    for (int c = 1; c <= context.n; ++c)
      if (context.b(r - 1, c - 1) != context.b(pi(r) - 1, sigma(c) - 1)) return false;
  return true;
}

std::vector<SolutionPair> structured_solutions(const std::shared_ptr<const SolverContext>& context) {
  std::vector<SolutionPair> out;
  for (auto& sigma : StructuredSearch(*context).run()) {
    SolutionPair pair(context, std::move(sigma));
    if (!pair.satisfies_equation()) {
      throw Error(ErrorCode::NotClosed, "search accepted " + pair.sigma().cycle_string() +
                                            " but XB != BY; the search reduction is unsound");
    }
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<SolutionPair> structured_solutions(const BMatrix& b) { return structured_solutions(make_context(b)); }

// ---------------------------------------------------------------------------

SolutionPair compose(const SolutionPair& p, const SolutionPair& q) {
  if (p.context_ptr() != q.context_ptr() &&
      (p.context().layout != q.context().layout || !(p.context().b == q.context().b))) {
    throw Error(ErrorCode::MixedContext, "solution pairs belong to different matrices");
  }
  return SolutionPair(p.context_ptr(), p.sigma() * q.sigma());
}

SolutionPair invert(const SolutionPair& p) { return SolutionPair(p.context_ptr(), p.sigma().inverse()); }

SolutionGroup solution_group(const BMatrix& b) { return solution_group(make_context(b)); }

SolutionGroup solution_group(const std::shared_ptr<const SolverContext>& context) {
  SolutionGroup out;
  out.elements = structured_solutions(context);
  if (out.elements.empty()) throw Error(ErrorCode::NotClosed, "no structured solutions");

  std::unordered_map<std::vector<int>, int, VecHash> index;
  for (int i = 0; i < out.order(); ++i) index.emplace(out.elements[i].sigma().images(), i + 1);

  const int n = out.order();
  out.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto it = index.find((out.elements[a].sigma() * out.elements[b].sigma()).images());
      if (it == index.end()) {
        throw Error(ErrorCode::NotClosed, out.elements[a].sigma().cycle_string() + " * " +
                                              out.elements[b].sigma().cycle_string() + " is not a solution");
      }
      out.table[a][b] = it->second;
    }
  }
  const auto check = validate(out.table);
  if (!check.ok()) throw Error(ErrorCode::NotClosed, "solution table is not a group: " + check.violations.front().message);

  for (const auto& e : out.elements) out.labeling.push_back(e.sigma()(1));
  return out;
}

// ---------------------------------------------------------------------------

std::string PsiReport::verdict() const {
  if (homomorphism && anti_homomorphism) return "homomorphism and anti-homomorphism";
  if (homomorphism) return "homomorphism";
  if (anti_homomorphism) return "anti-homomorphism";
  return "neither";
}

PsiReport psi_check(const SolutionGroup& solutions, const Group& group) {
  const int n = group.order();
  std::vector<int> seen(n + 1, 0);
  bool bijective = solutions.order() == n;
  for (int label : solutions.labeling) {
    if (label < 1 || label > n || seen[label]++) bijective = false;
  }
  if (!bijective) {
    throw Error(ErrorCode::NotBijective, "labeling of " + std::to_string(solutions.order()) +
                                             " solutions is not a bijection onto a group of order " + std::to_string(n));
  }
  PsiReport report;
  report.bijective = true;
  report.homomorphism = report.anti_homomorphism = true;
  const auto& label = solutions.labeling;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int product = label[solutions.table[a][b] - 1];
      if (product != group.mul(label[a], label[b])) report.homomorphism = false;
      if (product != group.mul(label[b], label[a])) report.anti_homomorphism = false;
      ++report.products_checked;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

bool LinearCrossCheck::all_contained() const {
  return std::all_of(contained.begin(), contained.end(), [](bool b) { return b; });
}

LinearCrossCheck cross_check_linear(const std::shared_ptr<const SolverContext>& context, int size_limit) {
  const IntertwinerSpace space(context->b, size_limit);
  LinearCrossCheck out;
  out.space_dimension = space.dimension();
  out.unknowns = space.unknowns();
  for (const auto& pair : structured_solutions(context)) {
    out.contained.push_back(space.coordinates(pair.x(), pair.y()).has_value());
  }
  out.structured_count = static_cast<int>(out.contained.size());
  return out;
}

LinearCrossCheck cross_check_linear(const BMatrix& b, int size_limit) {
  return cross_check_linear(make_context(b), size_limit);
}

}  // namespace grpmat
