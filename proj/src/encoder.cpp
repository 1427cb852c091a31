#include "grpmat/encoder.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "grpmat/parallel.hpp"

namespace grpmat {

std::string RowLabel::to_string() const {
  switch (kind) {
    case Kind::Cube: return "cube:" + std::to_string(i);
    case Kind::Pair: return "pair:" + std::to_string(i) + "," + std::to_string(j);
    case Kind::Diag: return "diag:" + std::to_string(i);
    case Kind::YTerm: return "yterm";
    case Kind::X15: return "x15";
  }
  return {};
}

RowLabel RowLabel::parse(std::string_view text) {
  const std::string s(text);
  if (s == "yterm") return yterm();
  if (s == "x15") return x15();
  int a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "pair:%d,%d%c", &a, &b, &tail) == 2 && 1 <= a && a < b) return pair(a, b);
  if (std::sscanf(s.c_str(), "cube:%d%c", &a, &tail) == 1 && a >= 1) return cube(a);
  if (std::sscanf(s.c_str(), "diag:%d%c", &a, &tail) == 1 && a >= 1) return diag(a);
  throw Error(ErrorCode::MalformedFile, "unknown row label '" + s + "'");
}

std::string_view to_string(LayoutMode mode) {
  return mode == LayoutMode::Strict ? "strict" : "extended";
}

std::vector<RowLabel> row_layout(int n, LayoutMode mode) {
  std::vector<RowLabel> out;
  for (int i = 1; i <= n; ++i) out.push_back(RowLabel::cube(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(RowLabel::pair(i, j));
  if (mode == LayoutMode::Extended) {
    for (int i = 1; i <= n; ++i) out.push_back(RowLabel::diag(i));
  }
  out.push_back(RowLabel::yterm());
  out.push_back(RowLabel::x15());
  return out;
}

// ---------------------------------------------------------------------------

BMatrix::BMatrix(int n, LayoutMode mode, std::vector<std::uint8_t> entries)
    : n_(n), mode_(mode), layout_(row_layout(n, mode)), entries_(std::move(entries)) {
  if (n < 1 || entries_.size() != layout_.size() * static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::LayoutMismatch, "entry count does not match the " + std::string(to_string(mode)) +
                                               " layout for n=" + std::to_string(n));
  }
  for (auto e : entries_) {
    if (e > 1) throw Error(ErrorCode::MalformedFile, "B-matrix entries must be 0 or 1");
  }
}

int BMatrix::row_of(const RowLabel& label) const {
  const auto it = std::find(layout_.begin(), layout_.end(), label);
  return it == layout_.end() ? -1 : static_cast<int>(it - layout_.begin());
}

RatMatrix BMatrix::to_rat() const {
  RatMatrix m(rows(), n_);
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < n_; ++c) m(r, c) = at(r, c);
  return m;
}

std::strong_ordering operator<=>(const BMatrix& a, const BMatrix& b) {
  if (a.mode_ != b.mode_) return a.mode_ == LayoutMode::Strict ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  return a.entries_ <=> b.entries_;
}

// ---------------------------------------------------------------------------

namespace {

// Pair terms of every column, computed once per group.
std::vector<std::vector<std::pair<int, int>>> all_pair_terms(const Group& group) {
  const int n = group.order();
  std::vector<std::vector<std::pair<int, int>>> out(n);
  if (n == 1) return out;

  const CycleData cycles = cycle_decompose(Permutation(group.table()[1]));
  auto add = [](std::vector<std::pair<int, int>>& terms, int a, int b) {
    terms.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (int j = 1; j <= n; ++j) {
    auto& terms = out[j - 1];
    if (j < n) {
      // sigma_{j+1}(x) = g_{j+1} * g_x
      add(terms, j, group.mul(j + 1, 1));
      for (int leader : cycles.leaders) add(terms, j, group.mul(j + 1, leader));
    } else {
      add(terms, n, 1);
      for (int leader : cycles.leaders) add(terms, n, leader);
    }
  }
  return out;
}

BMatrix assemble(int n, const std::vector<std::vector<std::pair<int, int>>>& terms, BuildMode mode,
                 const Group& group) {
  bool has_diagonal = false;
  for (int j = 1; j <= n; ++j) {
    for (auto [a, b] : terms[j - 1]) {
      if (a != b) continue;
      if (mode == BuildMode::Strict) {
        throw Error(ErrorCode::DiagonalTermInStrictMode,
                    "column " + std::to_string(j) + " (element " + group.names()[j - 1] + ") carries w_" +
                        std::to_string(a) + "^2 x2^4");
      }
      has_diagonal = true;
    }
  }
  const LayoutMode layout_mode =
      mode == BuildMode::Extended || (mode == BuildMode::Auto && has_diagonal) ? LayoutMode::Extended
                                                                               : LayoutMode::Strict;

  const auto layout = row_layout(n, layout_mode);
  const int pairs = n * (n - 1) / 2;
  // Row of pair (a, b), a < b, in lexicographic order.
  auto pair_row = [n](int a, int b) { return n + (a - 1) * (2 * n - a) / 2 + (b - a - 1); };

  std::vector<std::uint8_t> e(layout.size() * static_cast<std::size_t>(n), 0);
  auto set = [&](int row, int col) { e[static_cast<std::size_t>(row) * n + col - 1] = 1; };
  for (int j = 1; j <= n; ++j) {
    set(j - 1, j);
    for (auto [a, b] : terms[j - 1]) {
      set(a == b ? n + pairs + a - 1 : pair_row(a, b), j);
    }
    set(static_cast<int>(layout.size()) - 2, j);
    set(static_cast<int>(layout.size()) - 1, j);
  }
  return BMatrix(n, layout_mode, std::move(e));
}

}  // namespace

std::vector<std::pair<int, int>> pair_terms(const Group& group, int column) {
  if (column < 1 || column > group.order()) throw Error(ErrorCode::MalformedFile, "column out of range");
  return all_pair_terms(group)[column - 1];
}

BMatrix build_B(const Group& group, BuildMode mode) {
  return assemble(group.order(), all_pair_terms(group), mode, group);
}

// ---------------------------------------------------------------------------

namespace {

struct Best {
  std::optional<BMatrix> matrix;
  std::vector<int> ordering;
  bool strict_seen = false;
};

// Scans every ordering whose second element is `second` (all of them when
// n == 1), in lexicographic order, keeping the first minimum.
Best scan_orderings(const Group& group, int second) {
  const int n = group.order();
  Best best;
  std::vector<int> order(n);
  order[0] = 1;
  std::vector<int> rest;
  if (n > 1) {
    order[1] = second;
    for (int x = 2; x <= n; ++x)
      if (x != second) rest.push_back(x);
  }
  do {
    std::copy(rest.begin(), rest.end(), order.begin() + (n > 1 ? 2 : 1));
    const Group relabeled = group.relabeled(Permutation(order));
    BMatrix b = build_B(relabeled, BuildMode::Auto);
    if (b.mode() == LayoutMode::Strict) best.strict_seen = true;
    if (!best.matrix || b < *best.matrix) {
      best.matrix = std::move(b);
      best.ordering = order;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

}  // namespace

CanonicalForm canonical_B(const Group& group) {
  const int n = group.order();
  if (n > 8) throw Error(ErrorCode::OrderTooLarge, "canonical search supports n <= 8");

  std::vector<int> seconds;
  if (n == 1) seconds.push_back(0);
  for (int x = 2; x <= n; ++x) seconds.push_back(x);

  std::vector<Best> partial(seconds.size());
  parallel_for(static_cast<int>(seconds.size()),
               [&](int i) { partial[i] = scan_orderings(group, seconds[i]); });

  CanonicalForm out;
  const Best* winner = nullptr;
  for (const auto& p : partial) {
    out.diagonal_free_ordering_exists |= p.strict_seen;
    if (!winner || *p.matrix < *winner->matrix) winner = &p;
  }
  out.matrix = *winner->matrix;
  out.ordering = Permutation(winner->ordering);
  return out;
}

Census census(int n) {
  const auto names = classified_names(n);
  Census result;
  result.order = n;
  std::set<BMatrix> distinct;
  for (const auto& name : names) {
    CensusEntry entry{name, canonical_B(catalog(name))};
    distinct.insert(entry.form.matrix);
    result.entries.push_back(std::move(entry));
  }
  result.group_count = static_cast<int>(enumerate_groups(n).size());
  result.matrices.assign(distinct.begin(), distinct.end());
  result.count = static_cast<int>(result.matrices.size());
  return result;
}

// ---------------------------------------------------------------------------

std::string serialize_B(const BMatrix& b) {
  std::ostringstream os;
  os << "# n=" << b.n() << "\n";
  os << "# mode=" << to_string(b.mode()) << "\n";
  os << "# rows=" << b.rows() << " cols=" << b.n() << "\n";
  for (int r = 0; r < b.rows(); ++r) os << "# row " << r + 1 << "=" << b.layout()[r].to_string() << "\n";
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.n(); ++c) os << (c ? " " : "") << b.at(r, c);
    os << "\n";
  }
  return os.str();
}

BMatrix parse_B(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) throw Error(ErrorCode::MalformedFile, std::string("missing ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };

  int n = 0, rows = 0, cols = 0;
  next("n header");
  if (std::sscanf(line.c_str(), "# n=%d", &n) != 1 || n < 1) throw Error(ErrorCode::MalformedFile, "bad header: " + line);
  next("mode header");
  LayoutMode mode;
  if (line == "# mode=strict") {
    mode = LayoutMode::Strict;
  } else if (line == "# mode=extended") {
    mode = LayoutMode::Extended;
  } else {
    throw Error(ErrorCode::MalformedFile, "bad header: " + line);
  }
  next("shape header");
  if (std::sscanf(line.c_str(), "# rows=%d cols=%d", &rows, &cols) != 2 || rows < 0) {
    throw Error(ErrorCode::MalformedFile, "bad header: " + line);
  }
  const auto layout = row_layout(n, mode);
  if (cols != n || rows != static_cast<int>(layout.size())) {
    throw Error(ErrorCode::LayoutMismatch, "declared shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                                               " but the layout needs " + std::to_string(layout.size()) + "x" +
                                               std::to_string(n));
  }
  for (int r = 0; r < rows; ++r) {
    next("row label");
    const std::string prefix = "# row " + std::to_string(r + 1) + "=";
    if (line.rfind(prefix, 0) != 0) throw Error(ErrorCode::MalformedFile, "expected '" + prefix + "...'");
    if (RowLabel::parse(line.substr(prefix.size())) != layout[r]) {
      throw Error(ErrorCode::LayoutMismatch, "row " + std::to_string(r + 1) + " should be " + layout[r].to_string());
    }
  }
  std::vector<std::uint8_t> entries;
  for (int r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) {
      throw Error(ErrorCode::LayoutMismatch, "grid has " + std::to_string(r) + " rows, layout needs " + std::to_string(rows));
    }
    std::istringstream ls(line);
    std::string tok;
    int c = 0;
    while (ls >> tok) {
      if (tok != "0" && tok != "1") throw Error(ErrorCode::MalformedFile, "entry '" + tok + "' is not 0 or 1");
      entries.push_back(tok == "1");
      ++c;
    }
    if (c != n) throw Error(ErrorCode::LayoutMismatch, "row " + std::to_string(r + 1) + " has " + std::to_string(c) + " entries");
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw Error(ErrorCode::LayoutMismatch, "more grid rows than the layout declares");
    }
  }
  return BMatrix(n, mode, std::move(entries));
}

}  // namespace grpmat
