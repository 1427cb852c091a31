#include "grpmat/groups.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace grpmat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotDerangedAtOne: return "NotDerangedAtOne";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::DiagonalTermInStrictMode: return "DiagonalTermInStrictMode";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::MixedContext: return "MixedContext";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::ScaleLimit: return "ScaleLimit";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) {
      throw Error(ErrorCode::MalformedFile, "permutation images are not a bijection of 1..n");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const int from = cycle[t];
      const int to = cycle[(t + 1) % cycle.size()];
      if (from < 1 || from > n || to < 1 || to > n) {
        throw Error(ErrorCode::MalformedFile, "cycle entry out of range");
      }
      images[from - 1] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= size(); ++k) inv[(*this)(k) - 1] = k;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (int k = 1; k <= size(); ++k) {
    if (images_[k - 1] != k) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = (*this)(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t t = 0; t < cycle.size(); ++t) os << (t ? " " : "") << cycle[t];
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorCode::MalformedFile, "composing permutations of different degree");
  }
  std::vector<int> images(lhs.images_.size());
  for (int k = 1; k <= rhs.size(); ++k) images[k - 1] = lhs(rhs(k));
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("g" + std::to_string(i));
  return names;
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  const std::size_t shown = std::min<std::size_t>(violations.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    os << (i ? "; " : "") << to_string(violations[i].code) << " (" << violations[i].message << ")";
  }
  if (violations.size() > shown) os << "; ... " << violations.size() - shown << " more";
  return os.str();
}

}  // namespace

GroupValidationError::GroupValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorCode::MalformedFile : violations.front().code,
            describe(violations)),
      violations_(std::move(violations)) {}

ValidationResult validate(const Table& t, std::vector<std::string> names) {
  ValidationResult result;
  auto& out = result.violations;
  const int n = static_cast<int>(t.size());

  if (n == 0) {
    out.push_back({ErrorCode::MalformedFile, "empty table", {}});
    return result;
  }
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(t[j].size()) != n) {
      out.push_back({ErrorCode::MalformedFile, "row " + std::to_string(j + 1) + " has wrong length", {j + 1}});
      return result;
    }
    for (int k = 0; k < n; ++k) {
      if (t[j][k] < 1 || t[j][k] > n) {
        out.push_back({ErrorCode::MalformedFile, "entry out of range 1..n", {j + 1, k + 1}});
        return result;
      }
    }
  }
  if (!names.empty() && static_cast<int>(names.size()) != n) {
    out.push_back({ErrorCode::MalformedFile, "names must have n entries", {}});
    return result;
  }

  for (int k = 1; k <= n; ++k) {
    if (t[0][k - 1] != k) {
      out.push_back({ErrorCode::IdentityViolated, "table[1][" + std::to_string(k) + "] != " + std::to_string(k), {1, k}});
    }
    if (t[k - 1][0] != k) {
      out.push_back({ErrorCode::IdentityViolated, "table[" + std::to_string(k) + "][1] != " + std::to_string(k), {k, 1}});
    }
  }

  for (int j = 1; j <= n; ++j) {
    std::vector<bool> row(n + 1, false), col(n + 1, false);
    for (int k = 1; k <= n; ++k) {
      const int r = t[j - 1][k - 1];
      const int c = t[k - 1][j - 1];
      if (row[r]) out.push_back({ErrorCode::NotLatinSquare, "row " + std::to_string(j) + " repeats " + std::to_string(r), {j, k}});
      if (col[c]) out.push_back({ErrorCode::NotLatinSquare, "column " + std::to_string(j) + " repeats " + std::to_string(c), {k, j}});
      row[r] = col[c] = true;
    }
  }

  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      const int ab = t[a - 1][b - 1];
      for (int c = 1; c <= n; ++c) {
        if (t[ab - 1][c - 1] != t[a - 1][t[b - 1][c - 1] - 1]) {
          out.push_back({ErrorCode::NotAssociative, "(ab)c != a(bc)", {a, b, c}});
        }
      }
    }
  }

  for (int a = 1; a <= n; ++a) {
    const auto& row = t[a - 1];
    if (std::find(row.begin(), row.end(), 1) == row.end()) {
      out.push_back({ErrorCode::NoInverse, "element " + std::to_string(a) + " has no right inverse", {a}});
    }
  }

  if (out.empty()) {
    result.group = Group(t, names.empty() ? default_names(n) : std::move(names));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Group

Group Group::from_table(Table table, std::vector<std::string> names) {
  auto result = validate(table, std::move(names));
  if (!result.ok()) throw GroupValidationError(std::move(result.violations));
  return std::move(*result.group);
}

int Group::inverse(int a) const {
  const auto& row = table_[a - 1];
  return static_cast<int>(std::find(row.begin(), row.end(), 1) - row.begin()) + 1;
}

int Group::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (int a = 1; a <= order(); ++a) {
    for (int b = a + 1; b <= order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Group Group::relabeled(const Permutation& ordering) const {
  const int n = order();
  if (ordering.size() != n || ordering(1) != 1) {
    throw Error(ErrorCode::IdentityViolated, "relabeling must fix the identity");
  }
  const Permutation back = ordering.inverse();
  Table t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 1; i <= n; ++i) {
    names[i - 1] = names_[ordering(i) - 1];
    for (int j = 1; j <= n; ++j) t[i - 1][j - 1] = back(mul(ordering(i), ordering(j)));
  }
  return Group(std::move(t), std::move(names));
}

// ---------------------------------------------------------------------------
// File format

Group parse_group(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedFile, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("table")) {
    throw Error(ErrorCode::MalformedFile, "group file needs fields \"n\" and \"table\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw Error(ErrorCode::MalformedFile, "\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());

  const auto& rows = doc["table"];
  if (!rows.is_array() || rows.size() != n) {
    throw Error(ErrorCode::MalformedFile, "\"table\" must be an array of n rows");
  }
  Table table;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::MalformedFile, "every table row must have n entries");
    }
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error(ErrorCode::MalformedFile, "table entries must be integers");
      const auto x = v.get<long long>();
      if (x < 1 || x > static_cast<long long>(n)) {
        throw Error(ErrorCode::MalformedFile, "table entry out of range 1..n");
      }
      r.push_back(static_cast<int>(x));
    }
    table.push_back(std::move(r));
  }

  std::vector<std::string> names;
  if (doc.contains("names")) {
    const auto& ns = doc["names"];
    if (!ns.is_array() || ns.size() != n) throw Error(ErrorCode::MalformedFile, "\"names\" must have n strings");
    for (const auto& v : ns) {
      if (!v.is_string()) throw Error(ErrorCode::MalformedFile, "\"names\" must have n strings");
      names.push_back(v.get<std::string>());
    }
  }
  return Group::from_table(std::move(table), std::move(names));
}

std::string serialize_group(const Group& group) {
  nlohmann::ordered_json doc;
  doc["n"] = group.order();
  doc["names"] = group.names();
  doc["table"] = group.table();
  return doc.dump() + "\n";
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

Group cyclic(int n) {
  Table t(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) {
    names.push_back(j == 0 ? "e" : j == 1 ? "a" : "a^" + std::to_string(j));
    for (int k = 0; k < n; ++k) t[j][k] = (j + k) % n + 1;
  }
  return Group::from_table(std::move(t), std::move(names));
}

// Lexicographic on components: (a, b) has index a * |B| + b (0-based).
Group direct_product(const Group& a, const Group& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  Table t(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    names.push_back("(" + a.names()[x / nb] + "," + b.names()[x % nb] + ")");
    for (int y = 0; y < n; ++y) {
      const int p = a.mul(x / nb + 1, y / nb + 1) - 1;
      const int q = b.mul(x % nb + 1, y % nb + 1) - 1;
      t[x][y] = p * nb + q + 1;
    }
  }
  return Group::from_table(std::move(t), std::move(names));
}

template <class Element, class Mul>
Group from_elements(const std::vector<Element>& elements, Mul mul, std::vector<std::string> names) {
  const int n = static_cast<int>(elements.size());
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto it = std::find(elements.begin(), elements.end(), mul(elements[x], elements[y]));
      t[x][y] = static_cast<int>(it - elements.begin()) + 1;
    }
  }
  return Group::from_table(std::move(t), std::move(names));
}

// e, (12), (13), (23), (123), (132); products compose right to left.
Group symmetric3() {
  using P = std::array<int, 3>;
  const std::vector<P> el = {P{1, 2, 3}, P{2, 1, 3}, P{3, 2, 1}, P{1, 3, 2}, P{2, 3, 1}, P{3, 1, 2}};
  auto mul = [](const P& s, const P& t) { return P{s[t[0] - 1], s[t[1] - 1], s[t[2] - 1]}; };
  return from_elements(el, mul, {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

// r^i s^j ordered e, r, r^2, r^3, s, rs, r^2s, r^3s, with s r s = r^-1.
Group dihedral4() {
  using E = std::pair<int, int>;
  std::vector<E> el;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) el.emplace_back(i, j);
  auto mul = [](const E& x, const E& y) {
    const int rot = x.second == 0 ? x.first + y.first : x.first - y.first;
    return E{((rot % 4) + 4) % 4, (x.second + y.second) % 2};
  };
  return from_elements(el, mul, {"e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"});
}

// 1, -1, i, -i, j, -j, k, -k.
Group quaternion() {
  using E = std::pair<int, int>;  // (sign, unit) with unit 0=1, 1=i, 2=j, 3=k
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const std::vector<E> el = {{1, 0}, {-1, 0}, {1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {1, 3}, {-1, 3}};
  auto mul = [](const E& x, const E& y) {
    return E{x.first * y.first * sign[x.second][y.second], unit[x.second][y.second]};
  };
  return from_elements(el, mul, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"Z1", "Z2", "Z3", "Z4", "V4", "Z5", "Z6", "S3", "Z7", "Z8", "Z2xZ4", "Z2^3", "D4", "Q8"};
}

Group catalog(std::string_view name) {
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '1' && name[1] <= '8') return cyclic(name[1] - '0');
  if (name == "V4" || name == "Z2xZ2") return direct_product(cyclic(2), cyclic(2));
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion();
  if (name == "Z2xZ4") return direct_product(cyclic(2), cyclic(4));
  if (name == "Z2^3" || name == "Z2xZ2xZ2") return direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2));
  throw Error(ErrorCode::UnknownName, "no catalog group named '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Cayley embedding and cycle data

std::vector<Permutation> cayley_embed(const Group& group) {
  std::vector<Permutation> out;
  out.reserve(group.order());
  for (const auto& row : group.table()) out.emplace_back(row);
  return out;
}

CycleData cycle_decompose(const Permutation& sigma2) {
  if (sigma2.size() < 2 || sigma2(1) != 2) {
    throw Error(ErrorCode::NotDerangedAtOne, "sigma_2 must send 1 to 2");
  }
  CycleData data;
  for (auto& cycle : sigma2.cycles()) {
    if (cycle.front() == 1) {
      data.anchor_cycle = std::move(cycle);
    } else {
      data.leaders.push_back(cycle.front());
      data.cycle_lengths.push_back(static_cast<int>(cycle.size()));
    }
  }
  return data;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::vector<int> order_profile(const Group& g) {
  std::vector<int> orders;
  for (int a = 1; a <= g.order(); ++a) orders.push_back(g.element_order(a));
  return orders;
}

}  // namespace

std::optional<Permutation> brute_iso(const Group& g, const Group& h) {
  const int n = g.order();
  if (h.order() != n) return std::nullopt;

  const auto og = order_profile(g), oh = order_profile(h);
  {
    auto sg = og, sh = oh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }

  std::vector<int> phi(n + 1, 0), preimage(n + 1, 0);
  phi[1] = preimage[1] = 1;

  auto consistent = [&](int a) {
    for (int b = 1; b <= n; ++b) {
      if (!phi[b]) continue;
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        const int xy = g.mul(x, y);
        const int img = h.mul(phi[x], phi[y]);
        if (phi[xy] ? phi[xy] != img : preimage[img] != 0) return false;
      }
    }
    return true;
  };

  std::function<bool(int)> extend = [&](int a) {
    if (a > n) return true;
    for (int x = 2; x <= n; ++x) {
      if (preimage[x] || oh[x - 1] != og[a - 1]) continue;
      phi[a] = x;
      preimage[x] = a;
      if (consistent(a) && extend(a + 1)) return true;
      phi[a] = 0;
      preimage[x] = 0;
    }
    return false;
  };

  if (!extend(2)) return std::nullopt;
  return Permutation(std::vector<int>(phi.begin() + 1, phi.end()));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Backtracking over normalized tables (identity row and column fixed) with
// Latin and partial associativity pruning; every completed table is a group.
class TableSearch {
 public:
  explicit TableSearch(int n) : n_(n), t_(n + 1, std::vector<int>(n + 1, 0)),
      row_used_(n + 1, std::vector<bool>(n + 1, false)), col_used_(n + 1, std::vector<bool>(n + 1, false)) {
    for (int k = 1; k <= n; ++k) {
      set(1, k, k);
      set(k, 1, k);
    }
  }

  void run(const std::function<void(const Table&)>& emit) { fill(2, 2, emit); }

 private:
  void set(int a, int b, int c) {
    t_[a][b] = c;
    row_used_[a][c] = col_used_[b][c] = true;
  }
  void unset(int a, int b) {
    const int c = t_[a][b];
    row_used_[a][c] = col_used_[b][c] = false;
    t_[a][b] = 0;
  }

  // Checks every associativity instance (xy)z = x(yz) that uses cell (a,b)
  // and whose other lookups are already known.
  bool associative_at(int a, int b) const {
    const int c = t_[a][b];
    for (int z = 1; z <= n_; ++z) {  // x=a, y=b
      const int lhs = t_[c][z], bz = t_[b][z];
      if (lhs && bz && t_[a][bz] && lhs != t_[a][bz]) return false;
    }
    for (int x = 1; x <= n_; ++x) {  // y=a, z=b
      const int xa = t_[x][a], xc = t_[x][c];
      if (xa && t_[xa][b] && xc && t_[xa][b] != xc) return false;
    }
    for (int x = 1; x <= n_; ++x) {  // (xy)=a, z=b
      for (int y = 1; y <= n_; ++y) {
        if (t_[x][y] != a) continue;
        const int yb = t_[y][b];
        if (yb && t_[x][yb] && t_[x][yb] != c) return false;
      }
    }
    for (int y = 1; y <= n_; ++y) {  // x=a, (yz)=b
      for (int z = 1; z <= n_; ++z) {
        if (t_[y][z] != b) continue;
        const int ay = t_[a][y];
        if (ay && t_[ay][z] && t_[ay][z] != c) return false;
      }
    }
    return true;
  }

  void fill(int a, int b, const std::function<void(const Table&)>& emit) {
    if (a > n_) {
      Table out(n_, std::vector<int>(n_));
      for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out[i - 1][j - 1] = t_[i][j];
      emit(out);
      return;
    }
    const int na = b == n_ ? a + 1 : a;
    const int nb = b == n_ ? 2 : b + 1;
    for (int c = 1; c <= n_; ++c) {
      if (row_used_[a][c] || col_used_[b][c]) continue;
      set(a, b, c);
      if (associative_at(a, b)) fill(na, nb, emit);
      unset(a, b);
    }
  }

  int n_;
  std::vector<std::vector<int>> t_;
  std::vector<std::vector<bool>> row_used_, col_used_;
};

}  // namespace

std::vector<std::string> classified_names(int n) {
  static const std::map<int, std::vector<std::string>> by_order = {
      {1, {"Z1"}}, {2, {"Z2"}}, {3, {"Z3"}}, {4, {"Z4", "V4"}}, {5, {"Z5"}},
      {6, {"Z6", "S3"}}, {7, {"Z7"}}, {8, {"Z8", "Z2xZ4", "Z2^3", "D4", "Q8"}}};
  const auto it = by_order.find(n);
  if (it == by_order.end()) throw Error(ErrorCode::UnsupportedOrder, "orders 1..8 are supported");
  return it->second;
}

std::vector<Group> enumerate_groups(int n, EnumerationMode mode) {
  if (n < 1 || n > 8) throw Error(ErrorCode::UnsupportedOrder, "orders 1..8 are supported");

  if (mode == EnumerationMode::Classified) {
    std::vector<Group> out;
    for (const auto& name : classified_names(n)) out.push_back(catalog(name));
    return out;
  }

  std::vector<Group> reps;
  TableSearch(n).run([&](const Table& table) {
    Group candidate = Group::from_table(table);
    for (const auto& rep : reps) {
      if (brute_iso(candidate, rep)) return;
    }
    reps.push_back(std::move(candidate));
  });
  return reps;
}

}  // namespace grpmat
