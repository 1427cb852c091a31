#include "grpmat/sullivan.hpp"

#include <functional>
#include <sstream>

namespace grpmat::sullivan {

int Monomial::degree() const {
  int d = kDegreeX1 * a + kDegreeX2 * b;
  for (int i = 0; i < 3; ++i) d += kDegreeY[i] * y[i];
  for (int c : w) d += kDegreeW * c;
  return d;
}

std::strong_ordering operator<=>(const Monomial& l, const Monomial& r) {
  if (auto c = l.degree() <=> r.degree(); c != 0) return c;
  if (auto c = l.a <=> r.a; c != 0) return c;
  if (auto c = l.b <=> r.b; c != 0) return c;
  if (auto c = l.y <=> r.y; c != 0) return c;
  return l.w <=> r.w;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Monomial& m, Rational coefficient) : n_(static_cast<int>(m.w.size())) {
  add(m, coefficient);
}

int Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, q] : terms_) {
    if (m.degree() != d) return -1;
  }
  return d;
}

void Polynomial::add(const Monomial& m, const Rational& coefficient) {
  if (static_cast<int>(m.w.size()) != n_) throw Error(ErrorCode::MalformedFile, "monomial has the wrong number of w generators");
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, q] : other.terms_) add(m, q);
  return *this;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  for (const auto& [m, q] : b.terms_) a.add(m, -q);
  return a;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Polynomial out(p.n_);
  for (const auto& [m, q] : p.terms_) out.add(m, s * q);
  return out;
}

namespace {

// Product of two monomials as (sign, monomial); sign 0 when an odd generator repeats.
std::pair<int, Monomial> multiply(const Monomial& l, const Monomial& r) {
  Monomial out = l;
  out.a += r.a;
  out.b += r.b;
  for (std::size_t j = 0; j < out.w.size(); ++j) out.w[j] += r.w[j];
  int sign = 1;
  for (int i = 0; i < 3; ++i) {
    if (!r.y[i]) continue;
    if (l.y[i]) return {0, out};
    // Moving r's y_i left past every larger y_k of l.
    for (int k = i + 1; k < 3; ++k)
      if (l.y[k]) sign = -sign;
    out.y[i] = 1;
  }
  return {sign, out};
}

}  // namespace

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out(p.n_);
  for (const auto& [ml, cl] : p.terms_) {
    for (const auto& [mr, cr] : q.terms_) {
      auto [sign, m] = multiply(ml, mr);
      if (sign != 0) out.add(m, sign * cl * cr);
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    Rational mag = q;
    if (first) {
      os << q.get_str();
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
      mag = abs(q);
      os << mag.get_str();
    }
    first = false;
    os << " *";
    std::vector<std::string> factors;
    auto power = [](const std::string& name, int e) { return e == 1 ? name : name + "^" + std::to_string(e); };
    if (m.a) factors.push_back(power("x1", m.a));
    if (m.b) factors.push_back(power("x2", m.b));
    for (int i = 0; i < 3; ++i)
      if (m.y[i]) factors.push_back("y" + std::to_string(i + 1));
    for (std::size_t j = 0; j < m.w.size(); ++j)
      if (m.w[j]) factors.push_back(power("w" + std::to_string(j + 1), m.w[j]));
    if (factors.empty()) factors.push_back("1");
    for (const auto& f : factors) os << ' ' << f;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Polynomial x1(int n) {
  auto m = Monomial::one(n);
  m.a = 1;
  return Polynomial(m);
}

Polynomial x2(int n) {
  auto m = Monomial::one(n);
  m.b = 1;
  return Polynomial(m);
}

Polynomial y(int i, int n) {
  auto m = Monomial::one(n);
  m.y.at(i - 1) = 1;
  return Polynomial(m);
}

Polynomial w(int j, int n) {
  auto m = Monomial::one(n);
  m.w.at(j - 1) = 1;
  return Polynomial(m);
}

namespace {

Polynomial power(const Polynomial& p, int e, int n) {
  Polynomial out(Monomial::one(n));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

// x1^a x2^b
Polynomial xs(int a, int b, int n) {
  auto m = Monomial::one(n);
  m.a = a;
  m.b = b;
  return Polynomial(m);
}

}  // namespace

Polynomial y_term(int n) {
  return y(1, n) * y(2, n) * xs(4, 2, n) - y(1, n) * y(3, n) * xs(5, 1, n) + y(2, n) * y(3, n) * xs(6, 0, n);
}

Polynomial differential(const Polynomial& p) {
  const int n = p.generators();
  static constexpr int dy[3][2] = {{3, 1}, {2, 2}, {1, 3}};  // d y_i = x1^a x2^b
  Polynomial out(n);
  for (const auto& [m, q] : p.terms()) {
    int position = 0;  // number of odd factors to the left
    for (int i = 0; i < 3; ++i) {
      if (!m.y[i]) continue;
      Monomial rest = m;
      rest.y[i] = 0;
      rest.a += dy[i][0];
      rest.b += dy[i][1];
      out.add(rest, position % 2 ? -q : q);
      ++position;
    }
  }
  return out;
}

Polynomial d_z(int j, const Group& group) {
  const int n = group.order();
  if (j < 1 || j > n) throw Error(ErrorCode::MalformedFile, "z index out of range");

  Polynomial out = power(w(j, n), 3, n);
  if (n > 1) {
    const auto sigmas = cayley_embed(group);
    const CycleData cycles = cycle_decompose(sigmas[1]);
    std::vector<int> partners;
    if (j < n) {
      const Permutation& next = sigmas[j];  // sigma_{j+1}
      partners.push_back(next(1));
      for (int leader : cycles.leaders) partners.push_back(next(leader));
    } else {
      partners.push_back(1);
      for (int leader : cycles.leaders) partners.push_back(leader);
    }
    for (int t : partners) out += w(j, n) * w(t, n) * xs(0, 4, n);
  }
  out += y_term(n);
  out += xs(15, 0, n);

  if (out.homogeneous_degree() != kDegreeZ + 1) {
    throw Error(ErrorCode::MalformedFile, "d z_" + std::to_string(j) + " is not homogeneous of degree 120");
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Monomial> monomial_basis(int degree, int n) {
  if (degree > kMaxBasisDegree || n > kMaxBasisGenerators || n < 0) {
    throw Error(ErrorCode::ScaleLimit, "monomial bases are limited to degree <= 200 and n <= 8");
  }
  std::vector<Monomial> out;
  if (degree < 0) return out;

  Monomial m = Monomial::one(n);
  std::function<void(int, int)> spread = [&](int slot, int left) {
    if (slot == n - 1) {
      m.w[slot] = left;
      out.push_back(m);
      return;
    }
    for (int c = left; c >= 0; --c) {
      m.w[slot] = c;
      spread(slot + 1, left - c);
    }
    m.w[slot] = 0;
  };

  for (int mask = 0; mask < 8; ++mask) {
    m.y = {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    int rest = degree;
    for (int i = 0; i < 3; ++i) rest -= kDegreeY[i] * m.y[i];
    if (rest < 0) continue;
    for (int wd = 0; kDegreeW * wd <= rest; ++wd) {
      const int xd = rest - kDegreeW * wd;
      if (wd > 0 && n == 0) break;
      for (int a = 0; kDegreeX1 * a <= xd; ++a) {
        if ((xd - kDegreeX1 * a) % kDegreeX2) continue;
        m.a = a;
        m.b = (xd - kDegreeX1 * a) / kDegreeX2;
        if (n == 0) {
          out.push_back(m);
        } else {
          spread(0, wd);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

RatVector coordinates(const Polynomial& p, const std::vector<Monomial>& basis) {
  RatVector v(basis.size());
  for (const auto& [m, q] : p.terms()) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), m, std::greater<>());
    if (it == basis.end() || !(*it == m)) throw Error(ErrorCode::MalformedFile, "monomial outside the basis");
    v[it - basis.begin()] = q;
  }
  return v;
}

Polynomial from_coordinates(const RatVector& v, const std::vector<Monomial>& basis, int n) {
  Polynomial p(n);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add(basis[i], v[i]);
  return p;
}

RatMatrix differential_matrix(const std::vector<Monomial>& source, const std::vector<Monomial>& target) {
  RatMatrix d(static_cast<int>(target.size()), static_cast<int>(source.size()));
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto image = coordinates(differential(Polynomial(source[c])), target);
    for (std::size_t r = 0; r < target.size(); ++r) d(static_cast<int>(r), static_cast<int>(c)) = image[r];
  }
  return d;
}

// ---------------------------------------------------------------------------

std::vector<RowLabel> sigma_layout(int n) { return row_layout(n, LayoutMode::Extended); }

Polynomial representative(const RowLabel& label, int n) {
  switch (label.kind) {
    case RowLabel::Kind::Cube: return power(w(label.i, n), 3, n);
    case RowLabel::Kind::Pair: return w(label.i, n) * w(label.j, n) * xs(0, 4, n);
    case RowLabel::Kind::Diag: return w(label.i, n) * w(label.i, n) * xs(0, 4, n);
    case RowLabel::Kind::YTerm: return y_term(n);
    case RowLabel::Kind::X15: return xs(15, 0, n);
  }
  return Polynomial(n);
}

namespace {

void require_slice_scale(const Group& group) {
  if (group.order() > kMaxSliceOrder) {
    throw Error(ErrorCode::ScaleLimit, "degree-120 slices are computed for n <= " + std::to_string(kMaxSliceOrder));
  }
}

// Columns of a matrix given as a list of vectors.
RatMatrix columns(const std::vector<const std::vector<RatVector>*>& blocks, int rows) {
  int cols = 0;
  for (const auto* b : blocks) cols += static_cast<int>(b->size());
  RatMatrix m(rows, cols);
  int c = 0;
  for (const auto* b : blocks) {
    for (const auto& v : *b) {
      for (int r = 0; r < rows; ++r) m(r, c) = v[r];
      ++c;
    }
  }
  return m;
}

std::vector<RatVector> coboundaries(const std::vector<Monomial>& b119, const std::vector<Monomial>& b120) {
  const auto rr = rref(differential_matrix(b119, b120).transpose());
  std::vector<RatVector> out;
  for (int i = 0; i < rr.rank; ++i) {
    RatVector v(b120.size());
    for (std::size_t c = 0; c < b120.size(); ++c) v[c] = rr.reduced(i, static_cast<int>(c));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatVector> representatives(const std::vector<RowLabel>& layout, const std::vector<Monomial>& b120, int n) {
  std::vector<RatVector> out;
  for (const auto& label : layout) out.push_back(coordinates(representative(label, n), b120));
  return out;
}

}  // namespace

CohomologySlice cohomology_slice_120(const Group& group) {
  require_slice_scale(group);
  const int n = group.order();
  CohomologySlice s;
  s.n = n;
  s.basis_119 = monomial_basis(119, n);
  s.basis_120 = monomial_basis(120, n);
  s.basis_121 = monomial_basis(121, n);
  s.coboundary_basis = coboundaries(s.basis_119, s.basis_120);

  const RatMatrix d120 = differential_matrix(s.basis_120, s.basis_121);
  s.cocycle_basis = nullspace(d120);

  const auto sigma = representatives(sigma_layout(n), s.basis_120, n);
  s.sigma_are_cocycles = true;
  for (const auto& v : sigma) {
    const RatVector image = d120 * v;
    for (const auto& q : image) s.sigma_are_cocycles &= sgn(q) == 0;
  }

  const int rows = static_cast<int>(s.basis_120.size());
  const auto rr = rref(columns({&s.coboundary_basis, &sigma, &s.cocycle_basis}, rows));
  const int bd = static_cast<int>(s.coboundary_basis.size());
  for (int p : rr.pivots) {
    if (p < bd) continue;
    const int k = p - bd;
    s.quotient_basis.push_back(k < static_cast<int>(sigma.size()) ? sigma[k] : s.cocycle_basis[k - sigma.size()]);
  }
  return s;
}

IndependenceCertificate sigma_independence(const Group& group) {
  require_slice_scale(group);
  const int n = group.order();
  const auto b119 = monomial_basis(119, n);
  const auto b120 = monomial_basis(120, n);
  const auto bd = coboundaries(b119, b120);
  const auto sigma = representatives(build_B(group, BuildMode::Auto).layout(), b120, n);

  IndependenceCertificate cert;
  cert.sigma_size = static_cast<int>(sigma.size());
  cert.coboundary_rank = static_cast<int>(bd.size());
  const auto rr = rref(columns({&bd, &sigma}, static_cast<int>(b120.size())));
  cert.combined_rank = rr.rank;
  for (int p : rr.pivots) {
    if (p >= cert.coboundary_rank) cert.sigma_pivots.push_back(p - cert.coboundary_rank);
  }
  cert.independent = cert.combined_rank - cert.coboundary_rank == cert.sigma_size;
  return cert;
}

RatMatrix b_matrix(const Group& group) {
  require_slice_scale(group);
  const int n = group.order();
  const auto b119 = monomial_basis(119, n);
  const auto b120 = monomial_basis(120, n);
  const auto bd = coboundaries(b119, b120);
  const auto layout = sigma_layout(n);
  const auto sigma = representatives(layout, b120, n);

  std::vector<RatVector> images;
  for (int j = 1; j <= n; ++j) images.push_back(coordinates(d_z(j, group), b120));

  // [Sigma | coboundaries | images]: Sigma and coboundaries together have full
  // column rank, so the Sigma rows of the reduced image block are the unique
  // Sigma coordinates of each class.
  const int unknowns = static_cast<int>(sigma.size() + bd.size());
  const auto rr = rref(columns({&sigma, &bd, &images}, static_cast<int>(b120.size())));
  int lhs_rank = 0;
  for (int p : rr.pivots) lhs_rank += p < unknowns;
  if (lhs_rank != unknowns || rr.rank != unknowns) {
    throw Error(ErrorCode::LayoutMismatch, "d z_j classes are not spanned by the Sigma-extended classes");
  }
  RatMatrix out(static_cast<int>(layout.size()), n);
  for (int r = 0; r < static_cast<int>(layout.size()); ++r)
    for (int j = 0; j < n; ++j) out(r, j) = rr.reduced(r, unknowns + j);
  return out;
}

RatMatrix restrict_rows(const RatMatrix& m, const std::vector<RowLabel>& from, const std::vector<RowLabel>& to) {
  RatMatrix out(static_cast<int>(to.size()), m.cols());
  for (int r = 0; r < static_cast<int>(to.size()); ++r) {
    const auto it = std::find(from.begin(), from.end(), to[r]);
    if (it == from.end()) throw Error(ErrorCode::LayoutMismatch, "row " + to[r].to_string() + " is missing");
    const int src = static_cast<int>(it - from.begin());
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(src, c);
  }
  return out;
}

RatMatrix induced_matrix_120(const Permutation& sigma, const std::vector<RowLabel>& layout) {
  const int n = sigma.size();
  std::vector<Polynomial> reps;
  for (const auto& label : layout) reps.push_back(representative(label, n));

  auto substitute = [&](const Polynomial& p) {
    Polynomial out(n);
    for (const auto& [m, q] : p.terms()) {
      Monomial image = m;
      for (int j = 1; j <= n; ++j) image.w[sigma(j) - 1] = m.w[j - 1];
      out.add(image, q);
    }
    return out;
  };

  const int size = static_cast<int>(layout.size());
  RatMatrix a(size, size);
  for (int c = 0; c < size; ++c) {
    const Polynomial image = substitute(reps[c]);
    const auto it = std::find(reps.begin(), reps.end(), image);
    if (it == reps.end()) {
      throw Error(ErrorCode::LayoutMismatch, "image of " + layout[c].to_string() + " is not a layout representative");
    }
    a(static_cast<int>(it - reps.begin()), c) = 1;
  }
  return a;
}

RatMatrix induced_matrix_120(const Permutation& sigma, const Group& group) {
  return induced_matrix_120(sigma, build_B(group, BuildMode::Auto).layout());
}

}  // namespace grpmat::sullivan
