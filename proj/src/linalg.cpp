#include "grpmat/linalg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace grpmat {

RatMatrix::RatMatrix(int rows, int cols, RatVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorCode::MalformedFile, "entry count does not match rows*cols");
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorCode::MalformedFile, "ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::MalformedFile, "matrix product shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::MalformedFile, "matrix sum shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  return a + Rational(-1) * b;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix out = a;
  for (auto& q : out.entries_) q *= s;
  return out;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (static_cast<int>(v.size()) != a.cols()) throw Error(ErrorCode::MalformedFile, "matrix-vector shape mismatch");
  RatVector out(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

// ---------------------------------------------------------------------------

RrefResult rref(const RatMatrix& m) {
  RrefResult res{m, {}, 0};
  RatMatrix& a = res.reduced;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (int j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (int j = c; j < cols; ++j) {
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

int rank(const RatMatrix& m) { return rref(m).rank; }

namespace {

std::vector<int> free_columns_of(const RrefResult& rr, int cols) {
  std::vector<bool> pivot(cols, false);
  for (int c : rr.pivots) pivot[c] = true;
  std::vector<int> out;
  for (int c = 0; c < cols; ++c)
    if (!pivot[c]) out.push_back(c);
  return out;
}

std::vector<RatVector> nullspace_from(const RrefResult& rr, int cols, const std::vector<int>& free) {
  std::vector<RatVector> basis;
  basis.reserve(free.size());
  for (int f : free) {
    RatVector v(static_cast<std::size_t>(cols));
    v[f] = 1;
    for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<RatVector> nullspace(const RatMatrix& m) {
  const auto rr = rref(m);
  return nullspace_from(rr, m.cols(), free_columns_of(rr, m.cols()));
}

// ---------------------------------------------------------------------------

RatMatrix IntertwinerSpace::system(const RatMatrix& b) {
  const int m = b.rows(), n = b.cols();
  const int x_unknowns = m * m;
  RatMatrix eq(m * n, m * m + n * n);
  // (XB - BY)(i, j) = sum_k X(i,k) B(k,j) - sum_k B(i,k) Y(k,j)
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      const int row = j * m + i;
      for (int k = 0; k < m; ++k) {
        if (sgn(b(k, j)) != 0) eq(row, k * m + i) += b(k, j);
      }
      for (int k = 0; k < n; ++k) {
        if (sgn(b(i, k)) != 0) eq(row, x_unknowns + j * n + k) -= b(i, k);
      }
    }
  }
  return eq;
}

IntertwinerSpace::IntertwinerSpace(const RatMatrix& b, int size_limit) : m_(b.rows()), n_(b.cols()) {
  const long long unknowns = 1LL * m_ * m_ + 1LL * n_ * n_;
  if (unknowns > size_limit) {
    throw Error(ErrorCode::SizeLimit, std::to_string(unknowns) + " unknowns exceed the limit of " +
                                          std::to_string(size_limit));
  }
  const RatMatrix eq = system(b);
  const auto rr = rref(eq);
  free_columns_ = free_columns_of(rr, eq.cols());
  basis_ = nullspace_from(rr, eq.cols(), free_columns_);
}

std::pair<RatMatrix, RatMatrix> IntertwinerSpace::unpack(const RatVector& v) const {
  RatMatrix x(m_, m_), y(n_, n_);
  for (int c = 0; c < m_; ++c)
    for (int r = 0; r < m_; ++r) x(r, c) = v[c * m_ + r];
  for (int c = 0; c < n_; ++c)
    for (int r = 0; r < n_; ++r) y(r, c) = v[m_ * m_ + c * n_ + r];
  return {std::move(x), std::move(y)};
}

RatVector IntertwinerSpace::pack(const RatMatrix& x, const RatMatrix& y) const {
  if (x.rows() != m_ || x.cols() != m_ || y.rows() != n_ || y.cols() != n_) {
    throw Error(ErrorCode::MalformedFile, "pair shape does not match the intertwiner space");
  }
  RatVector v(static_cast<std::size_t>(unknowns()));
  for (int c = 0; c < m_; ++c)
    for (int r = 0; r < m_; ++r) v[c * m_ + r] = x(r, c);
  for (int c = 0; c < n_; ++c)
    for (int r = 0; r < n_; ++r) v[m_ * m_ + c * n_ + r] = y(r, c);
  return v;
}

std::vector<std::pair<RatMatrix, RatMatrix>> IntertwinerSpace::pairs() const {
  std::vector<std::pair<RatMatrix, RatMatrix>> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(unpack(v));
  return out;
}

std::optional<RatVector> IntertwinerSpace::coordinates(const RatMatrix& x, const RatMatrix& y) const {
  const RatVector v = pack(x, y);
  RatVector coords;
  coords.reserve(free_columns_.size());
  for (int f : free_columns_) coords.push_back(v[f]);

  RatVector rebuilt(v.size());
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    if (sgn(coords[t]) == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(basis_[t][i]) != 0) rebuilt[i] += coords[t] * basis_[t][i];
    }
  }
  if (rebuilt != v) return std::nullopt;
  return coords;
}

// ---------------------------------------------------------------------------

RatMatrix perm_matrix(const Permutation& sigma) {
  const int n = sigma.size();
  RatMatrix p(n, n);
  for (int j = 1; j <= n; ++j) p(sigma(j) - 1, j - 1) = 1;
  return p;
}

PairLayout lex_pairs(int n, bool with_diagonal) {
  PairLayout out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  if (with_diagonal) {
    for (int i = 1; i <= n; ++i) out.emplace_back(i, i);
  }
  return out;
}

RatMatrix pair_perm_matrix(const Permutation& sigma, const PairLayout& layout) {
  std::map<std::pair<int, int>, int> slot;
  for (int s = 0; s < static_cast<int>(layout.size()); ++s) {
    auto [i, j] = layout[s];
    slot[{std::min(i, j), std::max(i, j)}] = s;
  }
  const int size = static_cast<int>(layout.size());
  RatMatrix p(size, size);
  for (int s = 0; s < size; ++s) {
    const int a = sigma(layout[s].first), b = sigma(layout[s].second);
    const auto it = slot.find({std::min(a, b), std::max(a, b)});
    if (it == slot.end()) {
      throw Error(ErrorCode::LayoutMismatch, "pair layout is not closed under the permutation");
    }
    p(it->second, s) = 1;
  }
  return p;
}

// ---------------------------------------------------------------------------

std::string serialize_matrix(const RatMatrix& m) {
  std::ostringstream os;
  os << "# rows=" << m.rows() << " cols=" << m.cols() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

RatMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw Error(ErrorCode::MalformedFile, "missing matrix header");
  int rows = -1, cols = -1;
  if (std::sscanf(header.c_str(), "# rows=%d cols=%d", &rows, &cols) != 2 || rows < 0 || cols < 0) {
    throw Error(ErrorCode::MalformedFile, "bad matrix header: " + header);
  }
  RatMatrix m(rows, cols);
  std::string line;
  for (int i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) throw Error(ErrorCode::MalformedFile, "matrix has too few rows");
    std::istringstream ls(line);
    std::string tok;
    int j = 0;
    while (ls >> tok) {
      if (j >= cols) throw Error(ErrorCode::MalformedFile, "row " + std::to_string(i + 1) + " has too many entries");
      Rational q;
      if (q.set_str(tok, 10) != 0 || q.get_den() == 0) {
        throw Error(ErrorCode::MalformedFile, "bad rational '" + tok + "'");
      }
      q.canonicalize();
      m(i, j++) = q;
    }
    if (j != cols) throw Error(ErrorCode::MalformedFile, "row " + std::to_string(i + 1) + " has too few entries");
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw Error(ErrorCode::MalformedFile, "trailing content after matrix");
    }
  }
  return m;
}

}  // namespace grpmat
