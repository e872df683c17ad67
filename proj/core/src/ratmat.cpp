// ratmat.cpp — exact rational linear algebra and integer Smith normal form.

#include "weylkit/ratmat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace weylkit {

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dot: vector lengths " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
  }
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vec vec_neg(const Vec& v) { return vec_scale(Rat(-1), v); }

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& x) { return sgn(x) == 0; });
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("rat_from_string: empty token");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/')) {
      throw ParseError("rat_from_string: bad character in '" + s + "'");
    }
  }
  Rat x;
  try {
    x = Rat(s);
  } catch (const std::exception&) {
    throw ParseError("rat_from_string: malformed rational '" + s + "'");
  }
  // A zero denominator parses ("1/0") but is not a rational; it must be
  // rejected before canonicalize, which is undefined on such values.
  if (x.get_den() == 0) {
    throw ParseError("rat_from_string: zero denominator in '" + s + "'");
  }
  x.canonicalize();
  return x;
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(v[i]);
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Mat
// ---------------------------------------------------------------------------

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("Mat::operator*: shapes");
  Mat r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (sgn(x) == 0) continue;  // exact sparsity pays off on block matrices
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rat& y = other.at(k, j);
        if (sgn(y) != 0) r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("Mat::apply: shapes");
  Vec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(at(i, j)) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool Mat::operator==(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != other.a_[i]) return false;
  return true;
}

Vec Mat::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Mat::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Rat Mat::det() const {
  if (rows_ != cols_) throw DimensionMismatch("Mat::det: non-square");
  Mat m(*this);
  const std::size_t n = rows_;
  Rat result(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m.at(pivot, c)) == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      result = -result;
    }
    result *= m.at(c, c);
    const Rat inv_pivot = Rat(1) / m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m.at(i, c)) == 0) continue;
      const Rat f = m.at(i, c) * inv_pivot;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return result;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("Mat::inverse: non-square");
  const std::size_t n = rows_;
  Mat m(*this);
  Mat inv = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m.at(pivot, c)) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    }
    const Rat inv_pivot = Rat(1) / m.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m.at(c, j) *= inv_pivot;
      inv.at(c, j) *= inv_pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m.at(i, c)) == 0) continue;
      const Rat f = m.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::size_t Mat::rank() const {
  Mat m(*this);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && sgn(m.at(pivot, c)) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    const Rat inv_pivot = Rat(1) / m.at(r, c);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (sgn(m.at(i, c)) == 0) continue;
      const Rat f = m.at(i, c) * inv_pivot;
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

Mat mat_from_columns(const std::vector<Vec>& columns) {
  if (columns.empty()) return Mat();
  Mat m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows()) {
      throw DimensionMismatch("mat_from_columns: ragged input");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Mat mat_from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw DimensionMismatch("mat_from_rows: ragged input");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (m.rows() != b.size()) throw DimensionMismatch("solve: shapes");
  const std::size_t rows = m.rows(), cols = m.cols();
  // Augmented Gaussian elimination to row echelon form.
  Mat a(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = m.at(i, j);
    a.at(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(a.at(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j <= cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    }
    const Rat inv_pivot = Rat(1) / a.at(r, c);
    for (std::size_t j = c; j <= cols; ++j) a.at(r, j) *= inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a.at(i, c)) == 0) continue;
      const Rat f = a.at(i, c);
      for (std::size_t j = c; j <= cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(a.at(i, cols)) != 0) return std::nullopt;  // inconsistent
  }
  Vec x(cols, Rat(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a.at(k, cols);
  return x;
}

std::size_t rank_of_span(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  return mat_from_rows(vectors).rank();
}

// ---------------------------------------------------------------------------
// ZMat
// ---------------------------------------------------------------------------

ZMat ZMat::identity(std::size_t n) {
  ZMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat ZMat::transpose() const {
  ZMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ZMat ZMat::operator*(const ZMat& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("ZMat::operator*: shapes");
  ZMat r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(at(i, k)) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += at(i, k) * other.at(k, j);
    }
  return r;
}

bool ZMat::operator==(const ZMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != other.a_[i]) return false;
  return true;
}

Mat ZMat::to_mat() const {
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Rat(at(i, j));
  return m;
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

namespace {

// Elementary row/column operations applied simultaneously to the work matrix
// and the accumulated unimodular factors.

void row_swap(ZMat& d, ZMat& l, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
  for (std::size_t j = 0; j < l.cols(); ++j) std::swap(l.at(a, j), l.at(b, j));
}

void col_swap(ZMat& d, ZMat& r, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
  for (std::size_t i = 0; i < r.rows(); ++i) std::swap(r.at(i, a), r.at(i, b));
}

void row_addmul(ZMat& d, ZMat& l, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < d.cols(); ++j) d.at(dst, j) += f * d.at(src, j);
  for (std::size_t j = 0; j < l.cols(); ++j) l.at(dst, j) += f * l.at(src, j);
}

void col_addmul(ZMat& d, ZMat& r, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, dst) += f * d.at(i, src);
  for (std::size_t i = 0; i < r.rows(); ++i) r.at(i, dst) += f * r.at(i, src);
}

void row_negate(ZMat& d, ZMat& l, std::size_t i) {
  for (std::size_t j = 0; j < d.cols(); ++j) d.at(i, j) = -d.at(i, j);
  for (std::size_t j = 0; j < l.cols(); ++j) l.at(i, j) = -l.at(i, j);
}

// Locate the nonzero entry of minimal absolute value in the trailing
// submatrix starting at (t, t); returns false when that block is zero.
bool locate_min_nonzero(const ZMat& d, std::size_t t, std::size_t& bi,
                        std::size_t& bj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (sgn(d.at(i, j)) == 0) continue;
      Int v = abs(d.at(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        bi = i;
        bj = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const ZMat& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  ZMat d = a;
  ZMat l = ZMat::identity(rows);
  ZMat r = ZMat::identity(cols);

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t bi = 0, bj = 0;
    if (!locate_min_nonzero(d, t, bi, bj)) break;  // trailing block all zero
    row_swap(d, l, t, bi);
    col_swap(d, r, t, bj);

    // Reduce row/column t until the pivot is the only nonzero entry.
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d.at(i, t)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        row_addmul(d, l, i, t, -q);
        if (sgn(d.at(i, t)) != 0) {
          // Remainder is a strictly smaller pivot candidate; promote it.
          row_swap(d, l, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d.at(t, j)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
        col_addmul(d, r, j, t, -q);
        if (sgn(d.at(t, j)) != 0) {
          col_swap(d, r, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility fix-up: the pivot must divide the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols && divisible; ++j) {
          if (sgn(d.at(i, j)) != 0 && !mpz_divisible_p(d.at(i, j).get_mpz_t(),
                                                       d.at(t, t).get_mpz_t())) {
            row_addmul(d, l, t, i, Int(1));
            divisible = false;
          }
        }
      }
      if (divisible) break;
    }
    if (sgn(d.at(t, t)) < 0) row_negate(d, l, t);
  }

  // The elementary operations guarantee L*A*R == D; verify it anyway.
  if (!(l * a * r == d)) {
    throw WeylkitError("smith_normal_form: factor check L*A*R == D failed");
  }
  return SmithForm{l, d, r};
}

}  // namespace weylkit
