#include "aobound/lattice.hpp"

#include <algorithm>

namespace aobound {

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct Gcdext {
  Integer g, s, t;
};

Gcdext gcdext(const Integer& a, const Integer& b) {
  Gcdext r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

// rows (p, q) <- (a*p + b*q, c*p + d*q)
void combine_rows(IntMatrix& m, std::size_t p, std::size_t q, const Integer& a,
                  const Integer& b, const Integer& c, const Integer& d) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = a * m(p, j) + b * m(q, j);
    Integer y = c * m(p, j) + d * m(q, j);
    m(p, j) = std::move(x);
    m(q, j) = std::move(y);
  }
}

void combine_cols(IntMatrix& m, std::size_t p, std::size_t q, const Integer& a,
                  const Integer& b, const Integer& c, const Integer& d) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer x = a * m(i, p) + b * m(i, q);
    Integer y = c * m(i, p) + d * m(i, q);
    m(i, p) = std::move(x);
    m(i, q) = std::move(y);
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Zero s(q, col) against the pivot s(p, col), mirroring every row operation
// on u.  The 2x2 transform has determinant 1.
void eliminate_row(IntMatrix& s, IntMatrix& u, std::size_t p, std::size_t q,
                   std::size_t col) {
  const Integer a = s(p, col);
  const Integer b = s(q, col);
  if (b == 0) return;
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const Integer k = -(b / a);
    add_row_multiple(s, q, p, k);
    add_row_multiple(u, q, p, k);
    return;
  }
  const Gcdext e = gcdext(a, b);
  const Integer c = -(b / e.g);
  const Integer d = a / e.g;
  combine_rows(s, p, q, e.s, e.t, c, d);
  combine_rows(u, p, q, e.s, e.t, c, d);
}

void eliminate_col(IntMatrix& s, IntMatrix& v, std::size_t p, std::size_t q,
                   std::size_t row) {
  const Integer a = s(row, p);
  const Integer b = s(row, q);
  if (b == 0) return;
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const Integer k = -(b / a);
    add_col_multiple(s, q, p, k);
    add_col_multiple(v, q, p, k);
    return;
  }
  const Gcdext e = gcdext(a, b);
  const Integer c = -(b / e.g);
  const Integer d = a / e.g;
  combine_cols(s, p, q, e.s, e.t, c, d);
  combine_cols(v, p, q, e.s, e.t, c, d);
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm f{m, IntMatrix::identity(m.rows())};
  IntMatrix& h = f.h;
  IntMatrix& u = f.u;
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) eliminate_row(h, u, r, i, col);
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer k = -floor_div(h(i, col), h(r, col));
      if (k == 0) continue;
      add_row_multiple(h, i, r, k);
      add_row_multiple(u, i, r, k);
    }
    ++r;
  }
  return f;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = f.s;
  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest non-zero entry of the trailing block becomes the pivot.
    std::size_t pi = rows;
    std::size_t pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (s(i, j) == 0) continue;
        if (pi == rows || abs(s(i, j)) < abs(s(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    s.swap_rows(t, pi);
    f.u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    f.v.swap_cols(t, pj);

    for (;;) {
      for (;;) {
        for (std::size_t i = t + 1; i < rows; ++i) eliminate_row(s, f.u, t, i, t);
        bool row_dirty = false;
        for (std::size_t j = t + 1; j < cols; ++j) row_dirty = row_dirty || s(t, j) != 0;
        if (!row_dirty) break;
        for (std::size_t j = t + 1; j < cols; ++j) eliminate_col(s, f.v, t, j, t);
        bool col_dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) col_dirty = col_dirty || s(i, t) != 0;
        if (!col_dirty) break;
      }
      // The pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row_multiple(s, t, bad, Integer(1));
      add_row_multiple(f.u, t, bad, Integer(1));
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(f.u, t);
    }
  }
  return f;
}

std::vector<Integer> smith_diagonal(const SmithForm& f) {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(f.s.rows(), f.s.cols()); ++i) d.push_back(f.s(i, i));
  return d;
}

std::vector<std::size_t> echelon_pivots(const IntMatrix& h) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (j == h.cols()) break;
    pivots.push_back(j);
  }
  return pivots;
}

bool is_hermite_normal(const IntMatrix& h) {
  const auto pivots = echelon_pivots(h);
  // Rows after the last pivot row must be zero.
  for (std::size_t i = pivots.size(); i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) return false;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t c = pivots[r];
    if (r > 0 && c <= pivots[r - 1]) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t i = r + 1; i < h.rows(); ++i)
      if (h(i, c) != 0) return false;
    for (std::size_t i = 0; i < r; ++i)
      if (h(i, c) < 0 || h(i, c) >= h(r, c)) return false;
  }
  return true;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw DomainError("singular matrix");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace aobound
