#include "qcox/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <boost/rational.hpp>

#include "qcox/error.hpp"

namespace qcox::linalg {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ConstructionError("inverse of a non-square matrix");
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw ConstructionError("matrix is singular");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& generators) {
  IntMatrix a = generators;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i)
        if (a(i, col) != 0 && (best == m || std::llabs(a(i, col)) < std::llabs(a(best, col))))
          best = i;
      if (best == m) break;
      a.swap_rows(row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (a(i, col) == 0) continue;
        add_row(a, i, row, -(a(i, col) / a(row, col)));
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0)
      for (std::size_t j = 0; j < n; ++j) a(row, j) = -a(row, j);
    for (std::size_t i = 0; i < row; ++i)
      add_row(a, i, row, -floor_div(a(i, col), a(row, col)));
    ++row;
  }
  IntMatrix out(row, n);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ConstructionError("Smith form requires a square matrix");
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (pi == n || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw ConstructionError("Smith form of a singular matrix");
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      swap_cols(a, t, pj);
      swap_cols(v, t, pj);

      bool done = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        std::int64_t q = a(i, t) / a(t, t);
        if (q != 0) {
          add_row(a, i, t, -q);
          add_row(u, i, t, -q);
        }
        if (a(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        std::int64_t q = a(t, j) / a(t, t);
        if (q != 0) {
          add_col(a, j, t, -q);
          add_col(v, j, t, -q);
        }
        if (a(t, j) != 0) done = false;
      }
      if (done) {
        // Enforce d_t | every remaining entry.
        for (std::size_t i = t + 1; i < n && done; ++i)
          for (std::size_t j = t + 1; j < n && done; ++j)
            if (a(i, j) % a(t, t) != 0) {
              add_row(a, t, i, 1);
              add_row(u, t, i, 1);
              done = false;
            }
      }
      if (done) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        a(t, j) = -a(t, j);
        u(t, j) = -u(t, j);
      }
    }
  }
  SmithForm out{u, v, {}};
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

EchelonForm bareiss_echelon(Matrix<BigInt> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  EchelonForm out;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    const BigInt pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt num = pivot * m(i, j) - lead * m(r, j);
        BigInt q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        QCOX_ENSURE(rem == 0, "Bareiss step produced a non-exact division");
        m(i, j) = std::move(q);
      }
      m(i, c) = 0;
    }
    prev = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(m);
  return out;
}

std::vector<std::vector<BigInt>> integer_nullspace(const Matrix<BigInt>& m) {
  using BigRational = boost::rational<BigInt>;
  const std::size_t cols = m.cols();
  EchelonForm ech = bareiss_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> x(cols, BigRational(0));
    x[f] = 1;
    for (std::size_t k = ech.rank(); k-- > 0;) {
      std::size_t pc = ech.pivots[k];
      BigRational s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (ech.rows(k, j) != 0 && x[j].numerator() != 0) s += BigRational(ech.rows(k, j)) * x[j];
      x[pc] = -s / BigRational(ech.rows(k, pc));
    }
    BigInt lcm = 1;
    for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, v.denominator());
    std::vector<BigInt> ints(cols);
    BigInt g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      ints[j] = x[j].numerator() * (lcm / x[j].denominator());
      g = boost::multiprecision::gcd(g, ints[j]);
    }
    if (g > 1)
      for (auto& v : ints) v /= g;
    basis.push_back(std::move(ints));
  }
  return basis;
}

}  // namespace qcox::linalg
