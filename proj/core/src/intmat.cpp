#include "wps/intmat.hpp"

#include <cstdlib>
#include <utility>

namespace wps {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat: shape mismatch in product");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> IntMat::row(int i) const {
  std::vector<Int> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Int IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("IntMat::det: not square");
  const int n = rows_;
  if (n == 0) return 1;
  IntMat a = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(a.at(i, k)) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = t;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()), e_(static_cast<size_t>(rows_) * cols_) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMat: shape mismatch in product");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

std::vector<Rat> RatMat::apply_left(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("RatMat: vector length mismatch");
  std::vector<Rat> r(cols_);
  for (int i = 0; i < rows_; ++i) {
    if (sgn(v[i]) == 0) continue;
    const Rat vi{v[i]};
    for (int j = 0; j < cols_; ++j) r[j] += vi * at(i, j);
  }
  return r;
}

namespace {

struct SnfWork {
  IntMat a, u, v, vinv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row_i -= f * row_j
  void row_sub(int i, int j, const Int& f) {
    if (sgn(f) == 0) return;
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) -= f * a.at(j, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) -= f * u.at(j, c);
  }
  // col_i -= f * col_j   (so V <- V*E, Vinv <- E^{-1}*Vinv)
  void col_sub(int i, int j, const Int& f) {
    if (sgn(f) == 0) return;
    for (int r = 0; r < a.rows(); ++r) a.at(r, i) -= f * a.at(r, j);
    for (int r = 0; r < v.rows(); ++r) v.at(r, i) -= f * v.at(r, j);
    for (int c = 0; c < vinv.cols(); ++c) vinv.at(j, c) += f * vinv.at(i, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

// Smallest nonzero |entry| in the trailing submatrix, row-major tie-break.
bool find_pivot(const IntMat& a, int t, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = t; i < a.rows(); ++i)
    for (int j = t; j < a.cols(); ++j) {
      const Int& x = a.at(i, j);
      if (sgn(x) == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& A) {
  const int m = A.rows(), n = A.cols();
  SnfWork w{A, IntMat::identity(m), IntMat::identity(n), IntMat::identity(n)};
  const int rank_bound = m < n ? m : n;
  for (int t = 0; t < rank_bound; ++t) {
    for (;;) {
      int pi, pj;
      if (!find_pivot(w.a, t, pi, pj)) goto done;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, t).get_mpz_t(), w.a.at(t, t).get_mpz_t());
        w.row_sub(i, t, q);
        if (sgn(w.a.at(i, t)) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a.at(t, j).get_mpz_t(), w.a.at(t, t).get_mpz_t());
        w.col_sub(j, t, q);
        if (sgn(w.a.at(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the submatrix for the chain to hold.
      bool divides_all = true;
      for (int i = t + 1; i < m && divides_all; ++i)
        for (int j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(w.a.at(i, j).get_mpz_t(), w.a.at(t, t).get_mpz_t())) {
            w.row_sub(t, i, Int(-1));  // pull the offending row up and restart
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (sgn(w.a.at(t, t)) < 0) w.negate_row(t);
  }
done:
  return SnfResult{std::move(w.u), std::move(w.a), std::move(w.v), std::move(w.vinv)};
}

HnfResult hermite_normal_form(const IntMat& A) {
  const int m = A.rows(), n = A.cols();
  IntMat h = A, u = IntMat::identity(m);
  auto row_sub = [&](int i, int j, const Int& f) {
    if (sgn(f) == 0) return;
    for (int c = 0; c < n; ++c) h.at(i, c) -= f * h.at(j, c);
    for (int c = 0; c < m; ++c) u.at(i, c) -= f * u.at(j, c);
  };
  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(h.at(i, c), h.at(j, c));
    for (int c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < n; ++c) h.at(i, c) = -h.at(i, c);
    for (int c = 0; c < m; ++c) u.at(i, c) = -u.at(i, c);
  };
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    // Euclid down the column until a single nonzero entry remains.
    for (;;) {
      int p = -1;
      Int best;
      for (int i = r; i < m; ++i) {
        if (sgn(h.at(i, col)) == 0) continue;
        Int ax = abs(h.at(i, col));
        if (p < 0 || ax < best) { p = i; best = ax; }
      }
      if (p < 0) break;
      swap_rows(r, p);
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
        row_sub(i, r, q);
        if (sgn(h.at(i, col)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < m && sgn(h.at(r, col)) != 0) {
      if (sgn(h.at(r, col)) < 0) negate_row(r);
      for (int i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
        row_sub(i, r, q);
      }
      ++r;
    }
  }
  return HnfResult{std::move(u), std::move(h)};
}

RatMat rat_inverse(const RatMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("rat_inverse: not square");
  const int n = A.rows();
  RatMat a = A, inv = RatMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) { p = i; break; }
    if (p < 0) throw std::domain_error("rat_inverse: singular matrix");
    if (p != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(col, j), a.at(p, j));
        std::swap(inv.at(col, j), inv.at(p, j));
      }
    const Rat piv = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= piv;
      inv.at(col, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const Rat f = a.at(i, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

RatMat rat_inverse(const IntMat& A) { return rat_inverse(RatMat(A)); }

}  // namespace wps
