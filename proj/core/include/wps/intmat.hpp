#ifndef WPS_INTMAT_HPP
#define WPS_INTMAT_HPP

#include <vector>

#include "wps/rat.hpp"

namespace wps {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Int(0)) {}
  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  IntMat operator*(const IntMat& o) const;
  IntMat transpose() const;
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  // Exact determinant (fraction-free Bareiss). Square matrices only.
  Int det() const;

  std::vector<Int> row(int i) const;

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// Dense rational matrix; carries the exact inverses of ray matrices.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  explicit RatMat(const IntMat& m);
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  RatMat operator*(const RatMat& o) const;
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  // Row vector times matrix.
  std::vector<Rat> apply_left(const std::vector<Int>& v) const;

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

/*
  Smith normal form U*A*V = S with U, V unimodular, S diagonal with a
  divisibility chain s_i | s_{i+1} and nonnegative diagonal. Pivoting is
  smallest nonzero absolute value with row-major tie-break, so the result
  is reproducible. v_inv is maintained alongside V (V * v_inv = I); the
  coset walks in the fan module consume it directly.
*/
struct SnfResult {
  IntMat U, S, V;
  IntMat v_inv;
};

SnfResult smith_normal_form(const IntMat& A);

// Row-style Hermite normal form H = U*A, U unimodular: row echelon, positive
// pivots, entries above each pivot reduced into [0, pivot).
struct HnfResult {
  IntMat U, H;
};

HnfResult hermite_normal_form(const IntMat& A);

// Exact inverse. Throws std::domain_error on singular input (a singular ray
// matrix would mean a degenerate cone, which valid fans never produce).
RatMat rat_inverse(const IntMat& A);
RatMat rat_inverse(const RatMat& A);

}  // namespace wps

#endif  // WPS_INTMAT_HPP
