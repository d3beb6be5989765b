#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riordan/multipoly.hpp"

namespace riordan {

/// Dense matrix of MultiPoly entries. Riordan realizations are lower
/// triangular by construction; production matrices also carry the unit
/// superdiagonal, so the storage is general.
class PolyMatrix {
 public:
  PolyMatrix(unsigned rows, unsigned cols)
      : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols) {}

  static PolyMatrix identity(unsigned n);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  MultiPoly& at(unsigned r, unsigned c) { return d_[static_cast<size_t>(r) * cols_ + c]; }
  const MultiPoly& at(unsigned r, unsigned c) const {
    return d_[static_cast<size_t>(r) * cols_ + c];
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  std::vector<MultiPoly> apply(const std::vector<MultiPoly>& u) const;

  PolyMatrix top_left(unsigned n) const;
  /// Rows r0..r0+n-1, columns c0..c0+n-1.
  PolyMatrix block(unsigned r0, unsigned c0, unsigned n) const;

  bool is_lower_triangular() const;
  /// Inverse of a lower-triangular matrix with unit diagonal, by forward
  /// substitution; stays inside the polynomial ring.
  PolyMatrix invert_unit_lower_triangular() const;

  PolyMatrix substitute(Var v, const Rational& value) const;

  /// One line per row, entries joined by single spaces.
  std::string to_text() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

 private:
  unsigned rows_, cols_;
  std::vector<MultiPoly> d_;
};

/// Canonical text with intra-entry spaces removed, for space-separated rows.
std::string compact_str(const MultiPoly& p);

struct MatrixEntryRef {
  unsigned row = 0, col = 0;
};

/// True iff every entry with |r - c| >= 2 vanishes; otherwise reports the
/// first violating entry in row-major order.
bool is_tridiagonal(const PolyMatrix& m, MatrixEntryRef* witness = nullptr);

}  // namespace riordan
