#include "riordan/matrix.hpp"

#include <stdexcept>

namespace riordan {

PolyMatrix PolyMatrix::identity(unsigned n) {
  PolyMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = MultiPoly(1);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("PolyMatrix: shape mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (unsigned r = 0; r < a.rows(); ++r)
    for (unsigned j = 0; j < a.cols(); ++j) {
      if (a.at(r, j).is_zero()) continue;
      for (unsigned c = 0; c < b.cols(); ++c) {
        if (b.at(j, c).is_zero()) continue;
        out.at(r, c) += a.at(r, j) * b.at(j, c);
      }
    }
  return out;
}

std::vector<MultiPoly> PolyMatrix::apply(const std::vector<MultiPoly>& u) const {
  if (u.size() < cols_) throw std::invalid_argument("PolyMatrix: vector too short");
  std::vector<MultiPoly> out(rows_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * u[c];
  return out;
}

PolyMatrix PolyMatrix::top_left(unsigned n) const { return block(0, 0, n); }

PolyMatrix PolyMatrix::block(unsigned r0, unsigned c0, unsigned n) const {
  if (r0 + n > rows_ || c0 + n > cols_)
    throw std::invalid_argument("PolyMatrix: block out of range");
  PolyMatrix out(n, n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) out.at(r, c) = at(r0 + r, c0 + c);
  return out;
}

bool PolyMatrix::is_lower_triangular() const {
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = r + 1; c < cols_; ++c)
      if (!at(r, c).is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::invert_unit_lower_triangular() const {
  if (rows_ != cols_) throw std::invalid_argument("PolyMatrix: not square");
  for (unsigned i = 0; i < rows_; ++i)
    if (!at(i, i).is_one())
      throw std::invalid_argument("PolyMatrix: diagonal entry is not 1");
  if (!is_lower_triangular())
    throw std::invalid_argument("PolyMatrix: not lower triangular");
  unsigned n = rows_;
  PolyMatrix inv = identity(n);
  for (unsigned c = 0; c < n; ++c)
    for (unsigned r = c + 1; r < n; ++r) {
      MultiPoly s;
      for (unsigned m = c; m < r; ++m)
        if (!at(r, m).is_zero()) s += at(r, m) * inv.at(m, c);
      inv.at(r, c) = -s;
    }
  return inv;
}

PolyMatrix PolyMatrix::substitute(Var v, const Rational& value) const {
  PolyMatrix out(rows_, cols_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < cols_; ++c) out.at(r, c) = at(r, c).substitute(v, value);
  return out;
}

std::string compact_str(const MultiPoly& p) {
  std::string s = p.str();
  std::erase(s, ' ');
  return s;
}

std::string PolyMatrix::to_text() const {
  std::string out;
  for (unsigned r = 0; r < rows_; ++r) {
    for (unsigned c = 0; c < cols_; ++c) {
      if (c > 0) out.push_back(' ');
      out += compact_str(at(r, c));
    }
    out.push_back('\n');
  }
  return out;
}

bool is_tridiagonal(const PolyMatrix& m, MatrixEntryRef* witness) {
  for (unsigned r = 0; r < m.rows(); ++r)
    for (unsigned c = 0; c < m.cols(); ++c) {
      unsigned d = r > c ? r - c : c - r;
      if (d >= 2 && !m.at(r, c).is_zero()) {
        if (witness) *witness = {r, c};
        return false;
      }
    }
  return true;
}

}  // namespace riordan
