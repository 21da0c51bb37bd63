#include "hm/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hm {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix multiply: shape mismatch");
  IntegerMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Int& b = rhs.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

void IntegerMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row(int a, int b, const Int& c) {
  if (c == 0) return;
  for (int j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntegerMatrix::add_col(int a, int b, const Int& c) {
  if (c == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntegerMatrix::negate_row(int a) {
  for (int j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

int IntegerMatrix::rank() const {
  IntegerMatrix m = *this;
  int r = 0;
  Int prev = 1;
  for (int col = 0; col < m.cols_ && r < m.rows_; ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows_; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.swap_rows(r, pivot);
    for (int i = r + 1; i < m.rows_; ++i) {
      for (int j = col + 1; j < m.cols_; ++j)
        m.at(i, j) = (m.at(r, col) * m.at(i, j) - m.at(i, col) * m.at(r, j)) / prev;
      m.at(i, col) = 0;
    }
    prev = m.at(r, col);
    ++r;
  }
  return r;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

std::string IntegerMatrix::to_json() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace hm
