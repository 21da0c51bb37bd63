#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace hm {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const IntegerMatrix& other) const = default;

  IntegerMatrix multiply(const IntegerMatrix& rhs) const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row a += c * row b
  void add_row(int a, int b, const Int& c);
  /// col a += c * col b
  void add_col(int a, int b, const Int& c);
  void negate_row(int a);

  /// Rank over Q by fraction-free (Bareiss) elimination; input unchanged.
  int rank() const;

  std::string to_string() const;
  /// Row-major nested arrays, e.g. [[1,0],[0,1]].
  std::string to_json() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace hm
