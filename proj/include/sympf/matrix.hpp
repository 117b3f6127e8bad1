#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympf/scalar.hpp"

namespace sympf {

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  // Rows and columns picked by 0-based index lists, in the given order.
  Matrix submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_skew() const;  // A^T = -A (so the diagonal vanishes)
  bool is_symmetric() const;
  bool is_integral() const;
  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// J = [[0, I_r], [-I_r, 0]] for n = 2r.
Matrix symplectic_form(int n);
Rational trace(const Matrix& a);
Rational determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);
std::size_t rank(Matrix a);
// Coefficients c_0..c_n of det(T*I - A), via Faddeev-LeVerrier.
std::vector<Rational> characteristic_polynomial(const Matrix& a);

}  // namespace sympf
