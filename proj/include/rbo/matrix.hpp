#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct SingularError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct ConvergenceError : Error {
  double last_residual = 0.0;
  ConvergenceError(const std::string& what, double r) : Error(what), last_residual(r) {}
};
struct GateError : Error {
  using Error::Error;
};
struct UnsupportedError : Error {
  using Error::Error;
};

using Vec = std::vector<double>;

/// Dense real matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix col_vector(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  Matrix transpose() const;
  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_col(std::size_t j, const Vec& v);

  double norm1() const;     // max column sum
  double norm_inf() const;  // max row sum
  double norm_fro() const;
  double norm_max() const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, Matrix a);
Vec operator*(const Matrix& a, const Vec& x);

Matrix commutator(const Matrix& a, const Matrix& b);

// Vector helpers.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(double s, const Vec& a);
Vec& vec_axpy(Vec& y, double s, const Vec& x);
double vec_dot(const Vec& a, const Vec& b);
double vec_norm(const Vec& a);
double vec_norm_inf(const Vec& a);
Vec vec_cat(const Vec& a, const Vec& b);

/// Absolute/relative tolerance pair used by the rank engine.
struct Tolerance {
  double abs = 0.0;
  double rel = 1e-9;
  double threshold(double scale) const { return abs + rel * scale; }
};

}  // namespace rbo
