#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "covlab/algebra/scalar.hpp"
#include "covlab/rep/basis.hpp"

namespace covlab {

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::ColMajor>;
using DenseMatrix = Eigen::MatrixXcd;

/// A truncated operator: the matrix in the basis order together with the
/// set of columns that are represented exactly ("valid"). Entries of
/// invalid columns carry no meaning and every norm ignores them.
class Operator {
 public:
  Operator(BasisPtr basis, SparseMatrix matrix, std::vector<bool> valid);

  static Operator identity(BasisPtr basis);
  static Operator zero(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  const SparseMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return static_cast<std::size_t>(matrix_.cols()); }
  bool valid(std::size_t col) const { return valid_[col]; }
  const std::vector<bool>& valid_columns() const { return valid_; }
  std::size_t valid_count() const;

  Complex entry(std::size_t row, std::size_t col) const;
  DenseMatrix dense() const { return DenseMatrix(matrix_); }

  /// Frobenius norm over the valid columns.
  double frobenius_on_valid() const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Complex& c, const Operator& a);
  /// Column j of a*b is exact when column j of b is exact and every row
  /// where it is nonzero names an exact column of a.
  friend Operator operator*(const Operator& a, const Operator& b);

 private:
  BasisPtr basis_;
  SparseMatrix matrix_;
  std::vector<bool> valid_;
};

/// ||a - b||_F on the columns where both are valid.
double residual(const Operator& a, const Operator& b);

}  // namespace covlab
