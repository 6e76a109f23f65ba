#include "covlab/rep/operator.hpp"

#include <cmath>

#include "covlab/errors.hpp"

namespace covlab {

Operator::Operator(BasisPtr basis, SparseMatrix matrix, std::vector<bool> valid)
    : basis_(std::move(basis)), matrix_(std::move(matrix)), valid_(std::move(valid)) {
  const auto n = static_cast<Eigen::Index>(basis_->size());
  if (matrix_.rows() != n || matrix_.cols() != n || valid_.size() != basis_->size()) {
    throw InputError("operator dimensions do not match the basis");
  }
  matrix_.makeCompressed();
}

Operator Operator::identity(BasisPtr basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  SparseMatrix m(n, n);
  m.setIdentity();
  std::vector<bool> valid(basis->size(), true);
  return Operator(std::move(basis), std::move(m), std::move(valid));
}

Operator Operator::zero(BasisPtr basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  std::vector<bool> valid(basis->size(), true);
  return Operator(std::move(basis), SparseMatrix(n, n), std::move(valid));
}

std::size_t Operator::valid_count() const {
  std::size_t c = 0;
  for (bool v : valid_) c += v ? 1 : 0;
  return c;
}

Complex Operator::entry(std::size_t row, std::size_t col) const {
  return matrix_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

double Operator::frobenius_on_valid() const {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < matrix_.outerSize(); ++j) {
    if (!valid_[static_cast<std::size_t>(j)]) continue;
    for (SparseMatrix::InnerIterator it(matrix_, j); it; ++it) sum += std::norm(it.value());
  }
  return std::sqrt(sum);
}

namespace {

void require_same_basis(const Operator& a, const Operator& b) {
  if (a.basis() == b.basis()) return;
  const BasisSpec& x = *a.basis();
  const BasisSpec& y = *b.basis();
  if (x.mode() != y.mode() || x.window() != y.window() || x.points() != y.points()) {
    throw InputError("operators act on different bases");
  }
}

std::vector<bool> intersect(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

}  // namespace

Operator operator+(const Operator& a, const Operator& b) {
  require_same_basis(a, b);
  return Operator(a.basis_, a.matrix_ + b.matrix_, intersect(a.valid_, b.valid_));
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_basis(a, b);
  return Operator(a.basis_, a.matrix_ - b.matrix_, intersect(a.valid_, b.valid_));
}

Operator operator*(const Complex& c, const Operator& a) {
  return Operator(a.basis_, c * a.matrix_, a.valid_);
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_basis(a, b);
  std::vector<bool> valid = b.valid_;
  for (Eigen::Index j = 0; j < b.matrix_.outerSize(); ++j) {
    if (!valid[static_cast<std::size_t>(j)]) continue;
    for (SparseMatrix::InnerIterator it(b.matrix_, j); it; ++it) {
      if (it.value() != Complex{} && !a.valid_[static_cast<std::size_t>(it.row())]) {
        valid[static_cast<std::size_t>(j)] = false;
        break;
      }
    }
  }
  SparseMatrix product = (a.matrix_ * b.matrix_).pruned();
  return Operator(a.basis_, std::move(product), std::move(valid));
}

double residual(const Operator& a, const Operator& b) { return (a - b).frobenius_on_valid(); }

}  // namespace covlab
