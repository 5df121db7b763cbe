#include "singclass/linalg.hpp"

#include "singclass/errors.hpp"

namespace singclass {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::from_int(field, 1);
  return m;
}

namespace {

// Gauss-Jordan on `work`, mirroring row operations on `mirror` when given.
std::size_t eliminate(Matrix& work, Matrix* mirror) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < work.cols() && rank < work.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < work.rows() && work.at(pivot, c).is_zero()) ++pivot;
    if (pivot == work.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work.at(pivot, j), work.at(rank, j));
      if (mirror) {
        for (std::size_t j = 0; j < mirror->cols(); ++j) std::swap(mirror->at(pivot, j), mirror->at(rank, j));
      }
    }
    const Scalar inv = work.at(rank, c).inverse();
    for (std::size_t j = 0; j < work.cols(); ++j) work.at(rank, j) *= inv;
    if (mirror) {
      for (std::size_t j = 0; j < mirror->cols(); ++j) mirror->at(rank, j) *= inv;
    }
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r == rank || work.at(r, c).is_zero()) continue;
      const Scalar factor = work.at(r, c);
      for (std::size_t j = 0; j < work.cols(); ++j) work.at(r, j) -= factor * work.at(rank, j);
      if (mirror) {
        for (std::size_t j = 0; j < mirror->cols(); ++j) mirror->at(r, j) -= factor * mirror->at(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix work = *this;
  return eliminate(work, nullptr);
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  Matrix work = *this;
  Matrix inv = identity(field_, rows_);
  if (eliminate(work, &inv) != rows_) return std::nullopt;
  return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ArityMismatch, "matrix shapes do not match");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace singclass
