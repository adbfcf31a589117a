#include "pgl2q/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pgl2q {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

Rational& ExactMatrix::at(int row, int col) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("ExactMatrix::at(" + std::to_string(row) + ", " +
                            std::to_string(col) + ")");
  return data_[static_cast<size_t>(row) * cols_ + col];
}

const Rational& ExactMatrix::at(int row, int col) const {
  return const_cast<ExactMatrix*>(this)->at(row, col);
}

void ExactMatrix::append_row(const std::vector<Rational>& row) {
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("ExactMatrix::append_row: expected " + std::to_string(cols_) +
                                " entries, got " + std::to_string(row.size()));
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

int rank_exact(const ExactMatrix& mat) {
  const int rows = mat.rows();
  const int cols = mat.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
  for (int i = 0; i < rows; ++i) {
    Int lcm(1);
    for (int j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mat.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      const Rational& e = mat.at(i, j);
      m[i][j] = e.get_num() * (lcm / e.get_den());
    }
  }

  int rank = 0;
  Int prev(1);
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int row = rank; row < rows; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);

    for (int row = rank + 1; row < rows; ++row) {
      for (int j = col + 1; j < cols; ++j) {
        Int value = m[rank][col] * m[row][j] - m[row][col] * m[rank][j];
        mpz_divexact(m[row][j].get_mpz_t(), value.get_mpz_t(), prev.get_mpz_t());
      }
      m[row][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace pgl2q
