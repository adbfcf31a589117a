#ifndef PGL2Q_MATRIX_HPP
#define PGL2Q_MATRIX_HPP

#include <vector>

#include "pgl2q/rational.hpp"

namespace pgl2q {

// Dense matrix with exact rational entries, row-major storage.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int row, int col);
  const Rational& at(int row, int col) const;

  void append_row(const std::vector<Rational>& row);

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

// Rank over the rationals, computed by fraction-free (Bareiss) elimination on
// the integer matrix obtained by clearing each row's denominators.  Pivot
// choice is deterministic: the first row with a nonzero entry in the leftmost
// unresolved column.
int rank_exact(const ExactMatrix& mat);

}  // namespace pgl2q

#endif  // PGL2Q_MATRIX_HPP
