#ifndef EDIM_LINALG_HPP
#define EDIM_LINALG_HPP

#include <vector>

#include "numberfield.hpp"

namespace edim {

// Dense matrix with entries in a single NumberField. Row-major.
class FMatrix {
public:
  FMatrix(FieldPtr field, int rows, int cols);  // zero-filled
  static FMatrix identity(const FieldPtr& field, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  FieldElement& at(int r, int c);
  const FieldElement& at(int r, int c) const;

  FMatrix operator*(const FMatrix& rhs) const;
  FMatrix transpose() const;
  bool operator==(const FMatrix& rhs) const;

private:
  FieldPtr field_;
  int rows_;
  int cols_;
  std::vector<FieldElement> entries_;
};

struct RrefResult {
  FMatrix matrix;               // reduced row echelon form, pivots scaled to 1
  std::vector<int> pivot_cols;  // one per nonzero row, ascending
  int rank = 0;
};

RrefResult rref(const FMatrix& m);
int rank(const FMatrix& m);

// Gauss-Jordan inverse; throws InvalidArgument on a singular or non-square
// input.
FMatrix inverse(const FMatrix& m);

std::vector<FieldElement> mat_vec(const FMatrix& m,
                                  const std::vector<FieldElement>& v);

// Equality of nonzero coordinate vectors up to a nonzero scalar of the field,
// decided by cross-multiplication. Both vectors must be nonzero and of equal
// length over structurally equal fields.
bool projectively_equal(const std::vector<FieldElement>& a,
                        const std::vector<FieldElement>& b);

}  // namespace edim

#endif
