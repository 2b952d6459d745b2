#include "linalg.hpp"

#include "err.hpp"

namespace edim {

FMatrix::FMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  FieldElement::zero(field_));
}

FMatrix FMatrix::identity(const FieldPtr& field, int n) {
  FMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
  return m;
}

FieldElement& FMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw InvalidArgument("matrix index out of range");
  return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
}

const FieldElement& FMatrix::at(int r, int c) const {
  return const_cast<FMatrix*>(this)->at(r, c);
}

FMatrix FMatrix::operator*(const FMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("matrix shape mismatch");
  if (!field_->same(*rhs.field_)) throw InvalidArgument("matrix field mismatch");
  FMatrix out(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = out.at(i, j) + aik * rhs.at(k, j);
    }
  return out;
}

FMatrix FMatrix::transpose() const {
  FMatrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool FMatrix::operator==(const FMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != rhs.at(i, j)) return false;
  return true;
}

RrefResult rref(const FMatrix& m) {
  RrefResult result{m, {}, 0};
  FMatrix& a = result.matrix;
  int pivot_row = 0;
  for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    int found = -1;
    for (int r = pivot_row; r < a.rows(); ++r) {
      if (!a.at(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pivot_row, c), a.at(found, c));
    const FieldElement inv = a.at(pivot_row, col).inverse();
    for (int c = col; c < a.cols(); ++c)
      a.at(pivot_row, c) = a.at(pivot_row, c) * inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a.at(r, col).is_zero()) continue;
      const FieldElement factor = a.at(r, col);
      for (int c = col; c < a.cols(); ++c)
        a.at(r, c) = a.at(r, c) - factor * a.at(pivot_row, c);
    }
    result.pivot_cols.push_back(col);
    ++pivot_row;
  }
  result.rank = pivot_row;
  return result;
}

int rank(const FMatrix& m) { return rref(m).rank; }

FMatrix inverse(const FMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of non-square matrix");
  const int n = m.rows();
  FMatrix aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = FieldElement::one(m.field());
  }
  const RrefResult red = rref(aug);
  if (red.rank < n) throw InvalidArgument("singular matrix");
  for (int i = 0; i < n; ++i)
    if (red.pivot_cols[static_cast<std::size_t>(i)] != i)
      throw InvalidArgument("singular matrix");
  FMatrix out(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = red.matrix.at(i, n + j);
  return out;
}

std::vector<FieldElement> mat_vec(const FMatrix& m,
                                  const std::vector<FieldElement>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw InvalidArgument("matrix-vector shape mismatch");
  std::vector<FieldElement> out(static_cast<std::size_t>(m.rows()),
                                FieldElement::zero(m.field()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i)] =
          out[static_cast<std::size_t>(i)] + m.at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

bool projectively_equal(const std::vector<FieldElement>& a,
                        const std::vector<FieldElement>& b) {
  if (a.size() != b.size() || a.empty())
    throw InvalidArgument("projective comparison needs equal nonzero lengths");
  bool a_nonzero = false, b_nonzero = false;
  for (const auto& x : a) a_nonzero = a_nonzero || !x.is_zero();
  for (const auto& x : b) b_nonzero = b_nonzero || !x.is_zero();
  if (!a_nonzero || !b_nonzero)
    throw InvalidArgument("projective comparison of the zero vector");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace edim
