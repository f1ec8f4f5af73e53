#pragma once

#include <vector>

#include "ranklevel/rational.hpp"

namespace ranklevel {

/*
 * Dense exact-rational matrices.  Subspaces are matrices whose columns span;
 * the canonical form for a column span is the reduced column echelon form,
 * so subspace equality is matrix equality after canonicalization.
 */
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0)) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const QMatrix& o) const = default;

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;

    // Columns of this followed by columns of o.
    QMatrix hstack(const QMatrix& o) const;

    // Rows of this followed by rows of o.
    QMatrix vstack(const QMatrix& o) const;

    // Kronecker product (a tensor e_i (x) f_j basis in row-major order).
    QMatrix kron(const QMatrix& o) const;

    // First n columns.
    QMatrix first_columns(int n) const;

  private:
    int rows_;
    int cols_;
    std::vector<Rat> a_;
};

// Reduced column echelon form with zero columns dropped: the canonical basis
// of the column span.
QMatrix column_span(const QMatrix& m);

int rank(const QMatrix& m);

// Basis of the null space { x : m x = 0 }, as columns.
QMatrix kernel(const QMatrix& m);

// Annihilator of the column span inside the dual space: kernel of the
// transpose, canonicalized.
QMatrix annihilator(const QMatrix& m);

// Exact subspace predicates on column spans.
bool same_span(const QMatrix& a, const QMatrix& b);
bool span_contains(const QMatrix& big, const QMatrix& small);

}  // namespace ranklevel
