#include "ranklevel/matrix.hpp"

#include <utility>

namespace ranklevel {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    QMatrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
        }
    return p;
}

QMatrix QMatrix::hstack(const QMatrix& o) const {
    QMatrix h(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) h.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) h.at(i, cols_ + j) = o.at(i, j);
    }
    return h;
}

QMatrix QMatrix::vstack(const QMatrix& o) const {
    QMatrix v(rows_ + o.rows_, cols_);
    for (int j = 0; j < cols_; ++j) {
        for (int i = 0; i < rows_; ++i) v.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i) v.at(rows_ + i, j) = o.at(i, j);
    }
    return v;
}

QMatrix QMatrix::kron(const QMatrix& o) const {
    QMatrix k(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j) == 0) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q)
                    k.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
        }
    return k;
}

QMatrix QMatrix::first_columns(int n) const {
    QMatrix f(rows_, n);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < n; ++j) f.at(i, j) = at(i, j);
    return f;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        const Rat lead = m.at(row, col);
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) /= lead;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

QMatrix column_span(const QMatrix& m) {
    QMatrix t = m.transpose();
    std::vector<int> pivots = rref(t);
    QMatrix out(m.rows(), static_cast<int>(pivots.size()));
    for (int j = 0; j < out.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) out.at(i, j) = t.at(j, i);
    return out;
}

int rank(const QMatrix& m) {
    QMatrix t = m;
    return static_cast<int>(rref(t).size());
}

QMatrix kernel(const QMatrix& m) {
    QMatrix t = m;
    std::vector<int> pivots = rref(t);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    QMatrix out(m.cols(), m.cols() - static_cast<int>(pivots.size()));
    int k = 0;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        out.at(free, k) = 1;
        for (size_t p = 0; p < pivots.size(); ++p)
            out.at(pivots[p], k) = -t.at(static_cast<int>(p), free);
        ++k;
    }
    return column_span(out);
}

QMatrix annihilator(const QMatrix& m) { return kernel(m.transpose()); }

bool same_span(const QMatrix& a, const QMatrix& b) {
    return column_span(a) == column_span(b);
}

bool span_contains(const QMatrix& big, const QMatrix& small) {
    return rank(big.hstack(small)) == rank(big);
}

}  // namespace ranklevel
