#include "ranklevel/parlin.hpp"

#include <random>
#include <stdexcept>

namespace ranklevel {

QMatrix ParabolicSpace::subspace_of_dim(int k) const {
    const YoungDiagram t = type.transpose();
    for (int i = 1; i <= t.rows(); ++i)
        if (t.part(i) == k) return filtration[static_cast<size_t>(i - 1)];
    if (k == 0) return QMatrix(dim, 0);
    throw std::invalid_argument("dimension not realized by the filtration type");
}

void ParabolicSpace::validate() const {
    const YoungDiagram t = type.transpose();
    if (static_cast<int>(filtration.size()) != t.rows())
        throw std::invalid_argument("filtration length must match the type's level");
    for (int i = 1; i <= t.rows(); ++i) {
        const QMatrix& m = filtration[static_cast<size_t>(i - 1)];
        if (m.rows() != dim) throw std::invalid_argument("filtration ambient mismatch");
        if (m.cols() != t.part(i) || rank(m) != t.part(i))
            throw std::invalid_argument("filtration rank must equal the transpose part");
        if (column_span(m) != m)
            throw std::invalid_argument("filtration subspaces must be canonical");
        if (i > 1 && !span_contains(filtration[static_cast<size_t>(i - 2)], m))
            throw std::invalid_argument("filtration must be decreasing");
        if (i > 1 && t.part(i) == t.part(i - 1) && m != filtration[static_cast<size_t>(i - 2)])
            throw std::invalid_argument("equal-dimension filtration entries must coincide");
    }
}

ParabolicSpace standard_space(int rank_, const YoungDiagram& lambda) {
    if (lambda.rows() != rank_)
        throw std::invalid_argument("standard_space rank must match the diagram rows");
    const YoungDiagram t = lambda.transpose();
    ParabolicSpace E{rank_, lambda, {}};
    const QMatrix id = QMatrix::identity(rank_);
    for (int i = 1; i <= t.rows(); ++i) E.filtration.push_back(id.first_columns(t.part(i)));
    E.validate();
    return E;
}

ParabolicSpace random_space(int rank_, const YoungDiagram& lambda, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    QMatrix basis(rank_, rank_);
    do {
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) basis.at(i, j) = entry(rng);
    } while (rank(basis) != rank_);

    const ParabolicSpace std_space = standard_space(rank_, lambda);
    ParabolicSpace E{rank_, lambda, {}};
    for (const QMatrix& m : std_space.filtration)
        E.filtration.push_back(column_span(basis * m));
    // Canonicalization can only merge equal spans, never change ranks.
    E.validate();
    return E;
}

ParabolicSpace dual_space(const ParabolicSpace& E) {
    const int l = E.type.level();
    ParabolicSpace D{E.dim, E.type.conjugate(), {}};
    for (int i = 1; i <= l; ++i)
        D.filtration.push_back(annihilator(E.filtration[static_cast<size_t>(l - i)]));
    D.validate();
    return D;
}

namespace {

// Outer corners (row alpha, column beta = lambda_alpha) of a diagram,
// including the last-row corner when a_r > 0.
std::vector<std::pair<int, int>> corners(const YoungDiagram& d) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= d.rows(); ++i) {
        const int next = i < d.rows() ? d.part(i + 1) : 0;
        if (d.part(i) > next) out.emplace_back(i, d.part(i));
    }
    return out;
}

}  // namespace

QMatrix tensor_subspace(const ParabolicSpace& E, const ParabolicSpace& F) {
    const YoungDiagram& lambda = E.type;
    if (!(F.type == lambda.transpose()))
        throw std::invalid_argument("tensor_subspace needs types lambda and lambda^T");
    QMatrix acc(E.dim * F.dim, 0);
    for (auto [alpha, beta] : corners(lambda)) {
        // E-side member of dimension alpha, F-side member of dimension beta.
        const QMatrix& e_part = E.subspace_of_dim(alpha);
        const QMatrix& f_part = F.subspace_of_dim(beta);
        acc = acc.hstack(e_part.kron(f_part));
    }
    return column_span(acc);
}

QMatrix parabolic_hom(const ParabolicSpace& E, const ParabolicSpace& F) {
    const YoungDiagram& lambda = E.type;
    const int l = lambda.level();
    if (!(F.type == lambda.transpose().conjugate()))
        throw std::invalid_argument("parabolic_hom needs types lambda and lambda^{T*}");
    const int dim_e = E.dim, dim_f = F.dim;

    // Unknown map M: E -> F, dim_f x dim_e, vectorized column-major.  For a
    // corner (alpha, beta): M * A must land in span(B), i.e. C^T M A = 0 for
    // C the annihilator of B.
    QMatrix conditions(0, dim_e * dim_f);
    for (auto [alpha, beta] : corners(lambda)) {
        const QMatrix& A = E.subspace_of_dim(alpha);
        const QMatrix B = F.subspace_of_dim(l - beta);
        const QMatrix C = annihilator(B);  // dim_f x (dim_f - (l - beta))
        QMatrix rows(A.cols() * C.cols(), dim_e * dim_f);
        for (int a = 0; a < A.cols(); ++a)
            for (int c = 0; c < C.cols(); ++c)
                for (int i = 0; i < dim_e; ++i)
                    for (int j = 0; j < dim_f; ++j)
                        rows.at(a * C.cols() + c, i * dim_f + j) = A.at(i, a) * C.at(j, c);
        conditions = conditions.vstack(rows);
    }
    if (conditions.rows() == 0) return QMatrix::identity(dim_e * dim_f);
    return kernel(conditions);
}

bool annihilator_check(const ParabolicSpace& E, const ParabolicSpace& F) {
    const QMatrix hom = parabolic_hom(E, F);
    const ParabolicSpace D = dual_space(F);  // type lambda^T on F's dual
    const QMatrix G = tensor_subspace(E, D);
    // E (x) F^dual pairs with Hom(E, F) coordinatewise under the chosen
    // vectorization, so the annihilator is the kernel of G^T.
    return same_span(annihilator(G), hom);
}

StringFiltration string_filtration(const QMatrix& E_flag, const QMatrix& F_flag,
                                   const YoungDiagram& lambda) {
    const int r = lambda.rows(), l = lambda.level();
    if (E_flag.rows() != r || E_flag.cols() != r || F_flag.rows() != l || F_flag.cols() != l)
        throw std::invalid_argument("string_filtration needs full square flags");
    const DiagramString s = string_of(lambda);

    StringFiltration out;
    for (int k = 0; k <= r + l; ++k) {
        const int kR = s.count_R_after(k);
        const int kL = s.count_L_from(k);
        // Maps F -> E vanishing on the first (l - kL) flag columns of F and
        // landing in the first kR flag columns of E.
        const QMatrix F_low = F_flag.first_columns(l - kL);
        const QMatrix E_high = E_flag.first_columns(kR);
        // M = E_high * X * (annihilator of F_low)^T over free X: the span of
        // all e_col (x) f_ann combinations.
        const QMatrix F_ann = annihilator(F_low);  // l x kL
        QMatrix basis(r * l, E_high.cols() * F_ann.cols());
        for (int a = 0; a < E_high.cols(); ++a)
            for (int b = 0; b < F_ann.cols(); ++b)
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < l; ++j)
                        basis.at(i * l + j, a * F_ann.cols() + b) =
                            E_high.at(i, a) * F_ann.at(j, b);
        out.spaces.push_back(column_span(basis));
        out.dims.push_back(out.spaces.back().cols());
        out.k_L.push_back(kL);
        out.k_R.push_back(kR);
    }
    return out;
}

int schubert_tangent_dim(const YoungDiagram& lambda) {
    const int r = lambda.rows(), l = lambda.level();
    // Torus-fixed point data: E spanned by the I coordinates carries the
    // first-coordinate type-lambda filtration (the ambient flag restricted
    // to ascending I), and the quotient F on the J coordinates carries the
    // induced type lambda^{T*} filtration by first J-coordinates.
    ParabolicSpace E = standard_space(r, lambda);
    ParabolicSpace F = standard_space(l, lambda.transpose().conjugate());
    return parabolic_hom(E, F).cols();
}

}  // namespace ranklevel
