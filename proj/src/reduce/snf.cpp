#include <utility>

#include "bezout_domain.hpp"
#include "edr/reduce/reduction.hpp"

namespace edr {

namespace {

// Working state P*A*Q = M with P, Q accumulated alongside every operation.
class Reducer {
public:
    explicit Reducer(const Matrix& A)
        : M_(A), P_(Matrix::identity(A.ring(), A.rows())), Q_(Matrix::identity(A.ring(), A.cols())) {}

    ReductionCertificate run() {
        const std::size_t n = std::min(M_.rows(), M_.cols());
        for (std::size_t t = 0; t < n; ++t) {
            if (!place_pivot(t)) break;  // trailing block is zero
            for (;;) {
                clear(t);
                auto bad = non_multiple(t);
                if (!bad) break;
                merge(t, bad->first, bad->second);
            }
            Element u = normalizing_unit(M_(t, t));
            if (!(u == M_.ring().one())) scale_row(t, u);
        }
        return {std::move(P_), std::move(M_), std::move(Q_)};
    }

private:
    // rows (i, k) <- T * rows (i, k)
    static void rows2(Matrix& X, std::size_t i, std::size_t k, const Matrix& T) {
        for (std::size_t j = 0; j < X.cols(); ++j) {
            Element xi = X(i, j), xk = X(k, j);
            X(i, j) = T(0, 0) * xi + T(0, 1) * xk;
            X(k, j) = T(1, 0) * xi + T(1, 1) * xk;
        }
    }
    // cols (j, l) <- cols (j, l) * T
    static void cols2(Matrix& X, std::size_t j, std::size_t l, const Matrix& T) {
        for (std::size_t i = 0; i < X.rows(); ++i) {
            Element xj = X(i, j), xl = X(i, l);
            X(i, j) = xj * T(0, 0) + xl * T(1, 0);
            X(i, l) = xj * T(0, 1) + xl * T(1, 1);
        }
    }
    void row_op(std::size_t i, std::size_t k, const Matrix& T) {
        rows2(M_, i, k, T);
        rows2(P_, i, k, T);
    }
    void col_op(std::size_t j, std::size_t l, const Matrix& T) {
        cols2(M_, j, l, T);
        cols2(Q_, j, l, T);
    }
    void scale_row(std::size_t t, const Element& u) {
        for (std::size_t j = 0; j < M_.cols(); ++j) M_(t, j) *= u;
        for (std::size_t j = 0; j < P_.cols(); ++j) P_(t, j) *= u;
    }

    Matrix swap_matrix() const {
        const Ring& R = M_.ring();
        return mat2(R.zero(), R.one(), R.one(), R.zero());
    }

    // Smallest-norm nonzero entry of the trailing block moved to (t, t).
    bool place_pivot(std::size_t t) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_norm;
        for (std::size_t i = t; i < M_.rows(); ++i)
            for (std::size_t j = t; j < M_.cols(); ++j) {
                if (M_(i, j).is_zero()) continue;
                Integer nrm = euclidean_norm(M_(i, j));
                if (!best || nrm < best_norm) {
                    best = {i, j};
                    best_norm = nrm;
                }
            }
        if (!best) return false;
        if (best->first != t) row_op(t, best->first, swap_matrix());
        if (best->second != t) col_op(t, best->second, swap_matrix());
        return true;
    }

    // Row t and column t zero outside the pivot.
    void clear(std::size_t t) {
        const Ring& R = M_.ring();
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < M_.rows(); ++i) {
                if (M_(i, t).is_zero()) continue;
                if (auto q = divides(M_(t, t), M_(i, t))) {
                    row_op(t, i, mat2(R.one(), R.zero(), -*q, R.one()));
                } else {
                    row_op(t, i, hermite_reduce_2x1(M_(t, t), M_(i, t)).P);
                    dirty = true;  // the pivot shrank; row t may be dirty again
                }
            }
            for (std::size_t j = t + 1; j < M_.cols(); ++j) {
                if (M_(t, j).is_zero()) continue;
                if (auto q = divides(M_(t, t), M_(t, j))) {
                    col_op(t, j, mat2(R.one(), -*q, R.zero(), R.one()));
                } else {
                    col_op(t, j, hermite_reduce_1x2(M_(t, t), M_(t, j)).Q);
                    dirty = true;
                }
            }
        }
    }

    std::optional<std::pair<std::size_t, std::size_t>> non_multiple(std::size_t t) const {
        for (std::size_t i = t + 1; i < M_.rows(); ++i)
            for (std::size_t j = t + 1; j < M_.cols(); ++j)
                if (!M_(i, j).is_zero() && !divides(M_(t, t), M_(i, j))) return std::make_pair(i, j);
        return std::nullopt;
    }

    // Pivot d at (t, t) fails to divide e at (i, j). With g = gcd(d, e) the
    // block [[d, 0], [0, e]] is g times a comaximal 2x2, whose reduction
    // diag(1, *) brings g to the pivot.
    void merge(std::size_t t, std::size_t i, std::size_t j) {
        const Ring& R = M_.ring();
        const std::size_t k = t + 1;
        // swapping in rows/cols beyond t keeps row t and column t clear
        if (i != k) row_op(k, i, swap_matrix());
        if (j != k) col_op(k, j, swap_matrix());
        auto cert = bezout_gcd(M_(t, t), M_(k, k));
        Matrix core(R, 2, 2);
        core(0, 0) = cert.a1;
        core(1, 1) = cert.b1;
        auto red = reduce_2x2_comaximal(core);
        row_op(t, k, red.P);
        col_op(t, k, red.Q);
    }

    Matrix M_, P_, Q_;
};

}  // namespace

ReductionCertificate smith_normal_form(const Matrix& A) {
    require_bezout_domain(A.ring());
    return Reducer(A).run();
}

Element determinant(const Matrix& M) {
    const Ring& R = M.ring();
    require_bezout_domain(R);
    if (M.rows() != M.cols()) throw ShapeMismatch("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    Matrix a = M;
    Element prev = R.one();
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a(r, k).is_zero()) ++r;
            if (r == n) return R.zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Element num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = *divides(prev, num);  // Sylvester: always exact
            }
            a(i, k) = R.zero();
        }
        prev = a(k, k);
    }
    Element det = n ? a(n - 1, n - 1) : R.one();
    return negate ? -det : det;
}

Matrix inverse_unimodular(const Matrix& M) {
    const Ring& R = M.ring();
    require_bezout_domain(R);
    if (M.rows() != M.cols()) throw ShapeMismatch("inverse of a non-square matrix");
    const std::size_t n = M.rows();
    Matrix aug(R, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = M(i, j);
        aug(i, n + i) = R.one();
    }
    auto combine = [&](std::size_t i, std::size_t k, const Matrix& T) {
        for (std::size_t j = 0; j < 2 * n; ++j) {
            Element xi = aug(i, j), xk = aug(k, j);
            aug(i, j) = T(0, 0) * xi + T(0, 1) * xk;
            aug(k, j) = T(1, 0) * xi + T(1, 1) * xk;
        }
    };
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t i = t + 1; i < n; ++i)
            if (!aug(i, t).is_zero()) combine(t, i, hermite_reduce_2x1(aug(t, t), aug(i, t)).P);
        auto inv = inverse(aug(t, t));
        if (!inv) throw PreconditionError("matrix is not unimodular");
        for (std::size_t j = 0; j < 2 * n; ++j) aug(t, j) *= *inv;
    }
    for (std::size_t t = n; t-- > 0;)
        for (std::size_t i = 0; i < t; ++i) {
            Element f = aug(i, t);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(t, j);
        }
    Matrix out(R, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

}  // namespace edr
