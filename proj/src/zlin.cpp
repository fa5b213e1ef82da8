#include "logdegen/zlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace logdegen {
namespace zlin {

namespace {

struct SnfWork {
    IntMatrix D, U, V;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (std::size_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (std::size_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    // row[dst] += c * row[src]
    void add_row(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < D.cols; ++j) D.at(dst, j) += c * D.at(src, j);
        for (std::size_t j = 0; j < U.cols; ++j) U.at(dst, j) += c * U.at(src, j);
    }
    // col[dst] += c * col[src]
    void add_col(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < D.rows; ++i) D.at(i, dst) += c * D.at(i, src);
        for (std::size_t i = 0; i < V.rows; ++i) V.at(i, dst) += c * V.at(i, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < D.cols; ++j) D.at(i, j) = -D.at(i, j);
        for (std::size_t j = 0; j < U.cols; ++j) U.at(i, j) = -U.at(i, j);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows, n = A.cols;
    SnfWork w{A, IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix& D = w.D;
    const std::size_t lim = std::min(m, n);

    for (std::size_t t = 0; t < lim; ++t) {
        // minimal-absolute-value pivot in the trailing submatrix
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D.at(i, j) != 0 &&
                    (pi == m || abs_int(D.at(i, j)) < abs_int(D.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break; // submatrix is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (bool clean = false; !clean;) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = round_div(D.at(i, t), D.at(t, t));
                w.add_row(i, t, -q);
                if (D.at(i, t) != 0) { // remainder is a smaller pivot
                    w.swap_rows(t, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = round_div(D.at(t, j), D.at(t, t));
                w.add_col(j, t, -q);
                if (D.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the whole trailing submatrix
            const Int& p = D.at(t, t);
            for (std::size_t i = t + 1; i < m && clean; ++i)
                for (std::size_t j = t + 1; j < n && clean; ++j)
                    if (D.at(i, j) % p != 0) {
                        w.add_row(t, i, 1);
                        clean = false;
                    }
        }
        if (D.at(t, t) < 0) w.negate_row(t);
    }
    return SmithForm{w.U, w.D, w.V};
}

std::vector<Int> elementary_divisors(const IntMatrix& A) {
    SmithForm f = smith_normal_form(A);
    std::size_t lim = std::min(A.rows, A.cols);
    std::vector<Int> d(lim);
    for (std::size_t i = 0; i < lim; ++i) d[i] = f.D.at(i, i);
    return d;
}

IntMatrix hnf_columns(const IntMatrix& A) {
    IntMatrix H = A;
    const std::size_t m = H.rows, n = H.cols;
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(H.at(r, a), H.at(r, b));
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t r = 0; r < m; ++r) H.at(r, dst) += c * H.at(r, src);
    };

    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = c; j < n; ++j)
                if (H.at(r, j) != 0 && (best == n || abs_int(H.at(r, j)) < abs_int(H.at(r, best))))
                    best = j;
            if (best == n) break;
            swap_cols(c, best);
            bool done = true;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (H.at(r, j) == 0) continue;
                add_col(j, c, -round_div(H.at(r, j), H.at(r, c)));
                if (H.at(r, j) != 0) done = false;
            }
            if (done) break;
        }
        if (H.at(r, c) != 0) {
            if (H.at(r, c) < 0)
                for (std::size_t i = 0; i < m; ++i) H.at(i, c) = -H.at(i, c);
            for (std::size_t j = 0; j < c; ++j) {
                Int q = fdiv(H.at(r, j), H.at(r, c));
                if (q != 0) add_col(j, c, -q);
            }
            ++c;
        }
    }
    return H.submatrix(0, 0, m, c);
}

IntMatrix kernel_basis(const IntMatrix& A) {
    SmithForm f = smith_normal_form(A);
    const std::size_t m = A.rows, n = A.cols, lim = std::min(m, n);
    std::vector<std::size_t> ker_cols;
    for (std::size_t k = 0; k < n; ++k)
        if (k >= lim || f.D.at(k, k) == 0) ker_cols.push_back(k);
    IntMatrix K(n, ker_cols.size());
    for (std::size_t j = 0; j < ker_cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) K.at(i, j) = f.V.at(i, ker_cols[j]);
    return hnf_columns(K);
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& A) {
    std::vector<Int> d = elementary_divisors(A);
    AbelianGroupInvariants inv;
    std::size_t nonzero = 0;
    for (const Int& x : d) {
        if (x == 0) continue;
        ++nonzero;
        if (x > 1) inv.torsion.push_back(x);
    }
    inv.free_rank = A.rows - nonzero;
    return inv;
}

std::optional<IntMatrix> solve(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows != B.rows) throw std::invalid_argument("solve: shape mismatch");
    SmithForm f = smith_normal_form(A);
    const std::size_t m = A.rows, n = A.cols, lim = std::min(m, n);
    IntMatrix Y = mul(f.U, B);
    IntMatrix Z(n, B.cols);
    for (std::size_t c = 0; c < B.cols; ++c) {
        for (std::size_t i = 0; i < m; ++i) {
            const Int& y = Y.at(i, c);
            if (i < lim && f.D.at(i, i) != 0) {
                if (y % f.D.at(i, i) != 0) return std::nullopt;
                Z.at(i, c) = y / f.D.at(i, i);
            } else if (y != 0) {
                return std::nullopt;
            }
        }
    }
    return mul(f.V, Z);
}

std::size_t rank_ff(const IntMatrix& A) {
    IntMatrix W = A;
    const std::size_t m = W.rows, n = W.cols;
    std::size_t r = 0;
    Int prev = 1;
    while (r < m && r < n) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = r; i < m && pi == m; ++i)
            for (std::size_t j = r; j < n; ++j)
                if (W.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == m) break;
        for (std::size_t c = 0; c < n; ++c) std::swap(W.at(r, c), W.at(pi, c));
        for (std::size_t i = 0; i < m; ++i) std::swap(W.at(i, r), W.at(i, pj));
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                W.at(i, j) = (W.at(i, j) * W.at(r, r) - W.at(i, r) * W.at(r, j)) / prev;
            W.at(i, r) = 0;
        }
        prev = W.at(r, r);
        ++r;
    }
    return r;
}

Int det_bareiss(const IntMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("det: not square");
    const std::size_t n = A.rows;
    if (n == 0) return 1;
    IntMatrix W = A;
    Int prev = 1;
    int sign = 1;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (W.at(r, r) == 0) {
            std::size_t pi = n;
            for (std::size_t i = r + 1; i < n; ++i)
                if (W.at(i, r) != 0) {
                    pi = i;
                    break;
                }
            if (pi == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(W.at(r, c), W.at(pi, c));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                W.at(i, j) = (W.at(i, j) * W.at(r, r) - W.at(i, r) * W.at(r, j)) / prev;
            W.at(i, r) = 0;
        }
        prev = W.at(r, r);
    }
    return sign > 0 ? W.at(n - 1, n - 1) : Int(-W.at(n - 1, n - 1));
}

IntMatrix inverse_unimodular(const IntMatrix& M) {
    if (!M.is_square()) throw std::invalid_argument("inverse: not square");
    SmithForm f = smith_normal_form(M);
    for (std::size_t i = 0; i < M.rows; ++i)
        if (f.D.at(i, i) != 1) throw std::invalid_argument("inverse: matrix not unimodular");
    return mul(f.V, f.U); // U M V = I  =>  M^{-1} = V U
}

bool is_saturated_lattice(const IntMatrix& B) {
    return cokernel_invariants(B).torsion.empty();
}

bool same_column_lattice(const IntMatrix& A, const IntMatrix& B) {
    return hnf_columns(A) == hnf_columns(B);
}

} // namespace zlin
} // namespace logdegen
