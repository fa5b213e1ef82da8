#include "logdegen/multilinear.hpp"

#include "logdegen/zlin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace logdegen {
namespace multilinear {

FreeModule make_free_module(std::size_t rank) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= rank; ++i) labels.push_back("e" + std::to_string(i));
    return make_free_module(rank, std::move(labels));
}

FreeModule make_free_module(std::size_t rank, std::vector<std::string> labels) {
    if (labels.size() != rank)
        throw std::invalid_argument("free module: need one label per basis vector");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw std::invalid_argument("free module: labels must be distinct");
    return FreeModule{rank, std::move(labels)};
}

IntMatrix swap_factors(std::size_t dim_x, std::size_t dim_y) {
    IntMatrix m = IntMatrix::zero(dim_x * dim_y, dim_x * dim_y);
    for (std::size_t x = 0; x < dim_x; ++x)
        for (std::size_t y = 0; y < dim_y; ++y) m.at(y * dim_x + x, x * dim_y + y) = 1;
    return m;
}

// parity of the shuffle moving the chosen positions of a sorted tuple to the
// front: sum of positions minus the minimal possible sum
static int shuffle_sign(const std::vector<std::size_t>& positions) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) s += positions[i] - i;
    return (s % 2 == 0) ? 1 : -1;
}

static void subsets(std::size_t q, std::size_t i,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(i);
    for (std::size_t k = 0; k < i; ++k) idx[k] = k;
    if (i > q) return;
    while (true) {
        visit(idx);
        std::size_t k = i;
        while (k > 0 && idx[k - 1] == q - i + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t m = k; m < i; ++m) idx[m] = idx[m - 1] + 1;
    }
}

// exponent splittings b <= a with |b| = i
static void exponent_splits(const std::vector<std::size_t>& a, std::size_t i, std::size_t pos,
                            std::vector<std::size_t>& b,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (pos == a.size()) {
        if (i == 0) visit(b);
        return;
    }
    for (std::size_t k = 0; k <= std::min(i, a[pos]); ++k) {
        b.push_back(k);
        exponent_splits(a, i - k, pos + 1, b, visit);
        b.pop_back();
    }
}

IntMatrix comult_eta_split(PowerKind kind, std::size_t rank, std::size_t i, std::size_t j) {
    const std::size_t q = i + j;
    PowerBasis bq = power_basis(kind, rank, q);
    PowerBasis bi = power_basis(kind, rank, i);
    PowerBasis bj = power_basis(kind, rank, j);
    IntMatrix m = IntMatrix::zero(bi.size() * bj.size(), bq.size());
    for (std::size_t col = 0; col < bq.size(); ++col) {
        const auto& S = bq.tuples[col];
        if (kind == PowerKind::Wedge) {
            subsets(q, i, [&](const std::vector<std::size_t>& pos) {
                std::vector<std::size_t> T, U;
                std::size_t pi = 0;
                for (std::size_t k = 0; k < q; ++k) {
                    if (pi < pos.size() && pos[pi] == k) {
                        T.push_back(S[k]);
                        ++pi;
                    } else {
                        U.push_back(S[k]);
                    }
                }
                std::size_t row = bi.index_of(T) * bj.size() + bj.index_of(U);
                m.at(row, col) += Int(shuffle_sign(pos));
            });
        } else {
            std::vector<std::size_t> a = bq.exponents(col);
            std::vector<std::size_t> b;
            exponent_splits(a, i, 0, b, [&](const std::vector<std::size_t>& bex) {
                std::vector<std::size_t> cex(a.size());
                for (std::size_t k = 0; k < a.size(); ++k) cex[k] = a[k] - bex[k];
                Int coeff(1);
                if (kind == PowerKind::Sym)
                    for (std::size_t k = 0; k < a.size(); ++k) coeff *= binom(a[k], bex[k]);
                std::size_t row = bi.index_of(tuple_from_exponents(bex)) * bj.size() +
                                  bj.index_of(tuple_from_exponents(cex));
                m.at(row, col) += coeff;
            });
        }
    }
    return m;
}

IntMatrix comult_eta(PowerKind kind, const FreeModule& E, std::size_t q) {
    if (q < 1) throw std::invalid_argument("comult_eta: need q >= 1");
    return comult_eta_split(kind, E.rank, 1, q - 1);
}

IntMatrix mult_mu_split(PowerKind kind, std::size_t rank, std::size_t i, std::size_t j) {
    PowerBasis bq = power_basis(kind, rank, i + j);
    PowerBasis bi = power_basis(kind, rank, i);
    PowerBasis bj = power_basis(kind, rank, j);
    IntMatrix m = IntMatrix::zero(bq.size(), bi.size() * bj.size());
    for (std::size_t ci = 0; ci < bi.size(); ++ci) {
        for (std::size_t cj = 0; cj < bj.size(); ++cj) {
            std::size_t col = ci * bj.size() + cj;
            if (kind == PowerKind::Wedge) {
                // merge; zero on repeated indices, sign = parity of the merge
                std::vector<std::size_t> merged;
                const auto& T = bi.tuples[ci];
                const auto& U = bj.tuples[cj];
                std::size_t a = 0, b = 0;
                long inversions = 0;
                bool repeat = false;
                while (a < T.size() || b < U.size()) {
                    if (a < T.size() && b < U.size() && T[a] == U[b]) {
                        repeat = true;
                        break;
                    }
                    if (b >= U.size() || (a < T.size() && T[a] < U[b])) {
                        merged.push_back(T[a++]);
                    } else {
                        // an element of U jumps over the remaining elements of T
                        inversions += static_cast<long>(T.size() - a);
                        merged.push_back(U[b++]);
                    }
                }
                if (repeat) continue;
                m.at(bq.index_of(merged), col) = (inversions % 2 == 0) ? Int(1) : Int(-1);
            } else {
                std::vector<std::size_t> eb = bi.exponents(ci);
                std::vector<std::size_t> ec = bj.exponents(cj);
                std::vector<std::size_t> sum(eb.size());
                Int coeff(1);
                for (std::size_t k = 0; k < eb.size(); ++k) {
                    sum[k] = eb[k] + ec[k];
                    if (kind == PowerKind::Divided) coeff *= binom(sum[k], eb[k]);
                }
                m.at(bq.index_of(tuple_from_exponents(sum)), col) = coeff;
            }
        }
    }
    return m;
}

IntMatrix mult_mu(PowerKind kind, const FreeModule& E, std::size_t i, std::size_t j) {
    return mult_mu_split(kind, E.rank, i, j);
}

using Poly = std::map<std::vector<std::size_t>, Int>; // exponent vector -> coeff

static Poly poly_mul(const Poly& p, const Poly& q, bool divided) {
    Poly out;
    for (const auto& [ea, ca] : p) {
        for (const auto& [eb, cb] : q) {
            std::vector<std::size_t> e(ea.size());
            Int coeff = ca * cb;
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = ea[k] + eb[k];
                if (divided) coeff *= binom(e[k], ea[k]);
            }
            out[e] += coeff;
        }
    }
    return out;
}

// m-th power of a linear form: ordinary for sym, divided for divided
static Poly linear_power(const std::vector<Int>& coeffs, std::size_t m, bool divided) {
    const std::size_t n = coeffs.size();
    Poly out;
    PowerBasis exps = power_basis(PowerKind::Sym, n, m);
    for (std::size_t idx = 0; idx < exps.size(); ++idx) {
        std::vector<std::size_t> beta = exps.exponents(idx);
        Int coeff(1);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t t = 0; t < beta[k]; ++t) coeff *= coeffs[k];
        }
        if (coeff == 0) continue;
        if (!divided) {
            // multinomial m! / prod beta_k!
            Int multi(1);
            std::size_t used = 0;
            for (std::size_t k = 0; k < n; ++k) {
                multi *= binom(used + beta[k], beta[k]);
                used += beta[k];
            }
            coeff *= multi;
        }
        out[beta] += coeff;
    }
    return out;
}

IntMatrix power_functor(PowerKind kind, const IntMatrix& f, std::size_t q) {
    PowerBasis src = power_basis(kind, f.cols, q);
    PowerBasis dst = power_basis(kind, f.rows, q);
    IntMatrix m = IntMatrix::zero(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        if (kind == PowerKind::Wedge) {
            const auto& S = src.tuples[col];
            for (std::size_t row = 0; row < dst.size(); ++row) {
                const auto& T = dst.tuples[row];
                IntMatrix minor = IntMatrix::zero(q, q);
                for (std::size_t r = 0; r < q; ++r)
                    for (std::size_t c = 0; c < q; ++c) minor.at(r, c) = f.at(T[r], S[c]);
                m.at(row, col) = zlin::det_bareiss(minor);
            }
        } else {
            const bool divided = (kind == PowerKind::Divided);
            std::vector<std::size_t> a = src.exponents(col);
            Poly acc;
            acc.emplace(std::vector<std::size_t>(f.rows, 0), Int(1));
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[k] == 0) continue;
                std::vector<Int> coeffs(f.rows);
                for (std::size_t r = 0; r < f.rows; ++r) coeffs[r] = f.at(r, k);
                acc = poly_mul(acc, linear_power(coeffs, a[k], divided), divided);
            }
            for (const auto& [e, coeff] : acc) {
                if (coeff == 0) continue;
                m.at(dst.index_of(tuple_from_exponents(e)), col) = coeff;
            }
        }
    }
    return m;
}

IntMatrix alpha_power(PowerKind kind, const IntMatrix& alpha, std::size_t q) {
    if (q < 1) throw std::invalid_argument("alpha_power: need q >= 1");
    std::size_t pdim = power_rank(kind, alpha.cols, q - 1);
    return mul(kron(alpha, IntMatrix::identity(pdim)),
               comult_eta_split(kind, alpha.cols, 1, q - 1));
}

bool derivation_identity_check(PowerKind kind, const IntMatrix& alpha, std::size_t i,
                               std::size_t j) {
    if (i < 1 || j < 1) throw std::invalid_argument("derivation identity: need i, j >= 1");
    const std::size_t nE = alpha.cols, nF = alpha.rows;
    auto P = [&](std::size_t d) { return power_rank(kind, nE, d); };
    IntMatrix lhs = mul(alpha_power(kind, alpha, i + j), mult_mu_split(kind, nE, i, j));
    IntMatrix term1 = mul(kron(IntMatrix::identity(nF), mult_mu_split(kind, nE, i - 1, j)),
                          kron(alpha_power(kind, alpha, i), IntMatrix::identity(P(j))));
    IntMatrix tw = kron(swap_factors(P(i), nF), IntMatrix::identity(P(j - 1)));
    if (kind == PowerKind::Wedge && i % 2 == 1) tw = neg(tw);
    IntMatrix term2 = mul(kron(IntMatrix::identity(nF), mult_mu_split(kind, nE, i, j - 1)),
                          mul(tw, kron(IntMatrix::identity(P(i)), alpha_power(kind, alpha, j))));
    return lhs == add(term1, term2);
}

bool derivation_recursion_check(PowerKind kind, const IntMatrix& alpha, std::size_t q) {
    if (q < 2) throw std::invalid_argument("derivation recursion: need q >= 2");
    const std::size_t nE = alpha.cols, nF = alpha.rows;
    auto P = [&](std::size_t d) { return power_rank(kind, nE, d); };
    IntMatrix eta = comult_eta_split(kind, nE, 1, q - 1);
    IntMatrix part1 = mul(kron(alpha, IntMatrix::identity(P(q - 1))), eta);
    IntMatrix tw = kron(swap_factors(nE, nF), IntMatrix::identity(P(q - 2)));
    if (kind == PowerKind::Wedge) tw = neg(tw); // t = minus the standard swap
    IntMatrix part2 =
        mul(kron(IntMatrix::identity(nF), mult_mu_split(kind, nE, 1, q - 2)),
            mul(tw, mul(kron(IntMatrix::identity(nE), alpha_power(kind, alpha, q - 1)), eta)));
    IntMatrix lhs = scalar_mul(Int(q), alpha_power(kind, alpha, q));
    return lhs == add(part1, part2);
}

} // namespace multilinear
} // namespace logdegen
