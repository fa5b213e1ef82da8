#include "logdegen/symalg.hpp"

#include "logdegen/power_basis.hpp"
#include "logdegen/zlin.hpp"

#include <numeric>
#include <stdexcept>

namespace logdegen {
namespace multilinear {

std::size_t TruncatedSymAlgebra::index_of(const std::vector<std::size_t>& expo) const {
    auto it = index.find(expo);
    if (it == index.end()) throw std::out_of_range("sym algebra: monomial outside truncation");
    return it->second;
}

std::size_t TruncatedSymAlgebra::degree_cutoff(std::size_t m) const {
    std::size_t count = 0;
    for (const auto& e : monomials) {
        std::size_t d = 0;
        for (std::size_t x : e) d += x;
        if (d <= m) ++count;
    }
    return count;
}

TruncatedSymAlgebra make_truncated_sym_algebra(std::size_t rank, std::size_t max_degree) {
    TruncatedSymAlgebra S;
    S.rank = rank;
    S.max_degree = max_degree;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        PowerBasis bas = power_basis(PowerKind::Sym, rank, d);
        for (std::size_t i = 0; i < bas.size(); ++i) {
            S.index.emplace(bas.exponents(i), S.monomials.size());
            S.monomials.push_back(bas.exponents(i));
        }
    }
    return S;
}

TruncatedProduct multiply(const TruncatedSymAlgebra& S, const IntMatrix& x, const IntMatrix& y) {
    if (x.rows != S.size() || x.cols != 1 || y.rows != S.size() || y.cols != 1)
        throw std::invalid_argument("sym algebra multiply: bad coordinate vector");
    TruncatedProduct out;
    out.value = IntMatrix::zero(S.size(), 1);
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (x.at(i, 0) == 0) continue;
        for (std::size_t j = 0; j < S.size(); ++j) {
            if (y.at(j, 0) == 0) continue;
            std::vector<std::size_t> e(S.rank);
            std::size_t deg = 0;
            for (std::size_t k = 0; k < S.rank; ++k) {
                e[k] = S.monomials[i][k] + S.monomials[j][k];
                deg += e[k];
            }
            if (deg > S.max_degree) {
                out.truncated = true;
                continue;
            }
            out.value.at(S.index_of(e), 0) += x.at(i, 0) * y.at(j, 0);
        }
    }
    return out;
}

static void check_gamma(const IntMatrix& gamma, const TruncatedSymAlgebra& S) {
    if (gamma.rows != 1 || gamma.cols != S.rank)
        throw std::invalid_argument("expected a 1 x rank functional");
}

IntMatrix interior_mult(const IntMatrix& gamma, const TruncatedSymAlgebra& S) {
    check_gamma(gamma, S);
    IntMatrix m = IntMatrix::zero(S.size(), S.size());
    for (std::size_t col = 0; col < S.size(); ++col) {
        for (std::size_t i = 0; i < S.rank; ++i) {
            if (S.monomials[col][i] == 0) continue;
            std::vector<std::size_t> e = S.monomials[col];
            --e[i];
            m.at(S.index_of(e), col) += Int(S.monomials[col][i]) * gamma.at(0, i);
        }
    }
    return m;
}

IntMatrix unipotent_rho(const IntMatrix& gamma, const TruncatedSymAlgebra& S) {
    check_gamma(gamma, S);
    // prod_i (x_i + gamma_i)^{a_i} expanded binomially; the degree only ever
    // drops, so no truncation happens
    IntMatrix m = IntMatrix::zero(S.size(), S.size());
    for (std::size_t col = 0; col < S.size(); ++col) {
        const auto& a = S.monomials[col];
        for (std::size_t row = 0; row < S.size(); ++row) {
            const auto& b = S.monomials[row];
            Int coeff(1);
            bool below = true;
            for (std::size_t i = 0; i < S.rank && below; ++i) {
                if (b[i] > a[i]) {
                    below = false;
                    break;
                }
                coeff *= binom(a[i], b[i]);
                for (std::size_t t = 0; t < a[i] - b[i]; ++t) coeff *= gamma.at(0, i);
            }
            if (below) m.at(row, col) = coeff;
        }
    }
    return m;
}

static Int factorial(std::size_t n) {
    Int f(1);
    for (std::size_t k = 2; k <= n; ++k) f *= Int(k);
    return f;
}

static Int lcm_up_to(std::size_t n) {
    Int l(1);
    for (std::size_t k = 2; k <= n; ++k) {
        Int kk(k);
        l = l / gcd_int(l, kk) * kk;
    }
    return l;
}

bool unipotent_exp_log_check(const IntMatrix& gamma, const TruncatedSymAlgebra& S) {
    check_gamma(gamma, S);
    const std::size_t n = S.max_degree;
    const std::size_t dim = S.size();
    IntMatrix lambda = interior_mult(gamma, S);
    IntMatrix rho = unipotent_rho(gamma, S);
    IntMatrix id = IntMatrix::identity(dim);

    // closed form vs multiplicative rebuild
    for (std::size_t col = 0; col < dim; ++col) {
        IntMatrix v = IntMatrix::zero(dim, 1);
        v.at(S.index_of(std::vector<std::size_t>(S.rank, 0)), 0) = 1;
        for (std::size_t i = 0; i < S.rank; ++i) {
            if (S.monomials[col][i] == 0) continue;
            IntMatrix gen = IntMatrix::zero(dim, 1);
            std::vector<std::size_t> xi(S.rank, 0);
            xi[i] = 1;
            gen.at(S.index_of(xi), 0) = 1;
            gen.at(S.index_of(std::vector<std::size_t>(S.rank, 0)), 0) = gamma.at(0, i);
            for (std::size_t t = 0; t < S.monomials[col][i]; ++t) {
                auto prod = multiply(S, v, gen);
                if (prod.truncated) return false;
                v = prod.value;
            }
        }
        for (std::size_t row = 0; row < dim; ++row)
            if (v.at(row, 0) != rho.at(row, col)) return false;
    }

    // unipotence
    IntMatrix nil = sub(rho, id);
    IntMatrix pw = id;
    for (std::size_t k = 0; k <= n; ++k) pw = mul(pw, nil);
    if (!pw.is_zero()) return false;

    // n! rho == sum_k (n!/k!) lambda^k
    Int nfact = factorial(n);
    IntMatrix expsum = IntMatrix::zero(dim, dim);
    IntMatrix lpow = id;
    Int kfact(1);
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            kfact *= Int(k);
            lpow = mul(lpow, lambda);
        }
        expsum = add(expsum, scalar_mul(nfact / kfact, lpow));
    }
    if (expsum != scalar_mul(nfact, rho)) return false;

    // lcm(1..n) lambda == sum_k (-1)^{k+1} (lcm/k) (rho-id)^k
    Int l = lcm_up_to(n);
    IntMatrix logsum = IntMatrix::zero(dim, dim);
    IntMatrix npow = id;
    for (std::size_t k = 1; k <= n; ++k) {
        npow = mul(npow, nil);
        IntMatrix term = scalar_mul(l / Int(k), npow);
        logsum = add(logsum, (k % 2 == 1) ? term : neg(term));
    }
    if (logsum != scalar_mul(l, lambda)) return false;

    // degree filtration == annihilator filtration of the translation action
    if (S.rank > 0) {
        std::vector<IntMatrix> ops;
        for (std::size_t i = 0; i < S.rank; ++i) {
            IntMatrix ei = IntMatrix::zero(1, S.rank);
            ei.at(0, i) = 1;
            ops.push_back(sub(unipotent_rho(ei, S), id));
        }
        for (std::size_t m = 0; m <= n; ++m) {
            PowerBasis multisets = power_basis(PowerKind::Sym, S.rank, m + 1);
            IntMatrix stacked(0, dim);
            for (std::size_t t = 0; t < multisets.size(); ++t) {
                IntMatrix prod = id;
                for (std::size_t pos : multisets.tuples[t]) prod = mul(prod, ops[pos]);
                stacked = vstack(stacked, prod);
            }
            std::size_t cut = S.degree_cutoff(m);
            IntMatrix low = IntMatrix::identity(dim).submatrix(0, 0, dim, cut);
            if (!zlin::same_column_lattice(zlin::kernel_basis(stacked), low)) return false;
        }
    }
    return true;
}

} // namespace multilinear
} // namespace logdegen
