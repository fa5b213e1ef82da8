#include "doctest.h"
#include "test_util.hpp"

#include "logdegen/symalg.hpp"
#include "logdegen/zlin.hpp"

using namespace logdegen;
using namespace logdegen::multilinear;
using testutil::Rng;

static IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m = IntMatrix::zero(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (auto& row : rows) {
        std::size_t c = 0;
        for (long v : row) m.at(r, c++) = Int(v);
        ++r;
    }
    return m;
}

static IntMatrix monomial_vec(const TruncatedSymAlgebra& S, const std::vector<std::size_t>& e) {
    IntMatrix v = IntMatrix::zero(S.size(), 1);
    v.at(S.index_of(e), 0) = 1;
    return v;
}

TEST_CASE("monomial enumeration is by degree then lex") {
    auto S = make_truncated_sym_algebra(2, 2);
    REQUIRE(S.size() == 6);
    CHECK(S.monomials[0] == std::vector<std::size_t>{0, 0});
    CHECK(S.monomials[1] == std::vector<std::size_t>{1, 0});
    CHECK(S.monomials[2] == std::vector<std::size_t>{0, 1});
    CHECK(S.monomials[3] == std::vector<std::size_t>{2, 0});
    CHECK(S.monomials[4] == std::vector<std::size_t>{1, 1});
    CHECK(S.monomials[5] == std::vector<std::size_t>{0, 2});
    CHECK(S.degree_cutoff(0) == 1);
    CHECK(S.degree_cutoff(1) == 3);
    CHECK(S.degree_cutoff(2) == 6);
    CHECK_THROWS(S.index_of({3, 0}));
}

TEST_CASE("truncated product and its overflow flag") {
    auto S = make_truncated_sym_algebra(1, 2);
    auto x = monomial_vec(S, {1});
    auto x2 = monomial_vec(S, {2});
    auto p = multiply(S, x, x);
    CHECK(p.value == x2);
    CHECK_FALSE(p.truncated);
    auto q = multiply(S, x, x2);
    CHECK(q.value.is_zero());
    CHECK(q.truncated);
}

TEST_CASE("interior multiplication: rank one is d/dx") {
    auto S = make_truncated_sym_algebra(1, 3);
    IntMatrix lam = interior_mult(M({{1}}), S);
    // basis 1, x, x^2, x^3: lambda(x^k) = k x^{k-1}, lambda(1) = 0
    CHECK(lam == M({{0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}, {0, 0, 0, 0}}));
    CHECK(mul(lam, monomial_vec(S, {0})).is_zero());
}

TEST_CASE("interior multiplication is a derivation") {
    Rng rng(73001);
    int done = 0;
    while (done < 100) {
        std::size_t rank = rng.pick(1, 3), n = rng.pick(1, 4);
        auto S = make_truncated_sym_algebra(rank, n);
        IntMatrix gamma = testutil::random_matrix(rng, 1, rank, 6);
        IntMatrix lam = interior_mult(gamma, S);
        // two random monomials whose product still fits under the truncation
        std::size_t i = rng.pick(0, static_cast<long>(S.size()) - 1);
        std::size_t j = rng.pick(0, static_cast<long>(S.size()) - 1);
        std::size_t deg = 0;
        for (std::size_t k = 0; k < rank; ++k) deg += S.monomials[i][k] + S.monomials[j][k];
        if (deg > n) continue;
        IntMatrix a = monomial_vec(S, S.monomials[i]);
        IntMatrix b = monomial_vec(S, S.monomials[j]);
        IntMatrix ab = multiply(S, a, b).value;
        IntMatrix lhs = mul(lam, ab);
        IntMatrix rhs = add(multiply(S, mul(lam, a), b).value, multiply(S, a, mul(lam, b)).value);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("translation automorphism: pinned rank-one case") {
    auto S = make_truncated_sym_algebra(1, 2);
    IntMatrix rho = unipotent_rho(M({{1}}), S);
    // rho(x^2) = x^2 + 2x + 1, rho(x) = x + 1
    CHECK(rho == M({{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));
    CHECK(unipotent_rho(M({{0}}), S) == IntMatrix::identity(3));
    CHECK(interior_mult(M({{0}}), S).is_zero());
}

TEST_CASE("translation is an algebra automorphism") {
    Rng rng(73002);
    int done = 0;
    while (done < 60) {
        std::size_t rank = rng.pick(1, 3), n = rng.pick(1, 4);
        auto S = make_truncated_sym_algebra(rank, n);
        IntMatrix gamma = testutil::random_matrix(rng, 1, rank, 5);
        IntMatrix rho = unipotent_rho(gamma, S);
        std::size_t i = rng.pick(0, static_cast<long>(S.size()) - 1);
        std::size_t j = rng.pick(0, static_cast<long>(S.size()) - 1);
        std::size_t deg = 0;
        for (std::size_t k = 0; k < rank; ++k) deg += S.monomials[i][k] + S.monomials[j][k];
        if (deg > n) continue;
        IntMatrix a = monomial_vec(S, S.monomials[i]);
        IntMatrix b = monomial_vec(S, S.monomials[j]);
        IntMatrix lhs = mul(rho, multiply(S, a, b).value);
        auto rhs = multiply(S, mul(rho, a), mul(rho, b));
        CHECK_FALSE(rhs.truncated); // rho never raises the degree
        CHECK(lhs == rhs.value);
        ++done;
    }
}

TEST_CASE("exp/log relation and the annihilator filtration") {
    auto S1 = make_truncated_sym_algebra(1, 2);
    CHECK(unipotent_exp_log_check(M({{1}}), S1));
    CHECK(unipotent_exp_log_check(M({{0}}), S1));

    Rng rng(73003);
    for (int t = 0; t < 50; ++t) {
        std::size_t rank = rng.pick(1, 3), n = rng.pick(0, 4);
        auto S = make_truncated_sym_algebra(rank, n);
        IntMatrix gamma = testutil::random_matrix(rng, 1, rank, 7);
        CHECK(unipotent_exp_log_check(gamma, S));
    }
}

TEST_CASE("rank one: powers of a single translation cut out the filtration") {
    Rng rng(73004);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = rng.pick(1, 5);
        auto S = make_truncated_sym_algebra(1, n);
        long g = 0;
        while (g == 0) g = rng.pick(-5, 5);
        IntMatrix nil = sub(unipotent_rho(M({{g}}), S), IntMatrix::identity(S.size()));
        IntMatrix pw = IntMatrix::identity(S.size());
        for (std::size_t m = 0; m <= n; ++m) {
            pw = mul(pw, nil);
            IntMatrix low =
                IntMatrix::identity(S.size()).submatrix(0, 0, S.size(), S.degree_cutoff(m));
            CHECK(zlin::same_column_lattice(zlin::kernel_basis(pw), low));
        }
    }
}

TEST_CASE("rank two: a single translation is too coarse for the filtration") {
    // with two variables the kernel of (rho_gamma - id)^2 is strictly larger
    // than the span of degree <= 1: x^2 - xy is killed for gamma = (1, 1)
    auto S = make_truncated_sym_algebra(2, 2);
    IntMatrix nil = sub(unipotent_rho(M({{1, 1}}), S), IntMatrix::identity(6));
    IntMatrix sq = mul(nil, nil);
    IntMatrix witness = sub(monomial_vec(S, {2, 0}), monomial_vec(S, {1, 1}));
    CHECK(mul(sq, witness).is_zero());
    IntMatrix low = IntMatrix::identity(6).submatrix(0, 0, 6, S.degree_cutoff(1));
    CHECK_FALSE(zlin::same_column_lattice(zlin::kernel_basis(sq), low));
    // the joint annihilator over both generators does recover it
    IntMatrix nx = sub(unipotent_rho(M({{1, 0}}), S), IntMatrix::identity(6));
    IntMatrix ny = sub(unipotent_rho(M({{0, 1}}), S), IntMatrix::identity(6));
    IntMatrix stacked = vstack(vstack(mul(nx, nx), mul(nx, ny)), mul(ny, ny));
    CHECK(zlin::same_column_lattice(zlin::kernel_basis(stacked), low));
}

TEST_CASE("gamma argument is validated") {
    auto S = make_truncated_sym_algebra(2, 2);
    CHECK_THROWS(interior_mult(M({{1}}), S));
    CHECK_THROWS(unipotent_rho(M({{1, 2, 3}}), S));
    CHECK_THROWS(multiply(S, IntMatrix::zero(5, 1), IntMatrix::zero(6, 1)));
}
