#include "logdegen/power_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace logdegen {
namespace multilinear {

Int binom(std::size_t n, std::size_t k) {
    if (k > n) return Int(0);
    Int acc(1);
    for (std::size_t i = 0; i < k; ++i) {
        acc *= Int(n - i);
        acc /= Int(i + 1); // exact: product of j consecutive integers is divisible by j!
    }
    return acc;
}

std::size_t power_rank(PowerKind kind, std::size_t n, std::size_t q) {
    Int r = (kind == PowerKind::Wedge) ? binom(n, q)
                                       : (n == 0 ? Int(q == 0 ? 1 : 0) : binom(n + q - 1, q));
    return static_cast<std::size_t>(r);
}

static void enumerate(PowerKind kind, std::size_t n, std::size_t q, std::size_t start,
                      std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == q) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        enumerate(kind, n, q, kind == PowerKind::Wedge ? i + 1 : i, cur, out);
        cur.pop_back();
    }
}

PowerBasis power_basis(PowerKind kind, std::size_t n, std::size_t q) {
    PowerBasis b;
    b.kind = kind;
    b.n = n;
    b.q = q;
    std::vector<std::size_t> cur;
    enumerate(kind, n, q, 0, cur, b.tuples);
    return b;
}

std::size_t PowerBasis::index_of(const std::vector<std::size_t>& t) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) throw std::invalid_argument("power basis: tuple not found");
    return static_cast<std::size_t>(it - tuples.begin());
}

std::vector<std::size_t> PowerBasis::exponents(std::size_t idx) const {
    std::vector<std::size_t> e(n, 0);
    for (std::size_t v : tuples.at(idx)) ++e[v];
    return e;
}

std::vector<std::size_t> tuple_from_exponents(const std::vector<std::size_t>& e) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t k = 0; k < e[i]; ++k) t.push_back(i);
    return t;
}

} // namespace multilinear
} // namespace logdegen
