#include "logdegen/complex.hpp"

#include <stdexcept>
#include <utility>

namespace logdegen {
namespace complexes {

std::size_t Complex::rank(int n) const {
    if (empty() || n < lo || n > hi()) return 0;
    return ranks[static_cast<std::size_t>(n - lo)];
}

IntMatrix Complex::diff(int n) const {
    if (!empty() && n >= lo && n < hi())
        return diffs[static_cast<std::size_t>(n - lo)];
    return IntMatrix::zero(rank(n + 1), rank(n));
}

Complex make_complex(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> diffs) {
    Complex K;
    K.lo = lo;
    K.ranks = std::move(ranks);
    K.diffs = std::move(diffs);
    if (K.ranks.empty()) {
        if (!K.diffs.empty()) throw std::invalid_argument("complex: differentials without terms");
        return K;
    }
    if (K.diffs.size() + 1 != K.ranks.size())
        throw std::invalid_argument("complex: need exactly one differential per adjacent pair of terms");
    for (std::size_t i = 0; i + 1 < K.ranks.size(); ++i) {
        const IntMatrix& d = K.diffs[i];
        if (d.rows != K.ranks[i + 1] || d.cols != K.ranks[i])
            throw std::invalid_argument("complex: differential shape mismatch");
    }
    for (std::size_t i = 0; i + 2 < K.ranks.size(); ++i) {
        if (!mul(K.diffs[i + 1], K.diffs[i]).is_zero())
            throw std::invalid_argument("complex: d o d != 0");
    }
    return K;
}

Complex zero_complex() { return Complex{}; }

Complex single_term(int degree, std::size_t rank) {
    if (rank == 0) return zero_complex();
    return make_complex(degree, {rank}, {});
}

Complex two_term(int lo_degree, const IntMatrix& d) {
    return make_complex(lo_degree, {d.cols, d.rows}, {d});
}

Complex trim(const Complex& K) {
    if (K.empty()) return K;
    std::size_t a = 0, b = K.ranks.size();
    while (a < b && K.ranks[a] == 0) ++a;
    while (b > a && K.ranks[b - 1] == 0) --b;
    if (a == b) return zero_complex();
    std::vector<std::size_t> ranks(K.ranks.begin() + static_cast<std::ptrdiff_t>(a),
                                   K.ranks.begin() + static_cast<std::ptrdiff_t>(b));
    std::vector<IntMatrix> diffs;
    for (std::size_t i = a; i + 1 < b; ++i) diffs.push_back(K.diffs[i]);
    Complex out = make_complex(K.lo + static_cast<int>(a), std::move(ranks), std::move(diffs));
    for (int n : K.resolution_degrees)
        if (n >= out.lo && n <= out.hi()) out.resolution_degrees.insert(n);
    return out;
}

IntMatrix ComplexMap::component(int n) const {
    auto it = comp.find(n);
    if (it != comp.end()) return it->second;
    return IntMatrix::zero(target.rank(n), source.rank(n));
}

ComplexMap make_complex_map(Complex src, Complex tgt, std::map<int, IntMatrix> comp) {
    ComplexMap f;
    f.source = std::move(src);
    f.target = std::move(tgt);
    for (auto& [n, m] : comp) {
        if (m.rows != f.target.rank(n) || m.cols != f.source.rank(n))
            throw std::invalid_argument("complex map: component shape mismatch");
        if (!m.is_zero()) f.comp.emplace(n, std::move(m));
    }
    int a = f.source.lo, b = f.source.lo;
    if (!f.source.empty()) { a = f.source.lo; b = f.source.hi(); }
    if (!f.target.empty()) {
        a = f.source.empty() ? f.target.lo : std::min(a, f.target.lo);
        b = f.source.empty() ? f.target.hi() : std::max(b, f.target.hi());
    }
    for (int n = a - 1; n <= b; ++n) {
        if (mul(f.target.diff(n), f.component(n)) != mul(f.component(n + 1), f.source.diff(n)))
            throw std::invalid_argument("complex map: does not commute with differentials");
    }
    return f;
}

ComplexMap identity_map(const Complex& K) {
    std::map<int, IntMatrix> comp;
    if (!K.empty())
        for (int n = K.lo; n <= K.hi(); ++n)
            if (K.rank(n) > 0) comp.emplace(n, IntMatrix::identity(K.rank(n)));
    return make_complex_map(K, K, std::move(comp));
}

ComplexMap compose(const ComplexMap& g, const ComplexMap& f) {
    if (!(f.target == g.source)) throw std::invalid_argument("compose: middle complexes differ");
    std::map<int, IntMatrix> comp;
    for (auto& [n, m] : f.comp) comp.emplace(n, mul(g.component(n), m));
    return make_complex_map(f.source, g.target, std::move(comp));
}

ComplexMap map_scale(const Int& c, const ComplexMap& f) {
    std::map<int, IntMatrix> comp;
    for (auto& [n, m] : f.comp) comp.emplace(n, scalar_mul(c, m));
    return make_complex_map(f.source, f.target, std::move(comp));
}

ComplexMap map_sub(const ComplexMap& f, const ComplexMap& g) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw std::invalid_argument("map_sub: shape mismatch");
    std::map<int, IntMatrix> comp;
    std::set<int> degrees;
    for (auto& [n, m] : f.comp) degrees.insert(n);
    for (auto& [n, m] : g.comp) degrees.insert(n);
    for (int n : degrees) comp.emplace(n, sub(f.component(n), g.component(n)));
    return make_complex_map(f.source, f.target, std::move(comp));
}

ComplexWithAutomorphism make_complex_with_automorphism(Complex base, ComplexMap rho) {
    if (!(rho.source == base) || !(rho.target == base))
        throw std::invalid_argument("automorphism must map the complex to itself");
    if (!base.empty()) {
        for (int n = base.lo; n <= base.hi(); ++n) {
            if (base.rank(n) == 0) continue;
            Int d = zlin::det_bareiss(rho.component(n));
            if (d != 1 && d != -1)
                throw std::invalid_argument("automorphism component is not invertible over Z");
        }
    }
    return ComplexWithAutomorphism{std::move(base), std::move(rho)};
}

} // namespace complexes
} // namespace logdegen
