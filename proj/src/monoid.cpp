#include "logdegen/monoid.hpp"

#include "logdegen/zlin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace logdegen {
namespace monoids {

static long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

static bool nonneg_on_all(const std::vector<long>& lam,
                          const std::vector<std::vector<long>>& gens) {
    for (const auto& g : gens)
        if (dot(lam, g) < 0) return false;
    return true;
}

// candidate supporting functionals: +-coordinate functionals, and the
// +-perpendiculars (d = 2) or +-cross products (d = 3) of generators; every
// facet normal of a cone at this scale is among them
static std::vector<std::vector<long>> basic_candidates(const ToricMonoid& Q) {
    std::vector<std::vector<long>> out;
    const std::size_t d = Q.ambient_dim;
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<long> e(d, 0);
        e[k] = 1;
        out.push_back(e);
        e[k] = -1;
        out.push_back(e);
    }
    if (d == 2) {
        for (const auto& g : Q.generators) {
            out.push_back({-g[1], g[0]});
            out.push_back({g[1], -g[0]});
        }
    } else if (d == 3) {
        for (std::size_t i = 0; i < Q.generators.size(); ++i) {
            for (std::size_t j = i + 1; j < Q.generators.size(); ++j) {
                const auto &a = Q.generators[i], &b = Q.generators[j];
                std::vector<long> c = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                       a[0] * b[1] - a[1] * b[0]};
                out.push_back(c);
                out.push_back({-c[0], -c[1], -c[2]});
            }
        }
    }
    return out;
}

// all valid supporting functionals up to zero-set signature, closed under
// sums (an intersection of faces is the face of the summed functionals)
std::vector<std::vector<long>> supporting_functionals(const ToricMonoid& Q) {
    std::vector<std::vector<long>> valid;
    std::set<std::vector<bool>> seen;
    auto signature = [&](const std::vector<long>& lam) {
        std::vector<bool> sig;
        for (const auto& g : Q.generators) sig.push_back(dot(lam, g) == 0);
        return sig;
    };
    auto add = [&](const std::vector<long>& lam) {
        if (!nonneg_on_all(lam, Q.generators)) return;
        if (seen.insert(signature(lam)).second) valid.push_back(lam);
    };
    for (const auto& lam : basic_candidates(Q)) add(lam);
    for (std::size_t round = 0; round < Q.ambient_dim; ++round) {
        std::vector<std::vector<long>> snapshot = valid;
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i; j < snapshot.size(); ++j) {
                std::vector<long> s(Q.ambient_dim);
                for (std::size_t k = 0; k < s.size(); ++k) s[k] = snapshot[i][k] + snapshot[j][k];
                add(s);
            }
        }
    }
    return valid;
}

// a functional strictly positive on every generator certifies sharpness
static std::vector<long> positive_certificate(const ToricMonoid& Q,
                                              const std::vector<std::vector<long>>& valid) {
    std::vector<long> total(Q.ambient_dim, 0);
    for (const auto& lam : valid)
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += lam[k];
    for (const auto& g : Q.generators)
        if (dot(total, g) <= 0) return {};
    return total;
}

ToricMonoid make_toric_monoid(std::size_t ambient_dim, std::vector<std::vector<long>> generators) {
    if (ambient_dim < 1 || ambient_dim > 3)
        throw std::invalid_argument("toric monoid: ambient dimension must be 1..3");
    if (generators.size() > 8)
        throw std::invalid_argument("toric monoid: at most 8 generators at this scale");
    for (const auto& g : generators) {
        if (g.size() != ambient_dim)
            throw std::invalid_argument("toric monoid: generator has wrong dimension");
        bool zero = true;
        for (long x : g) zero = zero && x == 0;
        if (zero) throw std::invalid_argument("toric monoid: zero generator");
    }
    ToricMonoid Q{ambient_dim, std::move(generators)};
    if (positive_certificate(Q, supporting_functionals(Q)).empty())
        throw std::invalid_argument("toric monoid: not sharp (no positive functional found)");
    return Q;
}

std::vector<std::vector<std::size_t>> faces(const ToricMonoid& Q) {
    std::set<std::vector<std::size_t>> out;
    // the improper face: the whole monoid (functional zero)
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < Q.generators.size(); ++i) all.push_back(i);
    out.insert(all);
    for (const auto& lam : supporting_functionals(Q)) {
        std::vector<std::size_t> face;
        for (std::size_t i = 0; i < Q.generators.size(); ++i)
            if (dot(lam, Q.generators[i]) == 0) face.push_back(i);
        out.insert(face);
    }
    return {out.begin(), out.end()};
}

bool is_saturated(const ToricMonoid& Q, long box_bound) {
    if (box_bound < 1) throw std::invalid_argument("saturation check: box bound must be >= 1");
    const std::size_t d = Q.ambient_dim;
    auto valid = supporting_functionals(Q);
    std::vector<long> pos = positive_certificate(Q, valid);
    if (pos.empty()) throw std::invalid_argument("saturation check: monoid is not sharp");

    // group generated by the monoid, as an HNF column lattice
    IntMatrix gen_mat = IntMatrix::zero(d, Q.generators.size());
    for (std::size_t j = 0; j < Q.generators.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) gen_mat.at(i, j) = Int(Q.generators[j][i]);
    IntMatrix lattice = zlin::hnf_columns(gen_mat);

    // all monoid elements the box can see: the positive functional caps the
    // number of generator steps needed to land inside it
    long height_cap = 0;
    for (std::size_t k = 0; k < d; ++k) height_cap += std::abs(pos[k]) * box_bound;
    std::set<std::vector<long>> reachable;
    std::vector<std::vector<long>> frontier = {std::vector<long>(d, 0)};
    reachable.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& x : frontier) {
            for (const auto& g : Q.generators) {
                std::vector<long> y(d);
                for (std::size_t k = 0; k < d; ++k) y[k] = x[k] + g[k];
                if (dot(pos, y) > height_cap) continue;
                if (reachable.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }

    // walk the box: lattice points inside the rational cone must be reachable
    std::vector<long> x(d, -box_bound);
    while (true) {
        bool in_cone = true;
        for (const auto& lam : valid)
            if (dot(lam, x) < 0) {
                in_cone = false;
                break;
            }
        if (in_cone) {
            IntMatrix xv = IntMatrix::zero(d, 1);
            for (std::size_t k = 0; k < d; ++k) xv.at(k, 0) = Int(x[k]);
            if (zlin::solve(lattice, xv).has_value() && reachable.find(x) == reachable.end())
                return false;
        }
        std::size_t k = 0;
        while (k < d && x[k] == box_bound) x[k++] = -box_bound;
        if (k == d) break;
        ++x[k];
    }
    return true;
}

bool QnModel::contains(long a, long b) const { return a >= 0 && b >= 0 && (a - b) % n == 0; }

QnModel qn(long n) {
    if (n < 1) throw std::invalid_argument("qn: need n >= 1");
    return QnModel{n};
}

ToricMonoid qn_monoid(const QnModel& Q) {
    return make_toric_monoid(2, {Q.q(), Q.q1(), Q.q2()});
}

QnDecomposition unique_decomposition(const QnModel& Q, long a, long b) {
    if (!Q.contains(a, b)) throw std::invalid_argument("unique_decomposition: not an element");
    QnDecomposition d;
    if (a >= b) {
        d.k = b;
        d.branch = 1;
        d.m = (a - b) / Q.n;
    } else {
        d.k = a;
        d.branch = 2;
        d.m = (b - a) / Q.n;
    }
    return d;
}

} // namespace monoids
} // namespace logdegen
