#pragma once
// Bounded cochain complexes of finitely generated free Z-modules.
// A complex stores its support [lo, hi], the rank of each term, and the
// differentials d^n : term(n) -> term(n+1). d(n+1) o d(n) == 0 is enforced
// at construction. Zero-rank terms are allowed inside the support.

#include "logdegen/matrix.hpp"
#include "logdegen/zlin.hpp"

#include <map>
#include <set>
#include <vector>

namespace logdegen {
namespace complexes {

struct Complex {
    int lo = 0;
    std::vector<std::size_t> ranks;  // term ranks for degrees lo .. lo+ranks.size()-1
    std::vector<IntMatrix> diffs;    // diffs[i] : degree lo+i -> lo+i+1 (ranks.size()-1 of them)
    // Degrees whose term is a two-term free resolution artifact of a torsion
    // quotient (bottom term of a >=-truncation), not a term of the original.
    std::set<int> resolution_degrees;

    bool empty() const { return ranks.empty(); }
    int hi() const { return lo + static_cast<int>(ranks.size()) - 1; }
    std::size_t rank(int n) const;
    IntMatrix diff(int n) const; // rank(n+1) x rank(n); zero outside support

    friend bool operator==(const Complex&, const Complex&) = default;
};

Complex make_complex(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> diffs);
Complex zero_complex();
Complex single_term(int degree, std::size_t rank);
// [Z^d.cols -> Z^d.rows] in degrees lo_degree, lo_degree+1
Complex two_term(int lo_degree, const IntMatrix& d);
// drop zero-rank terms at both ends of the support
Complex trim(const Complex& K);

struct ComplexMap {
    Complex source, target;
    std::map<int, IntMatrix> comp; // degree -> component; absent means zero

    IntMatrix component(int n) const; // always target.rank(n) x source.rank(n)
};

ComplexMap make_complex_map(Complex src, Complex tgt, std::map<int, IntMatrix> comp);
ComplexMap identity_map(const Complex& K);
ComplexMap compose(const ComplexMap& g, const ComplexMap& f); // g after f
ComplexMap map_scale(const Int& c, const ComplexMap& f);
ComplexMap map_sub(const ComplexMap& f, const ComplexMap& g);

struct ComplexWithAutomorphism {
    Complex base;
    ComplexMap rho; // base -> base, degreewise |det| == 1
};
ComplexWithAutomorphism make_complex_with_automorphism(Complex base, ComplexMap rho);

} // namespace complexes
} // namespace logdegen
