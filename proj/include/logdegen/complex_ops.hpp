#pragma once
// Shifts, mapping cones and cocones, canonical truncations, and the
// connecting map of a degreewise-split short exact sequence of complexes.
//
// Sign conventions used throughout (column-vector convention everywhere):
//   shift:   A[k]^n = A^{n+k},  d_{A[k]} = (-1)^k d_A
//   cone:    C(u)^n = B^n (+) A^{n+1},  d(b,a) = (d_B b + u a, -d_A a)
//   cocone:  C'(u)^n = A^n (+) B^{n-1}, d(a,b) = (d_A a, -u a - d_B b)

#include "logdegen/complex.hpp"
#include "logdegen/homology.hpp"

namespace logdegen {
namespace complexes {

Complex shift(const Complex& K, int k);
ComplexMap shift_map(const ComplexMap& f, int k); // same components, shifted degrees

struct ConeResult {
    Complex cx;
    ComplexMap incl; // B -> cone(u)
    ComplexMap proj; // cone(u) -> A[1]
};
ConeResult cone(const ComplexMap& u);

struct CoconeResult {
    Complex cx;
    ComplexMap incl; // B[-1] -> cocone(u)
    ComplexMap proj; // cocone(u) -> A
};
CoconeResult cocone_with_maps(const ComplexMap& u);
Complex cocone(const ComplexMap& u);

struct TruncationSpec {
    enum class Kind { Below, Above, Window } kind = Kind::Below;
    // Below: degrees <= q;  Above: degrees >= q;  Window: degrees in [a, b)
    int q = 0;
    int a = 0, b = 0;
    static TruncationSpec below(int q) { return {Kind::Below, q, 0, 0}; }
    static TruncationSpec above(int q) { return {Kind::Above, q, 0, 0}; }
    static TruncationSpec window(int a, int b) { return {Kind::Window, 0, a, b}; }
};

// Canonical truncation. H^n of the result equals H^n(K) for n in the window
// and vanishes outside. The <= truncation replaces the top term by its cycle
// lattice; the >= truncation replaces everything below degree q by a one-step
// free resolution of the image lattice of d^{q-1}, with the extra term
// recorded in resolution_degrees.
Complex truncate(const Complex& K, const TruncationSpec& spec);

struct TruncationTriangle {
    Complex sub, total, quotient;   // windows [a,b), [a,c), [b,c)
    ComplexMap incl;                // sub -> total
    ComplexMap proj;                // total -> quotient
    // degree q -> connecting map H^q(quotient)_free -> H^{q+1}(sub)_free
    std::map<int, IntMatrix> connecting;
};
TruncationTriangle truncation_triangle(const Complex& K, int a, int b, int c);

// Connecting map on free parts of a degreewise short exact sequence
// 0 -> A -u-> B -pi-> C -> 0 (validated: u injective with saturated image,
// pi surjective, im u == ker pi, ranks add up). Result maps the free part of
// H^q(C) to the free part of H^{q+1}(A).
IntMatrix snake_connecting(const ComplexMap& u, const ComplexMap& pi, int q);

// Check the induced sequence on free parts of homology is exact at every slot:
// ... -> H^q(A) -> H^q(B) -> H^q(C) -> H^{q+1}(A) -> ...
bool les_exact_free(const ComplexMap& u, const ComplexMap& pi);

} // namespace complexes
} // namespace logdegen
