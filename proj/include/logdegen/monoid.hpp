#pragma once
// Affine submonoids of Z^d given by explicit generators, at desk scale
// (dimension <= 3, at most 8 generators): sharpness certification, the face
// lattice via supporting functionals, and a bounded saturation check. Also
// the two-parameter local models Q_n = {(a,b) in N^2 : a = b mod n}.

#include <cstddef>
#include <vector>

namespace logdegen {
namespace monoids {

struct ToricMonoid {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<long>> generators;
};
// validates scale and certifies sharpness (throws if the monoid has a
// nonzero invertible element or no certificate is found at this scale)
ToricMonoid make_toric_monoid(std::size_t ambient_dim, std::vector<std::vector<long>> generators);

// integral functionals nonnegative on every generator, one per distinct
// zero set; at this scale they are built from coordinate functionals and
// generator cross products, closed under sums
std::vector<std::vector<long>> supporting_functionals(const ToricMonoid& Q);

// every face as a sorted set of generator indices ({} is the trivial face,
// the full index set is the monoid itself); each proper face is the zero
// set of one of the supporting functionals
std::vector<std::vector<std::size_t>> faces(const ToricMonoid& Q);

// bounded saturation check: every lattice point of the rational cone with
// coordinates in [-box_bound, box_bound] must be reachable by a nonnegative
// generator combination; sound within the box only
bool is_saturated(const ToricMonoid& Q, long box_bound);

// {(a,b) in N^2 : a = b mod n}, generated by q = (1,1), q1 = (n,0), q2 = (0,n)
struct QnModel {
    long n = 1;
    bool contains(long a, long b) const;
    std::vector<long> q() const { return {1, 1}; }
    std::vector<long> q1() const { return {n, 0}; }
    std::vector<long> q2() const { return {0, n}; }
};
QnModel qn(long n);
ToricMonoid qn_monoid(const QnModel& Q);

// x = k*q + m*q_branch, the unique such expression (branch canonicalized to 1
// when x is diagonal, so m = 0 there)
struct QnDecomposition {
    long k = 0;
    int branch = 1;
    long m = 0;
};
QnDecomposition unique_decomposition(const QnModel& Q, long a, long b);

} // namespace monoids
} // namespace logdegen
