#ifndef RECTADD_QGAMMA_HPP
#define RECTADD_QGAMMA_HPP

#include "rectadd/rational.hpp"
#include "rectadd/series.hpp"

#include <vector>

namespace rectadd {

struct HTParams {
    Rat q;
    Rat gamma;
};

// Even moments m_2, m_4, ...; odd moments are identically zero.
struct MomentSeq {
    std::vector<Rat> m; // m[i] = m_{2(i+1)}
    int orders() const { return static_cast<int>(m.size()); }
};

// Even cumulants k_2, k_4, ...; odd cumulants are identically zero.
struct CumulantSeq {
    std::vector<Rat> k; // k[i] = k_{2(i+1)}
    int orders() const { return static_cast<int>(k.size()); }
};

// Auxiliary sequence c_n of the generating-function route, exposed
// read-only for test introspection.
struct GenfunAux {
    std::vector<Rat> c; // c[n], n = 0..K
};

// Route 1: m_{2k} = [z^0] (d/dz + 2 gamma d + ((q-1)gamma - 1/2) d' + *g)^{2k-1} g
// with g(z) = sum_l k_l z^{l-1}. Also asserts the structural vanishing of
// the odd moments.
MomentSeq k2m_operator(const CumulantSeq& k, const HTParams& p, int K);

// Route 2: m_{2k} = sum over non-crossing even set partitions of [2k] of
// W(pi) prod_B k_{|B|}.
MomentSeq k2m_partitions(const CumulantSeq& k, const HTParams& p, int K);

// Route 3, through the auxiliary sequence c_n:
//   exp[gamma sum m_{2k} y^{2k}/k] = sum c_n y^{2n}
//   exp[sum k_{2l} y^{2l}/(2l)]   = sum c_n 2^{-2n} y^{2n} / ((q gamma)_n (gamma)_n)
MomentSeq k2m_genfun(const CumulantSeq& k, const HTParams& p, int K,
                     GenfunAux* aux = nullptr);
CumulantSeq m2k_genfun(const MomentSeq& m, const HTParams& p, int K,
                       GenfunAux* aux = nullptr);

// Triangular inversion of the partition route; only needs the leading
// products C_1...C_{2l-1} to be nonzero, so it tolerates the negative
// gamma used by the low/high temperature duality.
CumulantSeq m2k(const MomentSeq& m, const HTParams& p, int K);

// q-gamma convolution: cumulants add.
MomentSeq qgamma_convolve(const MomentSeq& a, const MomentSeq& b, const HTParams& p, int K);

// Classical moment/cumulant transform over all set partitions. Index i
// holds order i+1 (both parities).
std::vector<Rat> classical_k2m(const std::vector<Rat>& cumulants, int K);
std::vector<Rat> classical_m2k(const std::vector<Rat>& moments, int K);

// Free cumulants over non-crossing partitions.
std::vector<Rat> free_k2m(const std::vector<Rat>& r, int K);

// Rectangular free cumulants: m_{2k} = sum_{nc even} q^{-e(pi)} prod c_{|B|}.
MomentSeq rectfree_k2m(const CumulantSeq& c, const Rat& q, int K);
CumulantSeq rectfree_m2k(const MomentSeq& m, const Rat& q, int K);

// Gamma-convolution transform (self-adjoint high temperature): operator
// and partition routes computed and asserted equal.
std::vector<Rat> gamma_k2m(const std::vector<Rat>& kg, const Rat& gamma, int K);
std::vector<Rat> gamma_m2k(const std::vector<Rat>& mg, const Rat& gamma, int K);

// Rescaled q-gamma cumulants at two exact parameter points approaching
// the degeneration limit; the caller checks the gap to the target shrinks.
struct DegenerationTrend {
    std::vector<Rat> near;   // at the first (closer-to-limit) point
    std::vector<Rat> far;    // at the second (further) point -- see per-op docs
};

// gamma -> 0, q gamma -> infinity: k'_l = (q gamma)^l 2^{2l-1} (l-1)! k_{2l}
// approaches the classical cumulants of {m_{2k}} read as k-th moments.
// Evaluated at (gamma, q gamma) = (1e-6, 1e6) [far] and (1e-8, 1e8) [near].
DegenerationTrend degenerate_to_classical(const MomentSeq& m, int K);

// gamma -> infinity, q fixed: q^{1-l} (2 q gamma)^{2l-1} k_{2l} approaches
// the rectangular free cumulants c_{2l}. Evaluated at gamma = 1e4 [far]
// and 1e6 [near].
DegenerationTrend degenerate_to_rectfree(const MomentSeq& m, const Rat& q, int K);

// q -> infinity, gamma fixed: given gamma-side moments m'_k, inflate
// m_{2k} = m'_k (q gamma)^k, then 2^{2l-1} k_{2l} approaches the
// gamma-cumulants of m'. Evaluated at q = 1e4 [far] and 1e6 [near].
DegenerationTrend degenerate_to_gamma(const MomentSeq& m_gamma_side, const Rat& gamma,
                                      int K);

// Moments of the high-temperature Laguerre limit law: the non-crossing
// perfect matching sum, cross-checked against the k_2 = 1 transform.
MomentSeq laguerre_moments(const HTParams& p, int K);

} // namespace rectadd

#endif
