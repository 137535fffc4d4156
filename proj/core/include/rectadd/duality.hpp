#ifndef RECTADD_DUALITY_HPP
#define RECTADD_DUALITY_HPP

#include "rectadd/rational.hpp"
#include "rectadd/rectconv.hpp"

#include <vector>

namespace rectadd {

// Coefficients k_1^{M,N} .. k_M^{M,N} of the finite rectangular
// R-transform R(z) = (-1/M) z d/dz ln E[exp(-T z N M)] mod z^{M+1},
// where E[T^i] = i! (M-i)!/M! (N-i)!/N! e_i(r).
struct FiniteCumulants {
    int M = 0;
    int N = 0;
    std::vector<Rat> k_fin; // k_1 .. k_M
};

FiniteCumulants finite_rect_cumulants(const Spectrum& r, int M, int N);

// Same transform built from an explicit e_i-value sequence a_0..a_M; this
// is what makes the additivity under the expected characteristic
// polynomial checkable without extracting roots.
FiniteCumulants finite_rect_cumulants_from_elementary(const std::vector<Rat>& a, int M,
                                                      int N);

struct DualityReport {
    int M = 0;
    int N = 0;
    std::vector<Rat> k_fin;      // finite rectangular cumulants, l = 1..L
    std::vector<Rat> k_qgamma;   // q-gamma cumulants k_{2l} at q = N/M, gamma = -M
    std::vector<Rat> rho;        // k_fin_l / (gamma^{l-1} k_{2l})
    std::vector<Rat> expected;   // 2^{2l-1}
    bool matches = false;
};

// Runs both exact pipelines on the identification q = N/M, gamma = -M,
// m_{2k} = (p_k(r)/M) (-N)^k and reports the per-degree ratio against the
// frozen constant 2^{2l-1}.
DualityReport duality_check(const Spectrum& r, int M, int N, int L);

} // namespace rectadd

#endif
