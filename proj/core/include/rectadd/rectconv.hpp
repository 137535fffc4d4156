#ifndef RECTADD_RECTCONV_HPP
#define RECTADD_RECTCONV_HPP

#include "rectadd/partition.hpp"
#include "rectadd/rational.hpp"
#include "rectadd/sympoly.hpp"

#include <vector>

namespace rectadd {

struct BetaParams {
    int M = 1;
    int N = 1;
    Rat theta = 1;
};

// Squared singular values, weakly decreasing, nonnegative.
struct Spectrum {
    std::vector<Rat> r;
};

void validate(const BetaParams& p);
void validate(const Spectrum& s, int M);

// Monic degree-M polynomial; coeffs[l] multiplies z^{M-l}.
struct CharPoly {
    int M = 0;
    std::vector<Rat> coeffs;
};

// E[P_lambda(c_1^2..c_M^2; theta)] for c = a boxplus_{M,N}^theta b: the
// exact finite-parameter Jack moment of the sum.
Rat conv_jack_moment(const Partition& lambda, const Spectrum& ra, const Spectrum& rb,
                     const BetaParams& p);

// a_l = E[e_l(c^2)], l = 0..M (theta-independent).
std::vector<Rat> expected_elementary(const Spectrum& ra, const Spectrum& rb, int M, int N);

// Expected characteristic polynomial of CC^*; coefficient of z^{M-l} is
// (-1)^l a_l with a_l as above.
CharPoly rect_charpoly(const Spectrum& ra, const Spectrum& rb, int M, int N);

// | E[P_lambda(c^2; theta)] - prod_i E[e_i(c^2)]^{lambda_i - lambda_{i+1}} |
// evaluated exactly; decays as theta grows.
Rat lowtemp_concentration_gap(const Partition& lambda, const Spectrum& ra,
                              const Spectrum& rb, int M, int N, const Rat& theta_large);

// order-th moment of sqrt(theta) (c_1^2 - a^2 - b^2) for M = 1: zero for
// odd order, theta^k (2k)!/k! (ra rb)^k / (theta N)_k for order = 2k.
// ra, rb are the squared singular values.
Rat m1_fluct_moment(int order, const Rat& ra, const Rat& rb, const Rat& theta, int N);

// Checks sum_p (-1)^{l-p}/((l-p)! p!) (z+p)_q = 0 (q < l) or 1 (q = l)
// as a polynomial identity in z.
bool binom_identity_check(int l, int q_exp);

// E[f(c_1^2..c_M^2)] for a symmetric polynomial statistic f, via exact
// change of basis to Jack polynomials.
Rat expected_sym_stat(const SymPoly& f, const Spectrum& ra, const Spectrum& rb,
                      const BetaParams& p);

// E[ prod_i p^M_{k_i} ] for even k_i, where p^M_k = (1/2M) sum_j (c_j^k +
// (-c_j)^k) is the normalized symmetric power sum of the signed spectrum.
Rat expected_normalized_power_product(const std::vector<int>& even_ks, const Spectrum& ra,
                                      const Spectrum& rb, const BetaParams& p);

} // namespace rectadd

#endif
