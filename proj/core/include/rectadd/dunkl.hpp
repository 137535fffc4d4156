#ifndef RECTADD_DUNKL_HPP
#define RECTADD_DUNKL_HPP

#include "rectadd/rational.hpp"
#include "rectadd/zpoly.hpp"

namespace rectadd {

// Type BC rational Dunkl operator
//   D_i = d_i + [theta(N-M+1) - 1/2] (1-s_i)/z_i
//       + theta sum_{j!=i} [ (1-s_ij)/(z_i-z_j) + (1-t_ij)/(z_i+z_j) ]
// where s_i flips the sign of z_i, s_ij swaps z_i and z_j, and t_ij sends
// z_i -> -z_j, z_j -> -z_i. Degree drops by exactly one; every divided
// difference divides exactly (checked).
//
// i is 1-based, matching the usual indexing D_1..D_M.
ZPoly dunkl_apply(int i, const ZPoly& f, const Rat& theta, int M, int N);

// P_k f = (D_1^k + ... + D_M^k) f for even k >= 2.
ZPoly dunkl_power_sum(int k, const ZPoly& f, const Rat& theta, int M, int N);

} // namespace rectadd

#endif
