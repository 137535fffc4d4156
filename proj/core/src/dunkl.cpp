#include "rectadd/dunkl.hpp"

#include "rectadd/errors.hpp"

namespace rectadd {

ZPoly dunkl_apply(int i, const ZPoly& f, const Rat& theta, int M, int N) {
    if (i < 1 || i > M) throw validation_error("dunkl_apply wants 1 <= i <= M");
    if (M > N) throw validation_error("dunkl_apply wants M <= N");
    RECTADD_CHECK(f.num_vars() == M, "dunkl_apply arity mismatch");
    int v = i - 1;

    ZPoly out = f.derivative(v);

    Rat boundary = theta * (N - M + 1) - Rat(1, 2);
    if (boundary != 0)
        out += (f - f.reflect_sign(v)).divide_by_variable(v) * boundary;

    if (theta != 0) {
        for (int j = 0; j < M; ++j) {
            if (j == v) continue;
            // (1 - s_ij)/(z_i - z_j): the swap-difference is divisible
            // because it is antisymmetric in (z_i, z_j).
            ZPoly swap_diff = f - f.swap_vars(v, j);
            out += swap_diff.divide_by_binomial(v, j, /*plus=*/false) * theta;
            ZPoly neg_diff = f - f.swap_neg_vars(v, j);
            out += neg_diff.divide_by_binomial(v, j, /*plus=*/true) * theta;
        }
    }
    return out;
}

ZPoly dunkl_power_sum(int k, const ZPoly& f, const Rat& theta, int M, int N) {
    if (k < 2 || k % 2 != 0)
        throw validation_error("dunkl_power_sum wants even k >= 2");
    ZPoly out(M);
    for (int i = 1; i <= M; ++i) {
        ZPoly acc = f;
        for (int rep = 0; rep < k; ++rep) acc = dunkl_apply(i, acc, theta, M, N);
        out += acc;
    }
    return out;
}

} // namespace rectadd
