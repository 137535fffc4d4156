#include "rectadd/duality.hpp"

#include "rectadd/errors.hpp"
#include "rectadd/qgamma.hpp"
#include "rectadd/series.hpp"
#include "rectadd/sympoly.hpp"

namespace rectadd {

FiniteCumulants finite_rect_cumulants_from_elementary(const std::vector<Rat>& a, int M,
                                                      int N) {
    if (M < 1 || M > N) throw validation_error("finite cumulants want 1 <= M <= N");
    RECTADD_CHECK(static_cast<int>(a.size()) == M + 1 && a[0] == 1,
                  "elementary sequence must be a_0 = 1 .. a_M");
    // S(z) = E[exp(-T z N M)] = sum_i (-z N M)^i (M-i)! (N-i)! / (M! N!) a_i
    Series s(M);
    for (int i = 0; i <= M; ++i) {
        Rat c = rat_pow(Rat(-1) * N * M, i);
        c *= factorial(M - i) * factorial(N - i) / (factorial(M) * factorial(N));
        s[i] = c * a[i];
    }
    RECTADD_CHECK(s[0] == 1, "S(z) must have constant term 1");
    Series ln = s.log();
    // R(z) = (-1/M) z d/dz ln S(z): coefficient of z^l is (-l/M) ln[l].
    FiniteCumulants out;
    out.M = M;
    out.N = N;
    for (int l = 1; l <= M; ++l) out.k_fin.push_back(ln[l] * l / Rat(-M));
    return out;
}

FiniteCumulants finite_rect_cumulants(const Spectrum& r, int M, int N) {
    validate(r, M);
    std::vector<Rat> a(M + 1);
    for (int i = 0; i <= M; ++i) a[i] = SymPoly::elementary(M, i).evaluate(r.r);
    return finite_rect_cumulants_from_elementary(a, M, N);
}

DualityReport duality_check(const Spectrum& r, int M, int N, int L) {
    if (L < 1 || L > M) throw validation_error("duality_check wants 1 <= L <= M");
    DualityReport rep;
    rep.M = M;
    rep.N = N;

    FiniteCumulants fin = finite_rect_cumulants(r, M, N);
    fin.k_fin.resize(L);
    rep.k_fin = fin.k_fin;

    // q-gamma side under the identification q = N/M, gamma = -M,
    // m_{2k} = m'_k (-N)^k with m'_k = p_k(r)/M.
    HTParams p{Rat(N) / M, Rat(-M)};
    MomentSeq m;
    for (int k = 1; k <= L; ++k) {
        Rat mk = SymPoly::power_sum(M, k).evaluate(r.r) / M;
        m.m.push_back(mk * rat_pow(Rat(-N), k));
    }
    CumulantSeq kq = m2k(m, p, L);
    rep.k_qgamma = kq.k;

    rep.matches = true;
    for (int l = 1; l <= L; ++l) {
        Rat expected = rat_pow(Rat(2), 2 * l - 1);
        rep.expected.push_back(expected);
        Rat denom = rat_pow(p.gamma, l - 1) * kq.k[l - 1];
        if (denom == 0) {
            // Both sides must vanish together (e.g. the zero spectrum).
            rep.rho.push_back(0);
            if (rep.k_fin[l - 1] != 0) rep.matches = false;
            continue;
        }
        Rat rho = rep.k_fin[l - 1] / denom;
        rep.rho.push_back(rho);
        if (rho != expected) rep.matches = false;
    }
    return rep;
}

} // namespace rectadd
