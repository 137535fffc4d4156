#include "rectadd/bessel.hpp"

#include "rectadd/errors.hpp"
#include "rectadd/jack.hpp"
#include "rectadd/partition.hpp"
#include "rectadd/series.hpp"
#include "rectadd/sympoly.hpp"

#include <algorithm>

namespace rectadd {

BesselTrunc bessel_trunc(const std::vector<Rat>& spectrum_sq, const Rat& theta, int M,
                         int N, int order) {
    if (M > N) throw validation_error("bessel_trunc wants M <= N");
    if (static_cast<int>(spectrum_sq.size()) != M)
        throw validation_error("bessel_trunc: spectrum length must be M");
    RECTADD_CHECK(order >= 0, "bessel_trunc wants order >= 0");

    JackTable table(theta, M);
    ZPoly poly(M);
    Rat quarter(1, 4);
    for (int n = 0; n <= order; ++n) {
        for (const Partition& mu : enumerate_partitions(n, M)) {
            Rat coef = 1;
            for (int i = 0; i < mu.length(); ++i)
                coef /= pochhammer(theta * (N - i), mu.parts()[i]);
            auto [h, hp] = hook_products(mu, theta);
            coef /= h;
            coef *= rat_pow(quarter, n);
            Rat pa = table.jack(mu).evaluate(spectrum_sq);
            if (pa == 0) continue;
            Rat ones = jack_at_ones(mu, theta, M);
            RECTADD_CHECK(ones != 0, "P_mu(1^M) vanished for theta > 0");
            poly += table.jack(mu).to_zpoly_squared_vars() * (coef * pa / ones);
        }
    }
    return BesselTrunc{M, N, theta, spectrum_sq, order, std::move(poly)};
}

ZPoly bgf(const AtomicMeasure& measure, const Rat& theta, int M, int N, int order) {
    Rat total = 0;
    for (const auto& atom : measure.atoms) total += atom.weight;
    if (total != 1) throw validation_error("bgf wants weights summing to 1");
    ZPoly acc(M);
    for (const auto& atom : measure.atoms)
        acc += bessel_trunc(atom.spectrum_sq, theta, M, N, order).poly * atom.weight;
    return acc;
}

std::vector<Rat> log_derivative_cumulants(const ZPoly& g, int order) {
    RECTADD_CHECK(g.constant_term() == 1, "log_derivative_cumulants wants constant term 1");
    Series restricted(g.restrict_to_variable(0, order));
    Series ln = restricted.log();
    std::vector<Rat> out(order + 1, Rat(0)); // out[l] = k_l, out[0] unused
    for (int l = 1; l <= order; ++l) out[l] = ln[l] * l;
    return out;
}

namespace {
// exp(x) truncated at x^order, evaluated at a rational.
Rat exp_trunc(const Rat& x, int order) {
    Rat acc = 0, term = 1;
    for (int j = 0; j <= order; ++j) {
        acc += term;
        term *= x;
        term /= (j + 1);
    }
    return acc;
}
} // namespace

HighTempGap hightemp_limit_check(const std::vector<Rat>& spectrum_sq, int M, int N,
                                 const Rat& theta, const std::vector<Rat>& z_points,
                                 int order) {
    RECTADD_CHECK(static_cast<int>(z_points.size()) == M, "hightemp check wants M points");
    BesselTrunc b = bessel_trunc(spectrum_sq, theta, M, N, order);
    // Argument rescaled by 2 sqrt(N theta); the kernel is even in each
    // variable, so substituting z_i^2 = 4 N theta z_i^2 keeps the
    // evaluation rational for every input.
    std::vector<Rat> scaled_sq(M);
    for (int i = 0; i < M; ++i)
        scaled_sq[i] = 4 * Rat(N) * theta * z_points[i] * z_points[i];
    Rat lhs = 0;
    for (const auto& [e, c] : b.poly.terms()) {
        Rat t = c;
        for (int i = 0; i < M; ++i) {
            RECTADD_CHECK(e[i] % 2 == 0, "Bessel kernel must be even in each variable");
            if (e[i] > 0) t *= rat_pow(scaled_sq[i], e[i] / 2);
        }
        lhs += t;
    }

    std::vector<int> perm(M);
    for (int i = 0; i < M; ++i) perm[i] = i;
    Rat rhs = 0;
    do {
        Rat prod = 1;
        for (int i = 0; i < M; ++i)
            prod *= exp_trunc(spectrum_sq[i] * z_points[perm[i]] * z_points[perm[i]], order);
        rhs += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    rhs /= factorial(M);

    return HighTempGap{lhs, rhs, rat_abs(lhs - rhs)};
}

} // namespace rectadd
