#include "rectadd/rectconv.hpp"

#include "rectadd/errors.hpp"
#include "rectadd/jack.hpp"

#include <algorithm>

namespace rectadd {

void validate(const BetaParams& p) {
    if (p.M < 1 || p.M > p.N) throw validation_error("BetaParams wants 1 <= M <= N");
    if (p.theta <= 0) throw validation_error("BetaParams wants theta > 0");
}

void validate(const Spectrum& s, int M) {
    if (static_cast<int>(s.r.size()) != M)
        throw validation_error("Spectrum must have exactly M entries");
    for (size_t i = 0; i < s.r.size(); ++i) {
        if (s.r[i] < 0) throw validation_error("Spectrum entries must be nonnegative");
        if (i + 1 < s.r.size() && s.r[i] < s.r[i + 1])
            throw validation_error("Spectrum must be weakly decreasing");
    }
}

namespace {

Rat gamma_ratio(const Partition& lambda, const Partition& nu, const Partition& mu,
                const Rat& theta, int M, int N) {
    // prod_i (theta(N-i+1))_{lambda_i} / [ (theta(N-i+1))_{nu_i} (theta(N-i+1))_{mu_i} ]
    Rat r = 1;
    for (int i = 0; i < M; ++i) {
        Rat base = theta * (N - i);
        r *= pochhammer(base, lambda.part(i));
        r /= pochhammer(base, nu.part(i));
        r /= pochhammer(base, mu.part(i));
    }
    return r;
}

} // namespace

Rat conv_jack_moment(const Partition& lambda, const Spectrum& ra, const Spectrum& rb,
                     const BetaParams& p) {
    validate(p);
    validate(ra, p.M);
    validate(rb, p.M);
    if (lambda.length() > p.M)
        throw validation_error("conv_jack_moment wants l(lambda) <= M");

    int n = lambda.size();
    if (n == 0) return 1;

    const Rat& theta = p.theta;
    int m_universal = std::max(p.M, n); // where the structure constants stabilize
    JackTable table_c(theta, m_universal);
    JackTable table_eval(theta, p.M);

    Rat h_lambda = hook_products(lambda, theta).first;
    Rat ones_lambda = jack_at_ones(lambda, theta, p.M);

    Rat acc = 0;
    for (int s = 0; s <= n; ++s) {
        for (const Partition& nu : enumerate_partitions(s, p.M)) {
            Rat pa = table_eval.jack(nu).evaluate(ra.r);
            if (pa == 0) continue;
            for (const Partition& mu : enumerate_partitions(n - s, p.M)) {
                Rat pb = table_eval.jack(mu).evaluate(rb.r);
                if (pb == 0) continue;
                SymPoly prod = table_c.jack(nu) * table_c.jack(mu);
                auto exp_map = table_c.expand_in_jack_basis(prod);
                auto it = exp_map.find(lambda);
                if (it == exp_map.end() || it->second == 0) continue;
                Rat c = it->second;
                Rat term = h_lambda / hook_products(nu, theta).first /
                           hook_products(mu, theta).first;
                term *= gamma_ratio(lambda, nu, mu, theta, p.M, p.N);
                term *= ones_lambda / jack_at_ones(nu, theta, p.M) /
                        jack_at_ones(mu, theta, p.M);
                term *= c * pa * pb;
                acc += term;
            }
        }
    }
    return acc;
}

std::vector<Rat> expected_elementary(const Spectrum& ra, const Spectrum& rb, int M, int N) {
    if (M < 1 || M > N) throw validation_error("expected_elementary wants 1 <= M <= N");
    validate(ra, M);
    validate(rb, M);
    std::vector<Rat> ea(M + 1), eb(M + 1);
    for (int k = 0; k <= M; ++k) {
        ea[k] = SymPoly::elementary(M, k).evaluate(ra.r);
        eb[k] = SymPoly::elementary(M, k).evaluate(rb.r);
    }
    std::vector<Rat> a(M + 1, Rat(0));
    for (int l = 0; l <= M; ++l) {
        for (int i = 0; i <= l; ++i) {
            int j = l - i;
            if (i > M || j > M) continue;
            Rat w = factorial(M - i) * factorial(M - j) / (factorial(M) * factorial(M - l));
            w *= factorial(N - i) * factorial(N - j) / (factorial(N) * factorial(N - l));
            a[l] += w * ea[i] * eb[j];
        }
    }
    return a;
}

CharPoly rect_charpoly(const Spectrum& ra, const Spectrum& rb, int M, int N) {
    std::vector<Rat> a = expected_elementary(ra, rb, M, N);
    CharPoly cp;
    cp.M = M;
    cp.coeffs.resize(M + 1);
    for (int l = 0; l <= M; ++l) cp.coeffs[l] = (l % 2 == 0 ? a[l] : -a[l]);
    return cp;
}

Rat lowtemp_concentration_gap(const Partition& lambda, const Spectrum& ra,
                              const Spectrum& rb, int M, int N, const Rat& theta_large) {
    BetaParams p{M, N, theta_large};
    Rat jack_moment = conv_jack_moment(lambda, ra, rb, p);
    std::vector<Rat> a = expected_elementary(ra, rb, M, N);
    Rat prod = 1;
    for (int i = 1; i <= M; ++i) {
        int mult = lambda.part(i - 1) - lambda.part(i);
        if (mult > 0) prod *= rat_pow(a[i], mult);
    }
    return rat_abs(jack_moment - prod);
}

Rat m1_fluct_moment(int order, const Rat& ra, const Rat& rb, const Rat& theta, int N) {
    if (order < 0) throw validation_error("m1_fluct_moment wants order >= 0");
    if (order % 2 == 1) return 0;
    int k = order / 2;
    Rat denom = pochhammer(theta * N, k);
    if (denom == 0) throw degenerate_parameter_error("(theta N)_k vanishes");
    return rat_pow(theta, k) * factorial(2 * k) / factorial(k) * rat_pow(ra * rb, k) / denom;
}

bool binom_identity_check(int l, int q_exp) {
    RECTADD_CHECK(0 <= q_exp && q_exp <= l, "binom_identity_check wants 0 <= q <= l");
    // Coefficients of the polynomial in z.
    std::vector<Rat> total(q_exp + 1, Rat(0));
    for (int p = 0; p <= l; ++p) {
        std::vector<Rat> poly{Rat(1)}; // (z+p)(z+p+1)...(z+p+q-1)
        for (int t = 0; t < q_exp; ++t) {
            std::vector<Rat> next(poly.size() + 1, Rat(0));
            for (size_t d = 0; d < poly.size(); ++d) {
                next[d + 1] += poly[d];          // z * coeff
                next[d] += poly[d] * (p + t);    // constant
            }
            poly = std::move(next);
        }
        Rat sign = (l - p) % 2 == 0 ? 1 : -1;
        Rat w = sign / (factorial(l - p) * factorial(p));
        for (size_t d = 0; d < poly.size(); ++d) total[d] += w * poly[d];
    }
    Rat expect0 = (q_exp == l) ? 1 : 0;
    if (total[0] != expect0) return false;
    for (int d = 1; d <= q_exp; ++d)
        if (total[d] != 0) return false;
    return true;
}

Rat expected_sym_stat(const SymPoly& f, const Spectrum& ra, const Spectrum& rb,
                      const BetaParams& p) {
    validate(p);
    JackTable table(p.theta, p.M);
    Rat acc = 0;
    for (const auto& [lambda, c] : table.expand_in_jack_basis(f))
        acc += c * conv_jack_moment(lambda, ra, rb, p);
    return acc;
}

Rat expected_normalized_power_product(const std::vector<int>& even_ks, const Spectrum& ra,
                                      const Spectrum& rb, const BetaParams& p) {
    SymPoly f = SymPoly::monomial(p.M, Partition{}); // 1
    Rat norm = 1;
    for (int k : even_ks) {
        if (k < 2 || k % 2 != 0)
            throw validation_error("normalized power statistics want even exponents");
        f = f * SymPoly::power_sum(p.M, k / 2); // p_k of c = p_{k/2} of c^2
        norm /= p.M;
    }
    return expected_sym_stat(f, ra, rb, p) * norm;
}

} // namespace rectadd
