#include "rectadd/qgamma.hpp"

#include "rectadd/errors.hpp"
#include "rectadd/set_partition.hpp"

#include <algorithm>

namespace rectadd {

namespace {

// g(z) = sum_l k_l z^{l-1} truncated at degree cap (odd cumulants zero).
Series cumulant_gf(const CumulantSeq& k, int cap) {
    Series g(cap);
    for (int i = 0; i < k.orders(); ++i) {
        int l = 2 * (i + 1);
        if (l - 1 <= cap) g[l - 1] = k.k[i];
    }
    return g;
}

// One application of D = d/dz + 2 gamma d + ((q-1) gamma - 1/2) d' + *g.
// On z^n the non-multiplicative part acts as C_n z^{n-1} with C_n the
// alternating weight constants.
Series apply_transfer(const Series& h, const Series& g, const HTParams& p) {
    int cap = h.order();
    Series out = g * h; // *_g part
    for (int n = 1; n <= cap; ++n) {
        if (h[n] == 0) continue;
        out[n - 1] += weight_constant(n, p.q, p.gamma) * h[n];
    }
    return out;
}

Rat block_cumulant(const CumulantSeq& k, int block_size) {
    if (block_size % 2 != 0) return 0;
    int i = block_size / 2 - 1;
    RECTADD_CHECK(i >= 0 && i < k.orders(), "cumulant order out of range");
    return k.k[i];
}

} // namespace

MomentSeq k2m_operator(const CumulantSeq& k, const HTParams& p, int K) {
    RECTADD_CHECK(K >= 1, "k2m wants K >= 1");
    if (k.orders() < K) throw validation_error("k2m needs cumulants through order 2K");
    int cap = 2 * K;
    Series g = cumulant_gf(k, cap);
    Series h = g;
    MomentSeq out;
    for (int step = 1; step <= 2 * K - 1; ++step) {
        h = apply_transfer(h, g, p);
        if (step % 2 == 1) {
            out.m.push_back(h[0]); // m_{step+1}
        } else {
            // Odd moment m_{step+1}: vanishes by the parity of the walk.
            RECTADD_CHECK(h[0] == 0, "odd moment failed to vanish in operator route");
        }
    }
    return out;
}

MomentSeq k2m_partitions(const CumulantSeq& k, const HTParams& p, int K) {
    RECTADD_CHECK(K >= 1, "k2m wants K >= 1");
    if (k.orders() < K) throw validation_error("k2m needs cumulants through order 2K");
    MomentSeq out;
    for (int kk = 1; kk <= K; ++kk) {
        Rat m = 0;
        for (const SetPartition& pi :
             enumerate_set_partitions(2 * kk, SetPartitionFilter::noncrossing_even)) {
            Rat prod = weight_W(pi, p.q, p.gamma);
            for (const auto& b : pi.blocks()) {
                if (prod == 0) break;
                prod *= block_cumulant(k, static_cast<int>(b.size()));
            }
            m += prod;
        }
        out.m.push_back(m);
    }
    return out;
}

MomentSeq k2m_genfun(const CumulantSeq& k, const HTParams& p, int K, GenfunAux* aux) {
    RECTADD_CHECK(K >= 1, "k2m wants K >= 1");
    if (k.orders() < K) throw validation_error("k2m needs cumulants through order 2K");
    if (p.gamma == 0) throw degenerate_parameter_error("genfun route wants gamma != 0");
    // Index n of every series below is the y^{2n} coefficient.
    Series kexp(K);
    for (int l = 1; l <= K; ++l) kexp[l] = k.k[l - 1] / (2 * l);
    Series b = kexp.exp(); // sum b_n y^{2n}
    Series c(K);
    for (int n = 0; n <= K; ++n)
        c[n] = b[n] * rat_pow(Rat(4), n) * pochhammer(p.q * p.gamma, n) *
               pochhammer(p.gamma, n);
    if (aux) aux->c = c.coeffs();
    Series lnc = c.log();
    MomentSeq out;
    for (int kk = 1; kk <= K; ++kk) out.m.push_back(lnc[kk] * kk / p.gamma);
    return out;
}

CumulantSeq m2k_genfun(const MomentSeq& m, const HTParams& p, int K, GenfunAux* aux) {
    RECTADD_CHECK(K >= 1, "m2k wants K >= 1");
    if (m.orders() < K) throw validation_error("m2k needs moments through order 2K");
    Series mexp(K);
    for (int kk = 1; kk <= K; ++kk) mexp[kk] = p.gamma * m.m[kk - 1] / kk;
    Series c = mexp.exp();
    if (aux) aux->c = c.coeffs();
    Series b(K);
    for (int n = 0; n <= K; ++n) {
        Rat denom = rat_pow(Rat(4), n) * pochhammer(p.q * p.gamma, n) * pochhammer(p.gamma, n);
        if (denom == 0)
            throw degenerate_parameter_error("(q gamma)_n (gamma)_n vanishes at n = " +
                                             std::to_string(n));
        b[n] = c[n] / denom;
    }
    Series lnb = b.log();
    CumulantSeq out;
    for (int l = 1; l <= K; ++l) out.k.push_back(lnb[l] * 2 * l);
    return out;
}

CumulantSeq m2k(const MomentSeq& m, const HTParams& p, int K) {
    RECTADD_CHECK(K >= 1, "m2k wants K >= 1");
    if (m.orders() < K) throw validation_error("m2k needs moments through order 2K");
    CumulantSeq out;
    for (int l = 1; l <= K; ++l) {
        Rat leading = 1;
        for (int j = 1; j <= 2 * l - 1; ++j) leading *= weight_constant(j, p.q, p.gamma);
        if (leading == 0)
            throw degenerate_parameter_error("leading product C_1..C_{2l-1} vanishes at l = " +
                                             std::to_string(l));
        Rat rest = 0;
        for (const SetPartition& pi :
             enumerate_set_partitions(2 * l, SetPartitionFilter::noncrossing_even)) {
            if (pi.num_blocks() == 1) continue;
            Rat prod = weight_W(pi, p.q, p.gamma);
            for (const auto& b : pi.blocks()) {
                if (prod == 0) break;
                prod *= block_cumulant(out, static_cast<int>(b.size()));
            }
            rest += prod;
        }
        out.k.push_back((m.m[l - 1] - rest) / leading);
    }
    return out;
}

MomentSeq qgamma_convolve(const MomentSeq& a, const MomentSeq& b, const HTParams& p, int K) {
    CumulantSeq ka = m2k(a, p, K);
    CumulantSeq kb = m2k(b, p, K);
    CumulantSeq kc;
    for (int i = 0; i < K; ++i) kc.k.push_back(ka.k[i] + kb.k[i]);
    return k2m_operator(kc, p, K);
}

namespace {

template <typename Weight>
std::vector<Rat> partition_sum_k2m(const std::vector<Rat>& cum, int K,
                                   SetPartitionFilter filter, Weight weight) {
    std::vector<Rat> out;
    for (int k = 1; k <= K; ++k) {
        Rat m = 0;
        for (const SetPartition& pi : enumerate_set_partitions(k, filter)) {
            Rat prod = weight(pi);
            for (const auto& b : pi.blocks()) {
                if (prod == 0) break;
                size_t s = b.size();
                RECTADD_CHECK(s <= cum.size(), "cumulant order out of range");
                prod *= cum[s - 1];
            }
            m += prod;
        }
        out.push_back(m);
    }
    return out;
}

} // namespace

std::vector<Rat> classical_k2m(const std::vector<Rat>& cumulants, int K) {
    RECTADD_CHECK(static_cast<int>(cumulants.size()) >= K, "need cumulants through K");
    return partition_sum_k2m(cumulants, K, SetPartitionFilter::all,
                             [](const SetPartition&) { return Rat(1); });
}

std::vector<Rat> classical_m2k(const std::vector<Rat>& moments, int K) {
    RECTADD_CHECK(static_cast<int>(moments.size()) >= K, "need moments through K");
    std::vector<Rat> k;
    for (int n = 1; n <= K; ++n) {
        Rat rest = 0;
        for (const SetPartition& pi : enumerate_set_partitions(n, SetPartitionFilter::all)) {
            if (pi.num_blocks() == 1) continue;
            Rat prod = 1;
            for (const auto& b : pi.blocks()) prod *= k[b.size() - 1];
            rest += prod;
        }
        k.push_back(moments[n - 1] - rest);
    }
    return k;
}

std::vector<Rat> free_k2m(const std::vector<Rat>& r, int K) {
    RECTADD_CHECK(static_cast<int>(r.size()) >= K, "need cumulants through K");
    return partition_sum_k2m(r, K, SetPartitionFilter::noncrossing,
                             [](const SetPartition&) { return Rat(1); });
}

MomentSeq rectfree_k2m(const CumulantSeq& c, const Rat& q, int K) {
    if (q == 0) throw validation_error("rectfree_k2m wants q != 0");
    if (c.orders() < K) throw validation_error("need cumulants through order 2K");
    MomentSeq out;
    for (int k = 1; k <= K; ++k) {
        Rat m = 0;
        for (const SetPartition& pi :
             enumerate_set_partitions(2 * k, SetPartitionFilter::noncrossing_even)) {
            Rat prod = rat_pow(1 / q, even_min_count(pi));
            for (const auto& b : pi.blocks()) prod *= block_cumulant(c, b.size());
            m += prod;
        }
        out.m.push_back(m);
    }
    return out;
}

CumulantSeq rectfree_m2k(const MomentSeq& m, const Rat& q, int K) {
    if (q == 0) throw validation_error("rectfree_m2k wants q != 0");
    if (m.orders() < K) throw validation_error("need moments through order 2K");
    CumulantSeq out;
    for (int l = 1; l <= K; ++l) {
        // single block has e = 0, so the leading coefficient is 1
        Rat rest = 0;
        for (const SetPartition& pi :
             enumerate_set_partitions(2 * l, SetPartitionFilter::noncrossing_even)) {
            if (pi.num_blocks() == 1) continue;
            Rat prod = rat_pow(1 / q, even_min_count(pi));
            for (const auto& b : pi.blocks()) prod *= block_cumulant(out, b.size());
            rest += prod;
        }
        out.k.push_back(m.m[l - 1] - rest);
    }
    return out;
}

std::vector<Rat> gamma_k2m(const std::vector<Rat>& kg, const Rat& gamma, int K) {
    RECTADD_CHECK(static_cast<int>(kg.size()) >= K, "need cumulants through K");
    // Operator route: [z^0] (d/dz + gamma d + *g)^{k-1} g, transfer z^n -> (n + gamma) z^{n-1}.
    std::vector<Rat> via_op;
    {
        Series g(K);
        for (int l = 1; l <= K; ++l) g[l - 1] = kg[l - 1];
        Series h = g;
        via_op.push_back(h[0]); // m_1 = k_1
        for (int step = 1; step <= K - 1; ++step) {
            Series out = g * h;
            for (int n = 1; n <= h.order(); ++n)
                if (h[n] != 0) out[n - 1] += (gamma + n) * h[n];
            h = out;
            via_op.push_back(h[0]);
        }
    }
    std::vector<Rat> via_parts = partition_sum_k2m(
        kg, K, SetPartitionFilter::noncrossing, [&](const SetPartition& pi) {
            WeightData wd = weight_data(pi);
            return weight_W_generic(wd, [&](int j) { return gamma + j; });
        });
    RECTADD_CHECK(via_op == via_parts, "gamma-cumulant operator and partition routes differ");
    return via_op;
}

std::vector<Rat> gamma_m2k(const std::vector<Rat>& mg, const Rat& gamma, int K) {
    RECTADD_CHECK(static_cast<int>(mg.size()) >= K, "need moments through K");
    std::vector<Rat> k;
    for (int n = 1; n <= K; ++n) {
        Rat leading = 1;
        for (int j = 1; j <= n - 1; ++j) leading *= gamma + j; // single block weight
        Rat rest = 0;
        for (const SetPartition& pi :
             enumerate_set_partitions(n, SetPartitionFilter::noncrossing)) {
            if (pi.num_blocks() == 1) continue;
            WeightData wd = weight_data(pi);
            Rat prod = weight_W_generic(wd, [&](int j) { return gamma + j; });
            for (const auto& b : pi.blocks()) prod *= k[b.size() - 1];
            rest += prod;
        }
        if (leading == 0)
            throw degenerate_parameter_error("gamma-cumulant leading product vanishes");
        k.push_back((mg[n - 1] - rest) / leading);
    }
    return k;
}

DegenerationTrend degenerate_to_classical(const MomentSeq& m, int K) {
    auto rescale = [&](const Rat& gamma, const Rat& qgamma) {
        HTParams p{qgamma / gamma, gamma};
        CumulantSeq k = m2k(m, p, K);
        std::vector<Rat> out;
        for (int l = 1; l <= K; ++l)
            out.push_back(rat_pow(qgamma, l) * rat_pow(Rat(2), 2 * l - 1) *
                          factorial(l - 1) * k.k[l - 1]);
        return out;
    };
    DegenerationTrend t;
    t.far = rescale(make_rat(1, 1000000), Rat(1000000));
    t.near = rescale(make_rat(1, 100000000), Rat(100000000));
    return t;
}

DegenerationTrend degenerate_to_rectfree(const MomentSeq& m, const Rat& q, int K) {
    if (q < 1) throw validation_error("degenerate_to_rectfree wants q >= 1");
    auto rescale = [&](const Rat& gamma) {
        HTParams p{q, gamma};
        CumulantSeq k = m2k(m, p, K);
        std::vector<Rat> out;
        for (int l = 1; l <= K; ++l)
            out.push_back(rat_pow(1 / q, l - 1) * rat_pow(2 * q * gamma, 2 * l - 1) *
                          k.k[l - 1]);
        return out;
    };
    DegenerationTrend t;
    t.far = rescale(Rat(10000));
    t.near = rescale(Rat(1000000));
    return t;
}

DegenerationTrend degenerate_to_gamma(const MomentSeq& m_gamma_side, const Rat& gamma, int K) {
    if (gamma <= 0) throw validation_error("degenerate_to_gamma wants gamma > 0");
    auto rescale = [&](const Rat& q) {
        MomentSeq inflated;
        for (int kk = 1; kk <= K; ++kk)
            inflated.m.push_back(m_gamma_side.m[kk - 1] * rat_pow(q * gamma, kk));
        HTParams p{q, gamma};
        CumulantSeq k = m2k(inflated, p, K);
        std::vector<Rat> out;
        for (int l = 1; l <= K; ++l)
            out.push_back(rat_pow(Rat(2), 2 * l - 1) * k.k[l - 1]);
        return out;
    };
    DegenerationTrend t;
    t.far = rescale(Rat(10000));
    t.near = rescale(Rat(1000000));
    return t;
}

MomentSeq laguerre_moments(const HTParams& p, int K) {
    MomentSeq out;
    for (int k = 1; k <= K; ++k) {
        Rat m = 0;
        for (const SetPartition& pi :
             enumerate_set_partitions(2 * k, SetPartitionFilter::nc_perfect_matchings)) {
            WeightData wd = weight_data(pi);
            Rat prod = 1;
            for (size_t i = 0; i < wd.P.size(); ++i) {
                RECTADD_CHECK(wd.P[i] == wd.Q[i] + 1, "matching block weight is a single C");
                prod *= weight_constant(wd.P[i], p.q, p.gamma);
            }
            m += prod;
        }
        out.m.push_back(m);
    }
    // Strongest internal cross-check: the matching sum must equal the
    // k_2 = 1 transform.
    CumulantSeq unit;
    unit.k.assign(K, Rat(0));
    unit.k[0] = 1;
    MomentSeq via_transform = k2m_partitions(unit, p, K);
    RECTADD_CHECK(out.m == via_transform.m,
                  "Laguerre matching sum disagrees with the k_2 = 1 transform");
    return out;
}

} // namespace rectadd
