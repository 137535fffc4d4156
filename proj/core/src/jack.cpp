#include "rectadd/jack.hpp"

#include "rectadd/errors.hpp"

#include <algorithm>

namespace rectadd {

JackTable::JackTable(Rat theta, int num_vars) : theta_(std::move(theta)), m_(num_vars) {
    RECTADD_CHECK(m_ >= 1, "JackTable wants at least one variable");
}

Rat JackTable::eigenvalue(const Partition& lambda) const {
    Rat e = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        long p = lambda.parts()[i];
        e += Rat(p) * (p - 1) + 2 * theta_ * (m_ - (i + 1)) * p;
    }
    return e;
}

SymPoly JackTable::apply_operator(const SymPoly& f) const {
    ZPoly zf = f.to_zpoly();
    ZPoly out(m_);
    std::vector<ZPoly> g(m_); // g_i = z_i^2 df/dz_i
    for (int i = 0; i < m_; ++i) {
        ZPoly d = zf.derivative(i);
        ZPoly shifted(m_);
        for (const auto& [e, c] : d.terms()) {
            ZPoly::Expo e2 = e;
            e2[i] += 2;
            shifted.add_term(e2, c);
        }
        g[i] = std::move(shifted);
        // pure part: z_i^2 f_ii
        ZPoly d2 = d.derivative(i);
        for (const auto& [e, c] : d2.terms()) {
            ZPoly::Expo e2 = e;
            e2[i] += 2;
            out.add_term(e2, c);
        }
    }
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j) {
            ZPoly num = g[i] - g[j];
            out += num.divide_by_binomial(i, j, /*plus=*/false) * (2 * theta_);
        }
    return SymPoly::from_zpoly(out);
}

void JackTable::compute_degree(int n) {
    if (degree_done_.count(n)) return;
    std::vector<Partition> parts = enumerate_partitions(n, m_); // decreasing lex
    // T[a][b] = coefficient of m_{parts[a]} in E(m_{parts[b]})
    int np = static_cast<int>(parts.size());
    std::vector<SymPoly> e_of(np);
    for (int b = 0; b < np; ++b)
        e_of[b] = apply_operator(SymPoly::monomial(m_, parts[b]));
    for (int li = 0; li < np; ++li) {
        const Partition& lambda = parts[li];
        Rat eig = eigenvalue(lambda);
        std::map<Partition, Rat> u;
        u[lambda] = 1;
        for (int mi = li + 1; mi < np; ++mi) {
            const Partition& mu = parts[mi];
            Rat s = 0;
            for (int ni = li; ni < mi; ++ni) {
                auto it = u.find(parts[ni]);
                if (it == u.end() || it->second == 0) continue;
                s += e_of[ni].coeff(mu) * it->second;
            }
            // Dominance-incomparable mu never couple: s = 0 and u_mu = 0,
            // even though their eigenvalues may coincide at every theta.
            if (s == 0) continue;
            Rat diag = e_of[mi].coeff(mu);
            if (eig == diag)
                throw singular_parameter_error(
                    "coinciding Jack eigenvalues at theta = " + rat_str(theta_) +
                    " for " + lambda.str() + " vs " + mu.str());
            u[mu] = s / (eig - diag);
        }
        SymPoly p(m_);
        for (const auto& [part, c] : u) p.add_coeff(part, c);
        cache_.emplace(lambda, std::move(p));
    }
    degree_done_[n] = true;
}

const SymPoly& JackTable::jack(const Partition& lambda) {
    if (lambda.length() > m_)
        throw validation_error("jack: l(lambda) > number of variables");
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return it->second;
    compute_degree(lambda.size());
    return cache_.at(lambda);
}

std::map<Partition, Rat> JackTable::expand_in_jack_basis(const SymPoly& f) {
    std::map<Partition, Rat> out;
    SymPoly rem = f;
    while (!rem.is_zero()) {
        // lex-largest monomial within the highest degree present
        const Partition* best = nullptr;
        for (const auto& [l, c] : rem.coeffs()) {
            if (!best || l.size() > best->size() ||
                (l.size() == best->size() && l > *best))
                best = &l;
        }
        Partition lambda = *best;
        Rat x = rem.coeff(lambda);
        rem = rem - jack(lambda) * x;
        RECTADD_CHECK(rem.coeff(lambda) == 0, "jack expansion failed to eliminate leader");
        out[lambda] = x;
    }
    return out;
}

Rat jack_at_ones(const Partition& mu, const Rat& theta, int num_vars) {
    if (mu.length() > num_vars)
        throw validation_error("jack_at_ones: l(mu) > number of variables");
    auto [h, hp] = hook_products(mu, theta);
    if (hp == 0) throw singular_parameter_error("H'(mu) vanishes at theta = " + rat_str(theta));
    return gen_pochhammer(Rat(num_vars) * theta, mu, theta) / hp;
}

Rat dual_b(const Partition& lambda, const Rat& theta) {
    auto [h, hp] = hook_products(lambda, theta);
    if (h == 0) throw singular_parameter_error("H(lambda) vanishes at theta = " + rat_str(theta));
    return hp / h;
}

Series onerow_Q_series(const std::vector<Rat>& r, const Rat& theta, int order) {
    Series acc(order);
    acc[0] = 1;
    for (const Rat& ri : r) {
        // (1 - r y^2)^{-theta} = sum_j (theta)_j / j! r^j y^{2j}, in y^2 steps
        Series factor(order);
        Rat rp = 1;
        for (int j = 0; j <= order; ++j) {
            factor[j] = pochhammer(theta, j) / factorial(j) * rp;
            rp *= ri;
        }
        acc = acc * factor;
    }
    return acc; // index k holds the y^{2k} coefficient
}

std::map<Partition, Rat> structure_constants(const Partition& nu, const Partition& mu,
                                             const Rat& theta, int num_vars,
                                             bool allow_small_m) {
    if (nu.length() > num_vars || mu.length() > num_vars)
        throw validation_error("structure_constants: partition longer than variable count");
    if (!allow_small_m && num_vars < nu.size() + mu.size())
        throw validation_error(
            "structure_constants: M < |nu| + |mu| does not give M-independent constants "
            "(pass allow_small_m to override)");
    JackTable table(theta, num_vars);
    SymPoly prod = table.jack(nu) * table.jack(mu);
    return table.expand_in_jack_basis(prod);
}

} // namespace rectadd
