#include "rectadd/zpoly.hpp"

#include "rectadd/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rectadd {

ZPoly ZPoly::constant(int num_vars, const Rat& c) {
    ZPoly p(num_vars);
    p.add_term(Expo(num_vars, 0), c);
    return p;
}

ZPoly ZPoly::variable(int num_vars, int i) {
    ZPoly p(num_vars);
    Expo e(num_vars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

void ZPoly::add_term(const Expo& e, const Rat& c) {
    RECTADD_CHECK(static_cast<int>(e.size()) == m_, "exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat ZPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat ZPoly::constant_term() const {
    return coeff(Expo(m_, 0));
}

int ZPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    RECTADD_CHECK(m_ == o.m_, "arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    RECTADD_CHECK(m_ == o.m_, "arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r = *this;
    r += o;
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    ZPoly r = *this;
    r -= o;
    return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    RECTADD_CHECK(m_ == o.m_, "arity mismatch");
    ZPoly r(m_);
    Expo e(m_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < m_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

ZPoly ZPoly::operator*(const Rat& c) const {
    ZPoly r(m_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

ZPoly ZPoly::derivative(int i) const {
    ZPoly r(m_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Expo d = e;
        d[i] -= 1;
        r.add_term(d, c * e[i]);
    }
    return r;
}

ZPoly ZPoly::reflect_sign(int i) const {
    ZPoly r(m_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, e[i] % 2 == 0 ? c : -c);
    return r;
}

ZPoly ZPoly::swap_vars(int i, int j) const {
    ZPoly r(m_);
    for (const auto& [e, c] : terms_) {
        Expo d = e;
        std::swap(d[i], d[j]);
        r.add_term(d, c);
    }
    return r;
}

ZPoly ZPoly::swap_neg_vars(int i, int j) const {
    ZPoly r(m_);
    for (const auto& [e, c] : terms_) {
        Expo d = e;
        std::swap(d[i], d[j]);
        r.add_term(d, (d[i] + d[j]) % 2 == 0 ? c : -c);
    }
    return r;
}

ZPoly ZPoly::divide_by_variable(int i) const {
    ZPoly r(m_);
    for (const auto& [e, c] : terms_) {
        RECTADD_CHECK(e[i] >= 1, "division by z_i leaves a remainder");
        Expo d = e;
        d[i] -= 1;
        r.add_term(d, c);
    }
    return r;
}

ZPoly ZPoly::divide_by_binomial(int i, int j, bool plus) const {
    // Synthetic division by (z_i - z_j) or (z_i + z_j): peel terms in
    // decreasing z_i-degree; quotient term c z^{e - e_i} cancels the
    // leading term and pushes a term one z_i-degree lower.
    ZPoly rem = *this;
    ZPoly quot(m_);
    while (!rem.is_zero()) {
        auto lead = rem.terms_.begin();
        for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
            if (it->first[i] > lead->first[i]) lead = it;
        RECTADD_CHECK(lead->first[i] >= 1, "division by binomial leaves a remainder");
        Expo d = lead->first;
        Rat c = lead->second;
        d[i] -= 1;
        quot.add_term(d, c);
        Expo shifted = d;
        shifted[j] += 1;
        rem.add_term(lead->first, -c);
        rem.add_term(shifted, plus ? -c : c);
    }
    return quot;
}

Rat ZPoly::evaluate(const std::vector<Rat>& point) const {
    RECTADD_CHECK(static_cast<int>(point.size()) == m_, "evaluation arity mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < m_; ++i)
            if (e[i] > 0) t *= rat_pow(point[i], e[i]);
        acc += t;
    }
    return acc;
}

ZPoly ZPoly::truncate_degree(int cap) const {
    ZPoly r(m_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) <= cap) r.terms_.emplace(e, c);
    return r;
}

std::vector<Rat> ZPoly::restrict_to_variable(int i, int max_deg) const {
    std::vector<Rat> out(max_deg + 1, Rat(0));
    for (const auto& [e, c] : terms_) {
        bool pure = true;
        for (int k = 0; k < m_; ++k)
            if (k != i && e[k] != 0) { pure = false; break; }
        if (pure && e[i] <= max_deg) out[e[i]] += c;
    }
    return out;
}

} // namespace rectadd
