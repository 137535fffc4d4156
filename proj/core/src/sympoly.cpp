#include "rectadd/sympoly.hpp"

#include "rectadd/errors.hpp"

#include <algorithm>

namespace rectadd {

SymPoly SymPoly::monomial(int num_vars, const Partition& lambda, const Rat& c) {
    SymPoly p(num_vars);
    p.add_coeff(lambda, c);
    return p;
}

SymPoly SymPoly::elementary(int num_vars, int k) {
    if (k == 0) return monomial(num_vars, Partition{});
    if (k > num_vars) return zero(num_vars);
    return monomial(num_vars, Partition(std::vector<int>(k, 1)));
}

SymPoly SymPoly::power_sum(int num_vars, int k) {
    if (k == 0) return monomial(num_vars, Partition{}, Rat(num_vars));
    return monomial(num_vars, Partition{k});
}

void SymPoly::add_coeff(const Partition& lambda, const Rat& c) {
    RECTADD_CHECK(lambda.length() <= m_, "partition longer than variable count");
    if (c == 0) return;
    auto it = coeffs_.find(lambda);
    if (it == coeffs_.end()) {
        coeffs_.emplace(lambda, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rat SymPoly::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    RECTADD_CHECK(m_ == o.m_, "arity mismatch");
    for (const auto& [l, c] : o.coeffs_) add_coeff(l, c);
    return *this;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    r += o;
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [l, c] : o.coeffs_) r.add_coeff(l, -c);
    return r;
}

SymPoly SymPoly::operator*(const Rat& c) const {
    SymPoly r(m_);
    if (c == 0) return r;
    for (const auto& [l, coef] : coeffs_) r.coeffs_.emplace(l, coef * c);
    return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    return from_zpoly(to_zpoly() * o.to_zpoly());
}

Rat SymPoly::evaluate(const std::vector<Rat>& point) const {
    RECTADD_CHECK(static_cast<int>(point.size()) == m_, "evaluation arity mismatch");
    Rat acc = 0;
    for (const auto& [l, c] : coeffs_) acc += c * monomial_evaluate(m_, l, point);
    return acc;
}

Rat SymPoly::evaluate_at_ones() const {
    return evaluate(std::vector<Rat>(m_, Rat(1)));
}

ZPoly SymPoly::to_zpoly() const {
    ZPoly p(m_);
    for (const auto& [l, c] : coeffs_) p += monomial_orbit_zpoly(m_, l) * c;
    return p;
}

ZPoly SymPoly::to_zpoly_squared_vars() const {
    ZPoly base = to_zpoly();
    ZPoly p(m_);
    for (const auto& [e, c] : base.terms()) {
        ZPoly::Expo d(e);
        for (auto& x : d) x *= 2;
        p.add_term(d, c);
    }
    return p;
}

SymPoly SymPoly::from_zpoly(const ZPoly& p) {
    // A symmetric polynomial is determined by its coefficients on sorted
    // exponent vectors.
    SymPoly s(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        if (!std::is_sorted(e.begin(), e.end(), std::greater<int>())) continue;
        s.add_coeff(Partition(e), c);
    }
    return s;
}

ZPoly monomial_orbit_zpoly(int num_vars, const Partition& lambda) {
    RECTADD_CHECK(lambda.length() <= num_vars, "partition longer than variable count");
    std::vector<int> expo(num_vars, 0);
    for (int i = 0; i < lambda.length(); ++i) expo[i] = lambda.parts()[i];
    std::sort(expo.begin(), expo.end()); // next_permutation wants ascending start
    ZPoly p(num_vars);
    do {
        p.add_term(expo, 1);
    } while (std::next_permutation(expo.begin(), expo.end()));
    return p;
}

Rat monomial_evaluate(int num_vars, const Partition& lambda, const std::vector<Rat>& point) {
    if (lambda.length() > num_vars) return 0;
    std::vector<int> expo(num_vars, 0);
    for (int i = 0; i < lambda.length(); ++i) expo[i] = lambda.parts()[i];
    std::sort(expo.begin(), expo.end());
    Rat acc = 0;
    do {
        Rat t = 1;
        for (int i = 0; i < num_vars; ++i)
            if (expo[i] > 0) t *= rat_pow(point[i], expo[i]);
        acc += t;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return acc;
}

} // namespace rectadd
