#include "rectadd/rational.hpp"

#include "rectadd/errors.hpp"

#include <sstream>

namespace rectadd {

Rat make_rat(long num, long den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw validation_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw validation_error("zero denominator in '" + s + "'");
            Rat r(num);
            r /= Rat(den);
            return r;
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            size_t frac_len = s.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+")
                throw validation_error("malformed rational '" + s + "'");
            mpz_class num(digits);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            Rat r(num);
            r /= Rat(den);
            return r;
        }
        return Rat(mpz_class(s));
    } catch (const std::invalid_argument&) {
        throw validation_error("malformed rational '" + s + "'");
    }
}

std::string rat_str(const Rat& x) {
    return x.get_str();
}

double rat_double(const Rat& x) {
    return x.get_d();
}

Rat pochhammer(const Rat& x, int n) {
    Rat r = 1;
    Rat t = x;
    for (int i = 0; i < n; ++i) {
        r *= t;
        t += 1;
    }
    return r;
}

Rat factorial(int n) {
    Rat r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Rat binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

Rat rat_pow(const Rat& x, int e) {
    RECTADD_CHECK(e >= 0, "rat_pow wants e >= 0");
    Rat r = 1;
    Rat base = x;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rat rat_abs(const Rat& x) {
    return x < 0 ? Rat(-x) : x;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // trim spaces
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw validation_error("empty entry in rational list '" + csv + "'");
        out.push_back(parse_rat(item.substr(a, b - a + 1)));
    }
    return out;
}

} // namespace rectadd
