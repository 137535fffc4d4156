#include "rectadd/series.hpp"

#include "rectadd/errors.hpp"

#include <algorithm>

namespace rectadd {

Series Series::operator+(const Series& o) const {
    int n = std::min(order(), o.order());
    Series r(n);
    for (int k = 0; k <= n; ++k) r[k] = c_[k] + o.c_[k];
    return r;
}

Series Series::operator-(const Series& o) const {
    int n = std::min(order(), o.order());
    Series r(n);
    for (int k = 0; k <= n; ++k) r[k] = c_[k] - o.c_[k];
    return r;
}

Series Series::operator*(const Series& o) const {
    int n = std::min(order(), o.order());
    Series r(n);
    for (int a = 0; a <= n; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; a + b <= n; ++b) {
            if (o.c_[b] == 0) continue;
            r[a + b] += c_[a] * o.c_[b];
        }
    }
    return r;
}

Series Series::operator*(const Rat& x) const {
    Series r(order());
    for (int k = 0; k <= order(); ++k) r[k] = c_[k] * x;
    return r;
}

Series Series::derivative() const {
    if (order() == 0) return Series(0);
    Series r(order() - 1);
    for (int k = 1; k <= order(); ++k) r[k - 1] = c_[k] * k;
    return r;
}

Series Series::inverse() const {
    RECTADD_CHECK(c_[0] != 0, "series inverse wants a unit constant term");
    Series r(order());
    r[0] = 1 / c_[0];
    for (int k = 1; k <= order(); ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j) s += c_[j] * r[k - j];
        r[k] = -s / c_[0];
    }
    return r;
}

Series Series::log() const {
    RECTADD_CHECK(c_[0] == 1, "series log wants constant term 1");
    // (log f)' = f'/f, integrate term by term
    if (order() == 0) return Series(0);
    Series d = derivative() * inverse();
    Series r(order());
    for (int k = 1; k <= order(); ++k) r[k] = d[k - 1] / k;
    return r;
}

Series Series::exp() const {
    RECTADD_CHECK(c_[0] == 0, "series exp wants constant term 0");
    // g = exp(f) satisfies g' = f' g
    Series r(order());
    r[0] = 1;
    for (int k = 1; k <= order(); ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j) s += j * c_[j] * r[k - j];
        r[k] = s / k;
    }
    return r;
}

} // namespace rectadd
