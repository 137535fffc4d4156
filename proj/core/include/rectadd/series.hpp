#ifndef RECTADD_SERIES_HPP
#define RECTADD_SERIES_HPP

#include "rectadd/rational.hpp"

#include <vector>

namespace rectadd {

// Truncated power series with rational coefficients; all operations are
// exact through the stated order (degree = order).
class Series {
public:
    Series() = default;
    explicit Series(int order) : c_(order + 1, Rat(0)) {}
    Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int k) const { return c_[k]; }
    Rat& operator[](int k) { return c_[k]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const; // truncated to min order
    Series operator*(const Rat& x) const;

    Series derivative() const;

    // Multiplicative inverse; wants nonzero constant term.
    Series inverse() const;

    // log wants constant term 1; exp wants constant term 0.
    Series log() const;
    Series exp() const;

    bool operator==(const Series& o) const = default;

private:
    std::vector<Rat> c_;
};

} // namespace rectadd

#endif
