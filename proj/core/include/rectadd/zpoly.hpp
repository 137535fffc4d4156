#ifndef RECTADD_ZPOLY_HPP
#define RECTADD_ZPOLY_HPP

#include "rectadd/rational.hpp"

#include <map>
#include <vector>

namespace rectadd {

// Polynomial in z_1..z_M with rational coefficients, sparse on exponent
// vectors. Not required to be symmetric; this is the domain the Dunkl
// operators act on.
class ZPoly {
public:
    using Expo = std::vector<int>;

    ZPoly() = default;
    explicit ZPoly(int num_vars) : m_(num_vars) {}

    static ZPoly constant(int num_vars, const Rat& c);
    static ZPoly variable(int num_vars, int i); // z_i, 0-based

    int num_vars() const { return m_; }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Expo& e, const Rat& c);
    Rat coeff(const Expo& e) const;
    Rat constant_term() const;
    int total_degree() const; // -1 for the zero polynomial

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator*(const Rat& c) const;
    bool operator==(const ZPoly& o) const = default;

    ZPoly derivative(int i) const;

    // Variable substitutions generating the BC_M reflection group.
    ZPoly reflect_sign(int i) const;        // z_i -> -z_i
    ZPoly swap_vars(int i, int j) const;    // z_i <-> z_j
    ZPoly swap_neg_vars(int i, int j) const; // z_i -> -z_j, z_j -> -z_i

    // Exact division; throws on nonzero remainder.
    ZPoly divide_by_variable(int i) const;            // / z_i
    ZPoly divide_by_binomial(int i, int j, bool plus) const; // / (z_i -+ z_j)

    Rat evaluate(const std::vector<Rat>& point) const;

    // Keep only terms of total degree <= cap.
    ZPoly truncate_degree(int cap) const;

    // Set every variable except z_i to 0; coefficients by power of z_i.
    std::vector<Rat> restrict_to_variable(int i, int max_deg) const;

private:
    int m_ = 0;
    std::map<Expo, Rat> terms_; // no zero coefficients stored
};

} // namespace rectadd

#endif
