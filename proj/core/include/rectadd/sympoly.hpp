#ifndef RECTADD_SYMPOLY_HPP
#define RECTADD_SYMPOLY_HPP

#include "rectadd/partition.hpp"
#include "rectadd/zpoly.hpp"

#include <map>

namespace rectadd {

// Symmetric polynomial in M variables in the monomial basis m_lambda.
class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(int num_vars) : m_(num_vars) {}

    static SymPoly zero(int num_vars) { return SymPoly(num_vars); }
    static SymPoly monomial(int num_vars, const Partition& lambda, const Rat& c = 1);
    static SymPoly elementary(int num_vars, int k); // e_k = m_{1^k}
    static SymPoly power_sum(int num_vars, int k);  // p_k = m_{(k)}

    int num_vars() const { return m_; }
    const std::map<Partition, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_coeff(const Partition& lambda, const Rat& c);
    Rat coeff(const Partition& lambda) const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const Rat& c) const;
    SymPoly operator*(const SymPoly& o) const; // via ZPoly expansion
    bool operator==(const SymPoly& o) const = default;

    Rat evaluate(const std::vector<Rat>& point) const;
    Rat evaluate_at_ones() const;

    ZPoly to_zpoly() const;
    // Same polynomial with z_i^2 substituted for z_i.
    ZPoly to_zpoly_squared_vars() const;

    // Collects the m_lambda coefficients of a symmetric ZPoly.
    static SymPoly from_zpoly(const ZPoly& p);

private:
    int m_ = 0;
    std::map<Partition, Rat> coeffs_;
};

// m_lambda as an explicit orbit sum (all distinct rearrangements).
ZPoly monomial_orbit_zpoly(int num_vars, const Partition& lambda);

// Evaluation of m_lambda at a rational point, without building the orbit.
Rat monomial_evaluate(int num_vars, const Partition& lambda, const std::vector<Rat>& point);

} // namespace rectadd

#endif
