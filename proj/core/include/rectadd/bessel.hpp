#ifndef RECTADD_BESSEL_HPP
#define RECTADD_BESSEL_HPP

#include "rectadd/rational.hpp"
#include "rectadd/zpoly.hpp"

#include <vector>

namespace rectadd {

// Truncation of the type BC Bessel function
//   B(a; z; theta, N) = sum_mu [prod_i 1/(theta(N-i+1))_{mu_i}] (1/H(mu))
//                       4^{-|mu|} P_mu(a^2) P_mu(z^2) / P_mu(1^M)
// through |mu| <= order. The polynomial is symmetric, even in each z_i,
// and has constant term 1.
struct BesselTrunc {
    int M = 0;
    int N = 0;
    Rat theta;
    std::vector<Rat> spectrum_sq; // a_1^2 >= ... >= a_M^2 >= 0
    int order = 0;
    ZPoly poly;
};

BesselTrunc bessel_trunc(const std::vector<Rat>& spectrum_sq, const Rat& theta, int M,
                         int N, int order);

// Finitely supported measure on spectra; weights sum to 1.
struct AtomicMeasure {
    struct Atom {
        std::vector<Rat> spectrum_sq;
        Rat weight;
    };
    std::vector<Atom> atoms;
};

// Bessel generating function of an atomic measure: the weighted sum of
// truncated Bessel polynomials.
ZPoly bgf(const AtomicMeasure& measure, const Rat& theta, int M, int N, int order);

// k_l = (d^l/dz_1^l) ln G |_0 / (l-1)!, l = 1..order, via a truncated
// series log of the single-variable restriction. G must have constant
// term 1.
std::vector<Rat> log_derivative_cumulants(const ZPoly& g, int order);

struct HighTempGap {
    Rat lhs; // truncated B(a; N theta z; theta, N) at the point
    Rat rhs; // symmetrized truncated exponential
    Rat gap; // |lhs - rhs|
};

// Compares the truncated Bessel kernel at the rescaled argument
// 2 sqrt(N theta) z (the high-temperature normalization; the rescaling is
// applied to the squared variables so everything stays rational) with
// (1/M!) sum_sigma prod_i exp(a_i^2 z_sigma(i)^2), both truncated at
// total z-degree 2*order.
HighTempGap hightemp_limit_check(const std::vector<Rat>& spectrum_sq, int M, int N,
                                 const Rat& theta, const std::vector<Rat>& z_points,
                                 int order);

} // namespace rectadd

#endif
