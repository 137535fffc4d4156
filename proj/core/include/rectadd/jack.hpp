#ifndef RECTADD_JACK_HPP
#define RECTADD_JACK_HPP

#include "rectadd/partition.hpp"
#include "rectadd/series.hpp"
#include "rectadd/sympoly.hpp"

#include <map>

namespace rectadd {

// Jack polynomials P_lambda(.;theta) in M variables, monomial basis.
//
// P_lambda is the monic-triangular eigenfunction of the degree-2 operator
//   E = sum_i z_i^2 d_i^2 + 2 theta sum_{i<j} (z_i^2 d_i - z_j^2 d_j)/(z_i - z_j)
// with eigenvalue sum_i [ lambda_i (lambda_i - 1) + 2 theta (M - i) lambda_i ].
// The triangular solve fills the cache one full degree at a time; after a
// call returns, the instance is immutable and safe to share read-only.
class JackTable {
public:
    JackTable(Rat theta, int num_vars);

    const Rat& theta() const { return theta_; }
    int num_vars() const { return m_; }

    // Throws singular_parameter_error if the eigen-solve hits a
    // coinciding eigenvalue (possible only for non-positive theta).
    const SymPoly& jack(const Partition& lambda);

    // Expands f in the Jack basis; keys restricted to l(lambda) <= M.
    std::map<Partition, Rat> expand_in_jack_basis(const SymPoly& f);

private:
    void compute_degree(int n);

    Rat eigenvalue(const Partition& lambda) const;
    SymPoly apply_operator(const SymPoly& f) const;

    Rat theta_;
    int m_;
    std::map<Partition, SymPoly> cache_;
    std::map<int, bool> degree_done_;
};

// P_mu(1^M; theta) = (M theta)_mu / H'(mu), exact closed form.
Rat jack_at_ones(const Partition& mu, const Rat& theta, int num_vars);

// b_lambda(theta) = H'(lambda)/H(lambda); Q_lambda = b_lambda P_lambda.
Rat dual_b(const Partition& lambda, const Rat& theta);

// Coefficients of y^{2k} in prod_i (1 - r_i y^2)^{-theta}, k <= order.
// These are Q_{(k)}(r; theta) with r the squared variables; serves as an
// independent oracle for one-row Jack polynomials.
Series onerow_Q_series(const std::vector<Rat>& r, const Rat& theta, int order);

// C^{nu,mu}_lambda(theta): P_nu P_mu = sum_lambda C P_lambda. M must be at
// least |nu| + |mu| unless allow_small_m is set (the constants are then
// still correct for the given M but no longer M-independent).
std::map<Partition, Rat> structure_constants(const Partition& nu, const Partition& mu,
                                             const Rat& theta, int num_vars,
                                             bool allow_small_m = false);

} // namespace rectadd

#endif
