#ifndef RECTADD_MONTECARLO_HPP
#define RECTADD_MONTECARLO_HPP

#include "rectadd/partition.hpp"
#include "rectadd/rational.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace rectadd::mc {

enum class ThetaCase { half, one }; // real (beta = 1) or complex (beta = 2)

struct SampleConfig {
    int M = 1;
    int N = 1;
    ThetaCase theta_case = ThetaCase::one;
    std::vector<double> spectraA; // singular values, length M
    std::vector<double> spectraB;
    long samples = 1;
    std::uint64_t seed = 0;
    // Test hook: left-multiply Lambda_a by a fixed unitary before summing;
    // Haar invariance makes all estimates distribution-identical.
    bool pre_rotate_a = false;
};

struct MomentEstimate {
    Partition statistic;
    double mean = 0.0;
    double stderr_ = 0.0; // sample standard deviation / sqrt(n)
    long n = 0;
    long rejected = 0; // SVD non-convergence rejections
};

// Deterministic per-sample RNG stream: splitmix64 seeded from (seed, index).
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t index);
    std::uint64_t next_u64();
    double next_uniform(); // (0, 1]
    double next_gaussian();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

using CMat = std::vector<std::complex<double>>; // row-major

// Haar-distributed square matrix: QR of a Ginibre matrix with the R
// diagonal forced real positive. Real orthogonal for half, unitary for one.
CMat haar_factor(int n, ThetaCase theta_case, Rng& rng);

// Singular values of an M x N (M <= N) matrix by one-sided Jacobi on the
// columns of the conjugate transpose. Returns false if the sweep budget
// is exhausted before convergence.
bool jacobi_singular_values(const CMat& a, int M, int N, std::vector<double>& out);

// Empirical E[P_lambda(c^2; theta)] with standard errors for
// c = U1 Lambda_a V1 + U2 Lambda_b V2. Embarrassingly parallel over
// samples; the reduction is block-ordered so results are bit-identical
// for a fixed (seed, samples) regardless of thread count.
std::vector<MomentEstimate> sample_sum_moments(const SampleConfig& cfg,
                                               const std::vector<Partition>& statistics);

// (empirical - exact) / stderr for one statistic.
double verify_against_exact(const SampleConfig& cfg, const Partition& lambda,
                            const Rat& exact);

// {statistic, empirical, stderr, exact, z_score, samples, seed}
std::string report_json(const MomentEstimate& est, const Rat& exact, const SampleConfig& cfg);

} // namespace rectadd::mc

#endif
