#include "rectadd/montecarlo.hpp"

#include "rectadd/errors.hpp"
#include "rectadd/jack.hpp"
#include "rectadd/sympoly.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <thread>

namespace rectadd::mc {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr int kJacobiSweepBudget = 30;
constexpr long kBlockSize = 4096;

std::uint64_t splitmix64_step(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t index) {
    // Stream seed = splitmix64 of the user seed, perturbed by the index.
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64_step(s);
    s = a ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    state_ = splitmix64_step(s);
}

std::uint64_t Rng::next_u64() {
    return splitmix64_step(state_);
}

double Rng::next_uniform() {
    return ((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = next_uniform();
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

namespace {

using Cpx = std::complex<double>;

inline Cpx& at(CMat& m, int cols, int i, int j) { return m[i * cols + j]; }
inline const Cpx& at(const CMat& m, int cols, int i, int j) { return m[i * cols + j]; }

CMat ginibre(int n, ThetaCase tc, Rng& rng) {
    CMat g(n * n);
    for (auto& x : g) {
        double re = rng.next_gaussian();
        double im = tc == ThetaCase::one ? rng.next_gaussian() : 0.0;
        x = Cpx(re, im);
    }
    return g;
}

CMat matmul_square(const CMat& a, const CMat& b, int n) {
    CMat c(n * n, Cpx(0, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                c[i * n + j] += a[i * n + k] * b[k * n + j];
    return c;
}

} // namespace

CMat haar_factor(int n, ThetaCase tc, Rng& rng) {
    CMat a = ginibre(n, tc, rng);
    // Modified Gram-Schmidt on columns, one re-orthogonalization pass;
    // positive normalizers give the unique QR with real positive R
    // diagonal, whose Q factor is Haar.
    for (int j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                Cpx proj = 0;
                for (int i = 0; i < n; ++i) proj += std::conj(at(a, n, i, k)) * at(a, n, i, j);
                for (int i = 0; i < n; ++i) at(a, n, i, j) -= proj * at(a, n, i, k);
            }
        }
        double norm = 0;
        for (int i = 0; i < n; ++i) norm += std::norm(at(a, n, i, j));
        norm = std::sqrt(norm);
        RECTADD_CHECK(norm > 0, "Ginibre column collapsed");
        for (int i = 0; i < n; ++i) at(a, n, i, j) /= norm;
    }
    return a;
}

bool jacobi_singular_values(const CMat& a, int M, int N, std::vector<double>& out) {
    // Columns of X = A^H; orthogonalize pairs until the Gram matrix is
    // diagonal, then singular values are the column norms.
    std::vector<std::vector<Cpx>> col(M, std::vector<Cpx>(N));
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < N; ++j) col[i][j] = std::conj(at(a, N, i, j));

    const double tol = 1e-14;
    bool converged = false;
    for (int sweep = 0; sweep < kJacobiSweepBudget && !converged; ++sweep) {
        converged = true;
        for (int p = 0; p < M; ++p)
            for (int q = p + 1; q < M; ++q) {
                double alpha = 0, beta = 0;
                Cpx g = 0;
                for (int i = 0; i < N; ++i) {
                    alpha += std::norm(col[p][i]);
                    beta += std::norm(col[q][i]);
                    g += std::conj(col[p][i]) * col[q][i];
                }
                double gmag = std::abs(g);
                if (gmag <= tol * std::sqrt(alpha * beta) || gmag == 0.0) continue;
                converged = false;
                Cpx phase = g / gmag;
                double tau = (beta - alpha) / (2.0 * gmag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (int i = 0; i < N; ++i) {
                    Cpx u = col[p][i], v = col[q][i];
                    col[p][i] = c * u - s * std::conj(phase) * v;
                    col[q][i] = s * phase * u + c * v;
                }
            }
    }
    if (!converged) return false;
    out.resize(M);
    for (int p = 0; p < M; ++p) {
        double norm = 0;
        for (int i = 0; i < N; ++i) norm += std::norm(col[p][i]);
        out[p] = std::sqrt(norm);
    }
    std::sort(out.begin(), out.end(), std::greater<double>());
    return true;
}

namespace {

// Monomial expansion of P_lambda with double coefficients, for fast
// evaluation inside the sampling loop.
struct StatEvaluator {
    std::vector<std::pair<Partition, double>> terms;

    static StatEvaluator build(const Partition& lambda, const Rat& theta, int M) {
        JackTable table(theta, M);
        StatEvaluator ev;
        for (const auto& [mu, c] : table.jack(lambda).coeffs())
            ev.terms.emplace_back(mu, rat_double(c));
        return ev;
    }

    double eval(const std::vector<double>& point) const {
        int m = static_cast<int>(point.size());
        double acc = 0;
        std::vector<int> expo(m);
        for (const auto& [mu, c] : terms) {
            std::fill(expo.begin(), expo.end(), 0);
            for (int i = 0; i < mu.length(); ++i) expo[i] = mu.parts()[i];
            std::sort(expo.begin(), expo.end());
            double orbit = 0;
            do {
                double t = 1;
                for (int i = 0; i < m; ++i)
                    for (int e = 0; e < expo[i]; ++e) t *= point[i];
                orbit += t;
            } while (std::next_permutation(expo.begin(), expo.end()));
            acc += c * orbit;
        }
        return acc;
    }
};

struct BlockSums {
    std::vector<double> sum;
    std::vector<double> sumsq;
    long n = 0;
    long rejected = 0;
};

void validate_config(const SampleConfig& cfg) {
    if (cfg.M < 1 || cfg.M > cfg.N) throw validation_error("SampleConfig wants 1 <= M <= N");
    if (cfg.samples < 1) throw validation_error("SampleConfig wants samples >= 1");
    if (static_cast<int>(cfg.spectraA.size()) != cfg.M ||
        static_cast<int>(cfg.spectraB.size()) != cfg.M)
        throw validation_error("SampleConfig spectra must have length M");
}

} // namespace

std::vector<MomentEstimate> sample_sum_moments(const SampleConfig& cfg,
                                               const std::vector<Partition>& statistics) {
    validate_config(cfg);
    for (const auto& l : statistics)
        if (l.size() > 4 || l.length() > cfg.M)
            throw validation_error("statistics are partitions with |lambda| <= 4, l(lambda) <= M");

    Rat theta = cfg.theta_case == ThetaCase::half ? make_rat(1, 2) : Rat(1);
    std::vector<StatEvaluator> evals;
    evals.reserve(statistics.size());
    for (const auto& l : statistics) evals.push_back(StatEvaluator::build(l, theta, cfg.M));

    const int M = cfg.M, N = cfg.N;
    CMat rotate_a;
    if (cfg.pre_rotate_a) {
        Rng fixed(0x5eedf1caU, 0);
        rotate_a = haar_factor(M, cfg.theta_case, fixed);
    }

    long nblocks = (cfg.samples + kBlockSize - 1) / kBlockSize;
    std::vector<BlockSums> blocks(nblocks);
    std::atomic<long> next_block{0};

    auto worker = [&]() {
        std::vector<double> c2(M), sv;
        std::vector<double> vals(statistics.size());
        for (;;) {
            long b = next_block.fetch_add(1);
            if (b >= nblocks) break;
            BlockSums bs;
            bs.sum.assign(statistics.size(), 0.0);
            bs.sumsq.assign(statistics.size(), 0.0);
            long lo = b * kBlockSize;
            long hi = std::min(cfg.samples, lo + kBlockSize);
            for (long idx = lo; idx < hi; ++idx) {
                Rng rng(cfg.seed, static_cast<std::uint64_t>(idx));
                CMat u1 = haar_factor(M, cfg.theta_case, rng);
                CMat v1 = haar_factor(N, cfg.theta_case, rng);
                CMat u2 = haar_factor(M, cfg.theta_case, rng);
                CMat v2 = haar_factor(N, cfg.theta_case, rng);
                if (cfg.pre_rotate_a) u1 = matmul_square(u1, rotate_a, M);
                // C = U1 La V1 + U2 Lb V2, with La = diag(a) M x N:
                // (U La V)_{ij} = sum_k U_{ik} a_k V_{kj}.
                CMat c(M * N, Cpx(0, 0));
                for (int i = 0; i < M; ++i)
                    for (int k = 0; k < M; ++k) {
                        Cpx ua = at(u1, M, i, k) * cfg.spectraA[k];
                        Cpx ub = at(u2, M, i, k) * cfg.spectraB[k];
                        for (int j = 0; j < N; ++j)
                            at(c, N, i, j) += ua * at(v1, N, k, j) + ub * at(v2, N, k, j);
                    }
                if (!jacobi_singular_values(c, M, N, sv)) {
                    ++bs.rejected;
                    continue;
                }
                for (int i = 0; i < M; ++i) c2[i] = sv[i] * sv[i];
                for (size_t s = 0; s < statistics.size(); ++s) {
                    vals[s] = evals[s].eval(c2);
                    bs.sum[s] += vals[s];
                    bs.sumsq[s] += vals[s] * vals[s];
                }
                ++bs.n;
            }
            blocks[b] = std::move(bs);
        }
    };

    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned nthreads = static_cast<unsigned>(std::min<long>(hw, nblocks));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<MomentEstimate> out(statistics.size());
    for (size_t s = 0; s < statistics.size(); ++s) {
        double sum = 0, sumsq = 0;
        long n = 0, rejected = 0;
        for (const auto& bs : blocks) {
            if (!bs.sum.empty()) {
                sum += bs.sum[s];
                sumsq += bs.sumsq[s];
            }
            n += bs.n;
            rejected += bs.rejected;
        }
        RECTADD_CHECK(n > 0, "all samples rejected");
        double mean = sum / static_cast<double>(n);
        double var = n > 1 ? std::max(0.0, (sumsq - sum * mean) / (n - 1)) : 0.0;
        out[s].statistic = statistics[s];
        out[s].mean = mean;
        out[s].stderr_ = std::sqrt(var / static_cast<double>(n));
        out[s].n = n;
        out[s].rejected = rejected;
    }
    return out;
}

double verify_against_exact(const SampleConfig& cfg, const Partition& lambda,
                            const Rat& exact) {
    auto est = sample_sum_moments(cfg, {lambda});
    double diff = est[0].mean - rat_double(exact);
    if (est[0].stderr_ == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / est[0].stderr_;
}

std::string report_json(const MomentEstimate& est, const Rat& exact, const SampleConfig& cfg) {
    double z;
    double diff = est.mean - rat_double(exact);
    if (est.stderr_ == 0.0)
        z = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    else
        z = diff / est.stderr_;
    char buf[512];
    std::string stat = "[";
    for (int i = 0; i < est.statistic.length(); ++i) {
        if (i) stat += ",";
        stat += std::to_string(est.statistic.parts()[i]);
    }
    stat += "]";
    std::snprintf(buf, sizeof(buf),
                  "{\"statistic\":%s,\"empirical\":%.17g,\"stderr\":%.17g,\"exact\":\"%s\","
                  "\"z_score\":%.17g,\"samples\":%ld,\"seed\":%llu}",
                  stat.c_str(), est.mean, est.stderr_, rat_str(exact).c_str(), z, est.n,
                  static_cast<unsigned long long>(cfg.seed));
    return std::string(buf);
}

} // namespace rectadd::mc
