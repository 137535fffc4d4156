#include "rectadd/duality.hpp"
#include "rectadd/errors.hpp"
#include "rectadd/jack.hpp"
#include "rectadd/montecarlo.hpp"
#include "rectadd/qgamma.hpp"
#include "rectadd/rectconv.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace rectadd;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitDegenerate = 3;

Partition parse_partition(const std::string& csv) {
    if (csv.empty() || csv == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw validation_error("malformed partition entry '" + item + "'");
        }
    }
    try {
        return Partition(parts);
    } catch (const std::logic_error&) {
        throw validation_error("partition parts must be weakly decreasing and nonnegative");
    }
}

json partition_to_json(const Partition& p) {
    json a = json::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

json rats_to_json(const std::vector<Rat>& xs) {
    json a = json::array();
    for (const Rat& x : xs) a.push_back(rat_str(x));
    return a;
}

Spectrum parse_spectrum(const std::string& csv, int m) {
    Spectrum s{parse_rat_list(csv)};
    validate(s, m);
    return s;
}

struct RouteDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run(int argc, char** argv) {
    CLI::App app{"Exact singular-value statistics of rectangular matrix addition "
                 "at general inverse temperature, with the q-gamma cumulant calculus"};
    app.require_subcommand(1);

    // ---- jack ----
    auto* jack_cmd = app.add_subcommand("jack", "Jack polynomial in the monomial basis");
    std::string jack_lambda, jack_theta;
    int jack_nvars = 0;
    jack_cmd->add_option("--lambda", jack_lambda, "partition, e.g. 2,1")->required();
    jack_cmd->add_option("--theta", jack_theta, "rational theta > 0")->required();
    jack_cmd->add_option("--nvars", jack_nvars, "number of variables")->required();

    // ---- conv-moment ----
    auto* conv_cmd = app.add_subcommand(
        "conv-moment", "E[P_lambda(c^2; theta)] for the rectangular sum");
    std::string conv_lambda, conv_ra, conv_rb, conv_theta;
    int conv_m = 0, conv_n = 0;
    conv_cmd->add_option("--lambda", conv_lambda)->required();
    conv_cmd->add_option("--ra", conv_ra, "squared singular values of a")->required();
    conv_cmd->add_option("--rb", conv_rb, "squared singular values of b")->required();
    conv_cmd->add_option("--m", conv_m)->required();
    conv_cmd->add_option("--n", conv_n)->required();
    conv_cmd->add_option("--theta", conv_theta)->required();

    // ---- charpoly ----
    auto* char_cmd =
        app.add_subcommand("charpoly", "expected characteristic polynomial of CC*");
    std::string char_ra, char_rb;
    int char_m = 0, char_n = 0;
    char_cmd->add_option("--ra", char_ra)->required();
    char_cmd->add_option("--rb", char_rb)->required();
    char_cmd->add_option("--m", char_m)->required();
    char_cmd->add_option("--n", char_n)->required();

    // ---- k2m / m2k ----
    auto* k2m_cmd = app.add_subcommand("k2m", "q-gamma cumulants to moments");
    auto* m2k_cmd = app.add_subcommand("m2k", "q-gamma moments to cumulants");
    std::string tr_q, tr_gamma, tr_route = "all", tr_k, tr_m;
    int tr_order = 0;
    for (auto* cmd : {k2m_cmd, m2k_cmd}) {
        cmd->add_option("--q", tr_q)->required();
        cmd->add_option("--gamma", tr_gamma)->required();
        cmd->add_option("--order", tr_order, "number of even orders K (through m_2K)")
            ->required();
        cmd->add_option("--route", tr_route, "operator|partition|genfun|all");
    }
    k2m_cmd->add_option("--k", tr_k, "even cumulants k_2,k_4,...")->required();
    m2k_cmd->add_option("--m", tr_m, "even moments m_2,m_4,...")->required();

    // ---- convolve ----
    auto* convolve_cmd = app.add_subcommand("convolve", "q-gamma convolution of moments");
    std::string cv_ma, cv_mb, cv_q, cv_gamma;
    int cv_order = 0;
    convolve_cmd->add_option("--ma", cv_ma)->required();
    convolve_cmd->add_option("--mb", cv_mb)->required();
    convolve_cmd->add_option("--q", cv_q)->required();
    convolve_cmd->add_option("--gamma", cv_gamma)->required();
    convolve_cmd->add_option("--order", cv_order)->required();

    // ---- laguerre ----
    auto* lag_cmd =
        app.add_subcommand("laguerre", "moments of the high-temperature Laguerre law");
    std::string lag_q, lag_gamma;
    int lag_order = 0;
    lag_cmd->add_option("--q", lag_q)->required();
    lag_cmd->add_option("--gamma", lag_gamma)->required();
    lag_cmd->add_option("--order", lag_order)->required();

    // ---- duality ----
    auto* dual_cmd =
        app.add_subcommand("duality", "finite rectangular cumulants vs q-gamma cumulants");
    std::string dual_r;
    int dual_m = 0, dual_n = 0, dual_order = 0;
    dual_cmd->add_option("--r", dual_r, "squared singular values")->required();
    dual_cmd->add_option("--m", dual_m)->required();
    dual_cmd->add_option("--n", dual_n)->required();
    dual_cmd->add_option("--order", dual_order)->required();

    // ---- mc-verify ----
    auto* mc_cmd = app.add_subcommand("mc-verify", "Monte Carlo check against exact moments");
    std::string mc_config;
    std::uint64_t mc_seed = 0;
    mc_cmd->add_option("--config", mc_config, "JSON config file")->required();
    auto* seed_opt = mc_cmd->add_option("--seed", mc_seed, "override the config seed");

    CLI11_PARSE(app, argc, argv);
    bool mc_seed_set = seed_opt->count() > 0;

    json out;

    if (*jack_cmd) {
        Partition lambda = parse_partition(jack_lambda);
        Rat theta = parse_rat(jack_theta);
        if (jack_nvars < 1) throw validation_error("--nvars must be >= 1");
        if (lambda.length() > jack_nvars)
            throw validation_error("l(lambda) exceeds --nvars");
        JackTable table(theta, jack_nvars);
        const SymPoly& p = table.jack(lambda);
        json monos = json::array();
        for (const auto& [mu, c] : p.coeffs())
            monos.push_back({{"partition", partition_to_json(mu)}, {"coeff", rat_str(c)}});
        out = {{"lambda", partition_to_json(lambda)},
               {"theta", rat_str(theta)},
               {"nvars", jack_nvars},
               {"monomials", monos}};
    } else if (*conv_cmd) {
        BetaParams p{conv_m, conv_n, parse_rat(conv_theta)};
        validate(p);
        Partition lambda = parse_partition(conv_lambda);
        Spectrum ra = parse_spectrum(conv_ra, conv_m), rb = parse_spectrum(conv_rb, conv_m);
        Rat v = conv_jack_moment(lambda, ra, rb, p);
        out = {{"lambda", partition_to_json(lambda)},
               {"m", conv_m},
               {"n", conv_n},
               {"theta", rat_str(p.theta)},
               {"value", rat_str(v)}};
    } else if (*char_cmd) {
        if (char_m < 1 || char_m > char_n)
            throw validation_error("charpoly wants 1 <= M <= N");
        Spectrum ra = parse_spectrum(char_ra, char_m), rb = parse_spectrum(char_rb, char_m);
        CharPoly cp = rect_charpoly(ra, rb, char_m, char_n);
        std::string pretty;
        for (int l = 0; l <= cp.M; ++l) {
            const Rat& c = cp.coeffs[l];
            if (c == 0) continue;
            if (!pretty.empty())
                pretty += c > 0 ? " + " : " - ";
            else if (c < 0)
                pretty += "-";
            Rat mag = rat_abs(c);
            int pw = cp.M - l;
            if (pw == 0) {
                pretty += rat_str(mag);
            } else {
                if (mag != 1) pretty += rat_str(mag) + "*";
                pretty += "z^" + std::to_string(pw);
            }
        }
        if (pretty.empty()) pretty = "0";
        out = {{"m", char_m},
               {"n", char_n},
               {"coeffs", rats_to_json(cp.coeffs)},
               {"pretty", pretty}};
    } else if (*k2m_cmd) {
        if (tr_order < 1) throw validation_error("--order must be >= 1");
        HTParams p{parse_rat(tr_q), parse_rat(tr_gamma)};
        CumulantSeq k{parse_rat_list(tr_k)};
        if (k.orders() < tr_order)
            throw validation_error("--k must supply cumulants through order 2K");
        MomentSeq m;
        if (tr_route == "operator") {
            m = k2m_operator(k, p, tr_order);
        } else if (tr_route == "partition") {
            m = k2m_partitions(k, p, tr_order);
        } else if (tr_route == "genfun") {
            m = k2m_genfun(k, p, tr_order);
        } else if (tr_route == "all") {
            m = k2m_operator(k, p, tr_order);
            MomentSeq m2 = k2m_partitions(k, p, tr_order);
            MomentSeq m3 = k2m_genfun(k, p, tr_order);
            if (m.m != m2.m || m.m != m3.m) throw RouteDisagreement("k2m routes disagree");
        } else {
            throw validation_error("--route must be operator|partition|genfun|all");
        }
        out = {{"q", rat_str(p.q)},
               {"gamma", rat_str(p.gamma)},
               {"route", tr_route},
               {"moments", rats_to_json(m.m)}};
    } else if (*m2k_cmd) {
        if (tr_order < 1) throw validation_error("--order must be >= 1");
        HTParams p{parse_rat(tr_q), parse_rat(tr_gamma)};
        MomentSeq m{parse_rat_list(tr_m)};
        if (m.orders() < tr_order)
            throw validation_error("--m must supply moments through order 2K");
        CumulantSeq k;
        if (tr_route == "partition" || tr_route == "operator") {
            // the triangular inversion inverts every k2m route at once
            k = m2k(m, p, tr_order);
        } else if (tr_route == "genfun") {
            k = m2k_genfun(m, p, tr_order);
        } else if (tr_route == "all") {
            k = m2k(m, p, tr_order);
            CumulantSeq k2 = m2k_genfun(m, p, tr_order);
            if (k.k != k2.k) throw RouteDisagreement("m2k routes disagree");
        } else {
            throw validation_error("--route must be operator|partition|genfun|all");
        }
        out = {{"q", rat_str(p.q)},
               {"gamma", rat_str(p.gamma)},
               {"route", tr_route},
               {"cumulants", rats_to_json(k.k)}};
    } else if (*convolve_cmd) {
        if (cv_order < 1) throw validation_error("--order must be >= 1");
        HTParams p{parse_rat(cv_q), parse_rat(cv_gamma)};
        MomentSeq ma{parse_rat_list(cv_ma)}, mb{parse_rat_list(cv_mb)};
        if (ma.orders() < cv_order || mb.orders() < cv_order)
            throw validation_error("moment lists must reach --order");
        MomentSeq mc_seq = qgamma_convolve(ma, mb, p, cv_order);
        out = {{"q", rat_str(p.q)},
               {"gamma", rat_str(p.gamma)},
               {"moments", rats_to_json(mc_seq.m)}};
    } else if (*lag_cmd) {
        if (lag_order < 1) throw validation_error("--order must be >= 1");
        HTParams p{parse_rat(lag_q), parse_rat(lag_gamma)};
        MomentSeq m = laguerre_moments(p, lag_order);
        out = {{"q", rat_str(p.q)},
               {"gamma", rat_str(p.gamma)},
               {"moments", rats_to_json(m.m)}};
    } else if (*dual_cmd) {
        if (dual_order < 1) throw validation_error("--order must be >= 1");
        if (dual_m < 1 || dual_m > dual_n)
            throw validation_error("duality wants 1 <= M <= N");
        Spectrum r = parse_spectrum(dual_r, dual_m);
        DualityReport rep = duality_check(r, dual_m, dual_n, dual_order);
        out = {{"m", rep.M},
               {"n", rep.N},
               {"k_fin", rats_to_json(rep.k_fin)},
               {"k_qgamma", rats_to_json(rep.k_qgamma)},
               {"rho", rats_to_json(rep.rho)},
               {"expected", rats_to_json(rep.expected)},
               {"matches", rep.matches}};
        std::cout << out.dump() << "\n";
        return rep.matches ? 0 : kExitDegenerate;
    } else if (*mc_cmd) {
        std::ifstream in(mc_config);
        if (!in) throw validation_error("cannot open config file '" + mc_config + "'");
        json cfg_json;
        try {
            in >> cfg_json;
        } catch (const json::exception& e) {
            throw validation_error(std::string("config parse error: ") + e.what());
        }
        mc::SampleConfig cfg;
        std::vector<Rat> spec_a_sq, spec_b_sq;
        std::vector<Partition> stats;
        try {
            cfg.M = cfg_json.at("m").get<int>();
            cfg.N = cfg_json.at("n").get<int>();
            std::string tc = cfg_json.at("theta_case").get<std::string>();
            if (tc == "half")
                cfg.theta_case = mc::ThetaCase::half;
            else if (tc == "one")
                cfg.theta_case = mc::ThetaCase::one;
            else
                throw validation_error("theta_case must be 'half' or 'one'");
            auto read_spectrum = [&](const char* key, std::vector<double>& dst,
                                     std::vector<Rat>& sq) {
                for (const auto& v : cfg_json.at(key)) {
                    Rat x = v.is_string() ? parse_rat(v.get<std::string>())
                                          : Rat(v.get<double>());
                    if (x < 0) throw validation_error("singular values must be >= 0");
                    dst.push_back(rat_double(x));
                    sq.push_back(x * x);
                }
            };
            read_spectrum("spectra_a", cfg.spectraA, spec_a_sq);
            read_spectrum("spectra_b", cfg.spectraB, spec_b_sq);
            cfg.samples = cfg_json.at("samples").get<long>();
            cfg.seed = cfg_json.at("seed").get<std::uint64_t>();
            if (mc_seed_set) cfg.seed = mc_seed;
            if (cfg_json.contains("statistics")) {
                for (const auto& s : cfg_json.at("statistics")) {
                    std::vector<int> parts;
                    for (const auto& x : s) parts.push_back(x.get<int>());
                    stats.emplace_back(parts);
                }
            } else {
                stats = {Partition{1}, Partition{2}};
            }
        } catch (const json::exception& e) {
            throw validation_error(std::string("config field error: ") + e.what());
        }
        std::sort(spec_a_sq.begin(), spec_a_sq.end(), std::greater<Rat>());
        std::sort(spec_b_sq.begin(), spec_b_sq.end(), std::greater<Rat>());
        std::sort(cfg.spectraA.begin(), cfg.spectraA.end(), std::greater<double>());
        std::sort(cfg.spectraB.begin(), cfg.spectraB.end(), std::greater<double>());

        Rat theta = cfg.theta_case == mc::ThetaCase::half ? make_rat(1, 2) : Rat(1);
        BetaParams bp{cfg.M, cfg.N, theta};
        auto estimates = mc::sample_sum_moments(cfg, stats);
        json arr = json::array();
        for (size_t i = 0; i < stats.size(); ++i) {
            Rat exact =
                conv_jack_moment(stats[i], Spectrum{spec_a_sq}, Spectrum{spec_b_sq}, bp);
            arr.push_back(json::parse(mc::report_json(estimates[i], exact, cfg)));
        }
        std::cout << arr.dump() << "\n";
        return 0;
    }

    std::cout << out.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const RouteDisagreement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const degenerate_parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const singular_parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
