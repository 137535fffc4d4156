#include "rectadd/duality.hpp"
#include "rectadd/errors.hpp"
#include "rectadd/qgamma.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rectadd;

namespace {
Rat pseudo(int& state) {
    state = static_cast<int>(static_cast<long long>(state) * 48271 % 2147483647);
    return make_rat(state % 23 + 1, state % 7 + 1); // positive
}

Spectrum random_spectrum(int M, int& state) {
    std::vector<Rat> r;
    for (int i = 0; i < M; ++i) r.push_back(pseudo(state));
    std::sort(r.begin(), r.end(), std::greater<Rat>());
    return Spectrum{r};
}
} // namespace

TEST_CASE("M = 1 finite cumulant is the squared singular value") {
    Spectrum r{{make_rat(9, 4)}};
    auto fin = finite_rect_cumulants(r, 1, 3);
    CHECK(fin.k_fin.size() == 1);
    CHECK(fin.k_fin[0] == r.r[0]);

    auto rep = duality_check(r, 1, 3, 1);
    CHECK(rep.rho[0] == 2);
    CHECK(rep.matches);
}

TEST_CASE("zero spectrum vanishes on both sides") {
    Spectrum r{{Rat(0), Rat(0)}};
    auto fin = finite_rect_cumulants(r, 2, 3);
    for (const auto& k : fin.k_fin) CHECK(k == 0);
    auto rep = duality_check(r, 2, 3, 2);
    CHECK(rep.matches);
    for (const auto& k : rep.k_qgamma) CHECK(k == 0);
}

TEST_CASE("frozen duality constants at (2,3)") {
    Spectrum r{{Rat(1), make_rat(1, 2)}};
    auto rep = duality_check(r, 2, 3, 2);
    CHECK(rep.rho[0] == 2);
    CHECK(rep.rho[1] == 8);
    CHECK(rep.matches);
}

TEST_CASE("ratio is independent of the spectrum") {
    int state = 2024;
    for (auto [M, N] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 4}}) {
        for (int rep = 0; rep < 3; ++rep) {
            Spectrum r = random_spectrum(M, state);
            auto report = duality_check(r, M, N, M);
            CHECK(report.matches);
            for (int l = 1; l <= M; ++l)
                CHECK(report.rho[l - 1] == rat_pow(Rat(2), 2 * l - 1));
        }
    }
}

TEST_CASE("R-transform linearizes the expected characteristic polynomial") {
    int state = 555;
    for (auto [M, N] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}}) {
        Spectrum ra = random_spectrum(M, state), rb = random_spectrum(M, state);
        std::vector<Rat> a_conv = expected_elementary(ra, rb, M, N);
        auto r_conv = finite_rect_cumulants_from_elementary(a_conv, M, N);
        auto r_a = finite_rect_cumulants(ra, M, N);
        auto r_b = finite_rect_cumulants(rb, M, N);
        for (int l = 0; l < M; ++l)
            CHECK(r_conv.k_fin[l] == r_a.k_fin[l] + r_b.k_fin[l]);
    }
}

TEST_CASE("validation") {
    Spectrum r{{Rat(1), make_rat(1, 2)}};
    CHECK_THROWS_AS(duality_check(r, 2, 3, 3), validation_error);
    CHECK_THROWS_AS(finite_rect_cumulants(r, 2, 1), validation_error);
}
