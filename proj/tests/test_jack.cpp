#include "rectadd/errors.hpp"
#include "rectadd/jack.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace rectadd;

namespace {

const std::vector<Rat> kThetaPanel = {make_rat(1, 2), Rat(1), Rat(2), make_rat(3, 7)};

// Independent Schur oracle via Jacobi-Trudi: s_lambda = det[h_{lambda_i - i + j}],
// with h_k = sum of all monomials of degree k.
SymPoly complete_h(int m, int k) {
    if (k < 0) return SymPoly::zero(m);
    SymPoly h(m);
    for (const auto& l : enumerate_partitions(k, m)) h.add_coeff(l, 1);
    return h;
}

SymPoly schur(int m, const Partition& lambda) {
    int n = lambda.length();
    if (n == 0) return SymPoly::monomial(m, Partition{});
    // Laplace expansion of the n x n determinant
    std::vector<std::vector<SymPoly>> a(n, std::vector<SymPoly>(n, SymPoly::zero(m)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = complete_h(m, lambda.parts()[i] - (i + 1) + (j + 1));
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    SymPoly det = SymPoly::zero(m);
    // permutation expansion; n <= 3 in these tests
    std::sort(cols.begin(), cols.end());
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (cols[i] > cols[j]) ++inv;
        SymPoly term = SymPoly::monomial(m, Partition{}, inv % 2 == 0 ? 1 : -1);
        for (int i = 0; i < n; ++i) term = term * a[i][cols[i]];
        det += term;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return det;
}

} // namespace

TEST_CASE("columns give elementary symmetric polynomials at every theta") {
    for (const Rat& theta : kThetaPanel)
        for (int k = 1; k <= 4; ++k)
            for (int m = k; m <= k + 2; ++m) {
                JackTable t(theta, m);
                CHECK(t.jack(Partition(std::vector<int>(k, 1))) ==
                      SymPoly::elementary(m, k));
            }
}

TEST_CASE("one-row degree two") {
    for (const Rat& theta : kThetaPanel) {
        JackTable t(theta, 2);
        SymPoly expect = SymPoly::monomial(2, Partition{2}) +
                         SymPoly::monomial(2, Partition{1, 1}, 2 * theta / (1 + theta));
        CHECK(t.jack(Partition{2}) == expect);
    }
}

TEST_CASE("theta = 1 reduces to Schur") {
    JackTable t(Rat(1), 3);
    CHECK(t.jack(Partition{2, 1}) == schur(3, Partition{2, 1}));
    // explicit coefficients: s_21 = m_21 + 2 m_111
    CHECK(t.jack(Partition{2, 1}).coeff(Partition{1, 1, 1}) == 2);
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : enumerate_partitions(n, 3)) CHECK(t.jack(l) == schur(3, l));
}

TEST_CASE("triangularity in the lexicographic order") {
    JackTable t(make_rat(3, 7), 4);
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n, 4)) {
            const SymPoly& p = t.jack(lambda);
            CHECK(p.coeff(lambda) == 1);
            for (const auto& [mu, c] : p.coeffs()) {
                CHECK(mu.size() == lambda.size());
                CHECK(mu <= lambda);
            }
        }
}

TEST_CASE("coefficients are stable in the number of variables") {
    Rat theta = make_rat(3, 7);
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n, n)) {
            JackTable small(theta, std::max(1, lambda.length()));
            JackTable big(theta, n + 1);
            const SymPoly& ps = small.jack(lambda);
            const SymPoly& pb = big.jack(lambda);
            for (const auto& [mu, c] : pb.coeffs()) {
                if (mu.length() <= small.num_vars())
                    CHECK(ps.coeff(mu) == c);
            }
            for (const auto& [mu, c] : ps.coeffs()) CHECK(pb.coeff(mu) == c);
        }
}

TEST_CASE("evaluation at all-ones matches the closed form") {
    for (const Rat& theta : kThetaPanel)
        for (int n = 0; n <= 6; ++n)
            for (const auto& mu : enumerate_partitions(n, 6))
                for (int m : {mu.length() > 0 ? mu.length() : 1, 6}) {
                    if (mu.length() > m) continue;
                    JackTable t(theta, m);
                    CHECK(t.jack(mu).evaluate_at_ones() == jack_at_ones(mu, theta, m));
                }

    CHECK(jack_at_ones(Partition{1}, make_rat(3, 7), 5) == 5);
    CHECK(jack_at_ones(Partition{1, 1}, Rat(1), 2) == 1);
    CHECK(jack_at_ones(Partition{2}, make_rat(1, 2), 2) == make_rat(8, 3));
}

TEST_CASE("dual normalization b_lambda") {
    Rat theta = make_rat(5, 3);
    CHECK(dual_b(Partition{}, theta) == 1);
    CHECK(dual_b(Partition{1}, theta) == theta);
    CHECK(dual_b(Partition{1, 1}, theta) == 2 * theta * theta / (theta + 1));
    // b = H'/H everywhere
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : enumerate_partitions(n, n)) {
            auto [h, hp] = hook_products(l, theta);
            CHECK(dual_b(l, theta) == hp / h);
        }
}

TEST_CASE("one-row Q series is a generating-function oracle for P_(k)") {
    std::vector<Rat> r{make_rat(2, 3), make_rat(1, 5)}; // squared variables
    for (const Rat& theta : {make_rat(1, 2), Rat(1), make_rat(3, 7)}) {
        Series s = onerow_Q_series(r, theta, 8);
        JackTable t(theta, 2);
        CHECK(s[0] == 1);
        for (int k = 1; k <= 8; ++k) {
            Rat via_jack = dual_b(Partition{k}, theta) * t.jack(Partition{k}).evaluate(r);
            CHECK(s[k] == via_jack);
        }
    }
    // geometric series at r = (1), theta = 1
    Series geo = onerow_Q_series({Rat(1)}, Rat(1), 6);
    for (int k = 0; k <= 6; ++k) CHECK(geo[k] == 1);
    // zero spectrum
    Series zero = onerow_Q_series({Rat(0), Rat(0)}, make_rat(1, 2), 4);
    for (int k = 1; k <= 4; ++k) CHECK(zero[k] == 0);
}

TEST_CASE("structure constants") {
    for (const Rat& theta : kThetaPanel) {
        auto c = structure_constants(Partition{1}, Partition{1}, theta, 2);
        CHECK(c.at(Partition{2}) == 1);
        CHECK(c.at(Partition{1, 1}) == 2 / (1 + theta));
    }
    auto c1 = structure_constants(Partition{1}, Partition{1}, Rat(1), 2);
    CHECK(c1.at(Partition{1, 1}) == 1); // s_1^2 = s_2 + s_11

    CHECK_THROWS_AS(structure_constants(Partition{2}, Partition{2}, Rat(1), 3),
                    validation_error);
    CHECK_NOTHROW(structure_constants(Partition{2}, Partition{2}, Rat(1), 3, true));
}

TEST_CASE("column structure constants satisfy the H-ratio identity") {
    Rat theta = make_rat(3, 7);
    for (int l = 1; l <= 6; ++l)
        for (int i = 1; i < l; ++i) {
            int j = l - i;
            Partition nu(std::vector<int>(i, 1)), mu(std::vector<int>(j, 1)),
                lam(std::vector<int>(l, 1));
            auto c = structure_constants(nu, mu, theta, l);
            Rat h_l = hook_products(lam, theta).first;
            Rat h_i = hook_products(nu, theta).first;
            Rat h_j = hook_products(mu, theta).first;
            CHECK(h_l / (h_i * h_j) * c.at(lam) ==
                  factorial(l) / (factorial(i) * factorial(j)));
        }
}

TEST_CASE("degenerate theta raises singular_parameter_error") {
    JackTable t(Rat(-1), 2); // eigenvalues of (2) and (1,1) coincide
    CHECK_THROWS_AS(t.jack(Partition{2}), singular_parameter_error);
    JackTable ok(make_rat(1, 2), 2);
    CHECK_THROWS_AS(ok.jack(Partition{1, 1, 1}), validation_error);

    // vanishing hook denominators
    CHECK_THROWS_AS(dual_b(Partition{1, 1}, Rat(-1)), singular_parameter_error);
    CHECK_THROWS_AS(jack_at_ones(Partition{1, 1}, Rat(0), 2), singular_parameter_error);
}
