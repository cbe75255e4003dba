// SPDX-License-Identifier: Apache-2.0
//
// rispolsk: link-level simulation of RIS-encoded polarization shift keying
// Copyright (C) 2026 The rispolsk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include <catch_amalgamated.hpp>

#include <rispolsk/theory.hpp>

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

using namespace rispolsk;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = std::numbers::pi;

// Composite Simpson rule on t = tan(xi); test-local oracle.
double simpson_f_eta(double gamma, int n = 200000) {
    const double a = -pi / 2 + 1e-12, b = pi / 2 - 1e-12;
    const double h = (b - a) / n;
    double sum = 0;
    for (int i = 0; i <= n; ++i) {
        const double xi = a + i * h;
        const double c = std::cos(xi);
        const double v = f_eta(std::tan(xi), gamma) / (c * c);
        sum += (i == 0 || i == n) ? v : (i % 2 ? 4 * v : 2 * v);
    }
    return sum * h / 3;
}

// Direct simulation of two consecutive noisy slant states, independent of the library simulator.
double monte_carlo_dpolsk(double gamma, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    std::bernoulli_distribution coin;
    const double a = std::sqrt(2 * gamma) / std::sqrt(2.0); // sigma^2 = 1
    using c = std::complex<double>;
    const auto s = [](c v, c h) {
        const c x = h * std::conj(v);
        return Eigen::Vector3d(std::norm(h) - std::norm(v), 2 * x.real(), -2 * x.imag());
    };
    int errors = 0;
    for (int i = 0; i < n; ++i) {
        const bool flip = coin(rng);
        const auto p = s(c(a) + c(g(rng), g(rng)), c(a) + c(g(rng), g(rng)));
        const auto q = s(c(flip ? -a : a) + c(g(rng), g(rng)), c(a) + c(g(rng), g(rng)));
        errors += (p.dot(q) < 0) != flip;
    }
    return double(errors) / n;
}

} // namespace

TEST_CASE("integrate - polynomials and smooth functions")
{
    const auto r = integrate<double>([](double x) { return x * x * x - 2 * x + 1; }, 0.0, 2.0);
    CHECK_THAT(r.value, WithinRel(2.0, 1e-14));
    CHECK(r.intervals == 1);
    CHECK_THAT(integrate<double>([](double x) { return std::sin(x); }, 0.0, pi).value, WithinRel(2.0, 1e-12));
    CHECK_THAT(integrate<double>([](double x) { return std::exp(-x * x); }, std::vector<double>{-10, 0, 10}).value,
               WithinRel(std::sqrt(pi), 1e-10));
    // Kink handled by a breakpoint.
    CHECK_THAT(integrate<double>([](double x) { return std::abs(x); }, std::vector<double>{-1, 0, 1}).value,
               WithinRel(1.0, 1e-14));
    CHECK(integrate<double>([](double) { return 1.0; }, 3.0, 3.0).value == 0.0);
}

TEST_CASE("integrate - integrable endpoint singularity converges")
{
    // Bisection depth caps how close to the singularity the rule can get.
    QuadratureSpec spec;
    spec.relative_tolerance = 1e-7;
    const auto r = integrate<double>([](double x) { return 1 / std::sqrt(x); }, 0.0, 1.0, spec);
    CHECK_THAT(r.value, WithinRel(2.0, 1e-7));
    CHECK(r.error_estimate <= 2e-7);
    CHECK_THROWS_AS(integrate<double>([](double x) { return 1 / std::sqrt(x); }, 0.0, 1.0), convergence_failure);
}

TEST_CASE("integrate - failure is reported, not hidden")
{
    QuadratureSpec tight;
    tight.max_intervals = 4;
    try {
        integrate<double>([](double x) { return std::pow(x, -0.9); }, 0.0, 1.0, tight);
        FAIL("expected convergence_failure");
    } catch (const convergence_failure& e) {
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.error_estimate() > 0);
    }
    QuadratureSpec bad;
    bad.relative_tolerance = 0;
    CHECK_THROWS_AS(integrate<double>([](double x) { return x; }, 0.0, 1.0, bad), validation_error);
    CHECK_THROWS_AS(integrate<double>([](double x) { return x; }, std::vector<double>{1.0}), domain_error);
    CHECK_THROWS_AS(integrate<double>([](double x) { return x; }, 1.0, 0.0), domain_error);
}

TEST_CASE("cpolsk_ber - closed form")
{
    CHECK(cpolsk_ber(0.0) == 0.5);
    CHECK_THAT(cpolsk_ber(1.0), WithinRel(0.183939720585721, 1e-13));
    CHECK_THAT(cpolsk_ber(10.0), WithinRel(2.26999648812424e-05, 1e-12));
    CHECK_THAT(cpolsk_ber(std::log(500.0)), WithinRel(1e-3, 1e-12));
    CHECK_THROWS_AS(cpolsk_ber(-1.0), domain_error);
    CHECK_THROWS_AS(cpolsk_ber(std::numeric_limits<double>::infinity()), domain_error);
    CHECK_THROWS_AS(cpolsk_ber(std::nan("")), domain_error);
}

TEST_CASE("acot - range and continuity through zero")
{
    CHECK_THAT(acot(0.0), WithinAbs(pi / 2, 1e-15));
    CHECK_THAT(acot(1.0), WithinAbs(pi / 4, 1e-15));
    CHECK_THAT(acot(-1.0), WithinAbs(3 * pi / 4, 1e-15));
    CHECK(acot(1e8) > 0);
    CHECK(acot(-1e8) < pi);
    CHECK(acot(1e300) >= 0);
    CHECK(acot(-1e300) <= pi);
    // No jump of pi at the origin.
    CHECK_THAT(acot(1e-12) - acot(-1e-12), WithinAbs(-2e-12, 1e-15));
}

TEST_CASE("f_eta - normalized for every SNR")
{
    for (double gamma : {0.0, 0.5, 1.0, 3.0, 8.53, 30.0}) {
        const double q = integrate<double>([&](double xi) {
                             const double c = std::cos(xi);
                             return f_eta(std::tan(xi), gamma) / (c * c);
                         },
                                           std::vector<double>{-pi / 2, 0, pi / 2})
                             .value;
        CHECK_THAT(q, WithinAbs(1.0, 1e-8));
        CHECK_THAT(simpson_f_eta(gamma), WithinAbs(1.0, 1e-6));
    }
    CHECK(f_eta(std::numeric_limits<double>::infinity(), 3.0) == 0.0);
    CHECK(f_eta(-std::numeric_limits<double>::infinity(), 3.0) == 0.0);
    CHECK(f_eta(1e200, 3.0) >= 0.0);
}

TEST_CASE("F_theta - a CDF on [0, pi]")
{
    for (double gamma : {0.0, 1.0, 8.53, 40.0}) {
        CHECK(F_theta(0.0, gamma) == 0.0);
        CHECK_THAT(F_theta(pi, gamma), WithinAbs(1.0, 1e-15));
        double prev = 0.0;
        for (int i = 1; i <= 200; ++i) {
            const double v = F_theta(pi * i / 200, gamma);
            CHECK(v >= prev - 1e-15);
            prev = v;
        }
    }
    CHECK_THROWS_AS(F_theta(-0.01, 1.0), domain_error);
    CHECK_THROWS_AS(F_theta(pi + 1e-9, 1.0), domain_error);
    CHECK_THROWS_AS(F_theta(1.0, -1.0), domain_error);
}

TEST_CASE("dpolsk_ber - frozen reference values")
{
    // Independent scipy evaluation (tests/oracles/compute_oracles.py).
    const std::vector<std::pair<double, double>> table{
        {0.0, 0.5},
        {0.5, 0.447637281377464},
        {1.0, 0.35997315297793},
        {3.0, 0.120594790014474},
        {8.53, 0.00485484755511164},
        {10.0, 0.00205646873775132},
        {30.0, 1.6927273364474e-08},
        {1.99526231496888, 0.212697748339973},
        {3.98107170553497, 0.0685837486332158},
        {7.94328234724281, 0.00683873434408516},
        {15.8489319246111, 6.71576320671397e-05},
    };
    for (const auto& [gamma, ber] : table) {
        INFO("gamma = " << gamma);
        CHECK_THAT(dpolsk_ber(gamma), WithinRel(ber, 1e-7));
    }
}

TEST_CASE("dpolsk_ber - above the coherent bound and nonincreasing")
{
    double prev = 0.5;
    for (double gamma = 0.0; gamma <= 30.0; gamma += 0.75) {
        const double d = dpolsk_ber(gamma);
        CHECK(d >= 0.0);
        CHECK(d <= 0.5);
        CHECK(d <= prev + 1e-12);
        if (gamma > 0)
            CHECK(d > cpolsk_ber(gamma));
        prev = d;
    }
}

TEST_CASE("dpolsk_ber - bracketed by direct simulation")
{
    const int n = 400000;
    const double p = dpolsk_ber(8.53);
    const double mc = monte_carlo_dpolsk(8.53, n, 77);
    const double sd = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(mc - p) <= 4 * sd);
}

TEST_CASE("dpolsk_ber - domain and tolerance handling")
{
    CHECK_THROWS_AS(dpolsk_ber(-0.1), domain_error);
    CHECK_THROWS_AS(dpolsk_ber(std::numeric_limits<double>::infinity()), domain_error);
    QuadratureSpec loose;
    loose.relative_tolerance = 1e-5;
    CHECK_THAT(dpolsk_ber(3.0, loose), WithinRel(0.120594790014474, 1e-4));
    QuadratureSpec starved;
    starved.max_intervals = 2;
    CHECK_THROWS_AS(dpolsk_ber(3.0, starved), convergence_failure);
}
