#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>
#include <vector>

#include "phonostat/model/dirichlet.hpp"
#include "phonostat/numerics/quadrature.hpp"

using namespace phonostat::model;
namespace num = phonostat::numerics;

namespace {

// mean of the rank-r value when beta = 1: classic uniform-spacings result,
// (1/n) * sum_{k=r}^{n} 1/k
double spacings_mean(int n, int r) {
    double s = 0.0;
    for (int k = r; k <= n; ++k)
        s += 1.0 / k;
    return s / n;
}

}  // namespace

TEST_CASE("model construction validates parameters") {
    CHECK_NOTHROW(DirichletModel(2, 0.1));
    CHECK_THROWS_AS(DirichletModel(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(DirichletModel(10, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DirichletModel(10, -1.0), std::invalid_argument);
}

TEST_CASE("ranked spectrum invariants") {
    CHECK_NOTHROW(RankedSpectrum::from_sorted({0.5, 0.3, 0.2}));
    CHECK_THROWS_AS(RankedSpectrum::from_sorted({0.3, 0.5, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(RankedSpectrum::from_sorted({0.5, 0.3, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(RankedSpectrum::from_sorted({0.7, 0.4, -0.1}), std::invalid_argument);
    CHECK_THROWS_AS(RankedSpectrum::from_sorted({}), std::invalid_argument);

    RankedSpectrum s = RankedSpectrum::from_unsorted({0.2, 0.5, 0.3});
    CHECK(s.at_rank(1) == 0.5);
    CHECK(s.at_rank(3) == 0.2);
    CHECK_THROWS_AS(s.at_rank(0), std::out_of_range);
    CHECK_THROWS_AS(s.at_rank(4), std::out_of_range);
}

TEST_CASE("order-statistic density closed forms at n=2, beta=1") {
    DirichletModel m(2, 1.0);
    // rank 1 (the larger part): 2 e^-y (1 - e^-y); rank 2: 2 e^-2y
    for (double y : {0.1, 0.5, 1.0, 2.0, 4.0}) {
        CHECK(chi_r_density(m, 1, 0, y) ==
              doctest::Approx(2.0 * std::exp(-y) * (1.0 - std::exp(-y))).epsilon(1e-12));
        CHECK(chi_r_density(m, 2, 0, y) == doctest::Approx(2.0 * std::exp(-2.0 * y)).epsilon(1e-12));
    }
    CHECK(chi_r_density(m, 1, 0, 0.0) == 0.0);
    CHECK(chi_r_density(m, 2, 0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));

    // moment weighting divides by a rising factorial of n*beta: for m=1 the
    // densities above are scaled by Gamma(2)/Gamma(3) = 1/2
    CHECK(chi_r_density(m, 2, 1, 1.0) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(chi_r_density(m, 0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(chi_r_density(m, 3, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(chi_r_density(m, 1, -1, 1.0), std::domain_error);
    CHECK_THROWS_AS(chi_r_density(m, 1, 0, -0.5), std::domain_error);
}

TEST_CASE("density limit at the origin for the minimum rank") {
    CHECK(chi_r_density(DirichletModel(3, 0.5), 3, 0, 0.0) ==
          std::numeric_limits<double>::infinity());
    CHECK(chi_r_density(DirichletModel(3, 1.5), 3, 0, 0.0) == 0.0);
}

TEST_CASE("density normalizes to 1 across the parameter grid") {
    num::Tolerance tol{1e-9, 1e-30, 20000};
    for (int n : {2, 10, 44, 100}) {
        for (double beta : {0.5, 0.8, 1.0, 1.5}) {
            DirichletModel m(n, beta);
            for (int r = 1; r <= n; ++r) {
                auto f = [&m, r](double y) { return y > 0.0 ? chi_r_density(m, r, 0, y) : 0.0; };
                double mass = num::integrate_semi_infinite(f, beta - 1.0, tol).value;
                CAPTURE(n);
                CAPTURE(beta);
                CAPTURE(r);
                CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("rank means match the uniform-spacings formula at beta=1") {
    for (int n : {5, 44}) {
        DirichletModel m(n, 1.0);
        for (int r = 1; r <= n; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            CHECK(moment(m, r, 1) == doctest::Approx(spacings_mean(n, r)).epsilon(1e-9));
        }
    }
}

TEST_CASE("closed-form moments for two and three parts") {
    DirichletModel two(2, 1.0);
    CHECK(moment(two, 1, 1) == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(moment(two, 1, 2) == doctest::Approx(7.0 / 12.0).epsilon(1e-10));
    CHECK(relative_fluctuation_exact(two, 1) == doctest::Approx(1.0 / 27.0).epsilon(1e-9));

    DirichletModel three(3, 1.0);
    CHECK(moment(three, 1, 1) == doctest::Approx(11.0 / 18.0).epsilon(1e-10));
    CHECK(moment(three, 2, 1) == doctest::Approx(5.0 / 18.0).epsilon(1e-10));
    CHECK(moment(three, 3, 1) == doctest::Approx(2.0 / 18.0).epsilon(1e-10));

    CHECK_THROWS_AS(moment(two, 1, 0), std::domain_error);
    CHECK_THROWS_AS(moment(two, 0, 1), std::domain_error);
}

TEST_CASE("reference moments at n=44, beta=0.8") {
    DirichletModel m(44, 0.8);
    struct Row {
        int r;
        double m1;
        double m2;
    };
    // frozen from an independent adaptive-quadrature implementation
    const Row rows[] = {
        {1, 1.111573021932995e-01, 1.319351916035586e-02},
        {10, 3.550237733562366e-02, 1.278901035017808e-03},
        {22, 1.510443378530798e-02, 2.352632240637471e-04},
        {40, 1.790168332327464e-03, 4.038560491403570e-06},
        {44, 2.550058000823077e-04, 1.608745208080386e-07},
    };
    for (const Row& row : rows) {
        CAPTURE(row.r);
        CHECK(moment(m, row.r, 1) == doctest::Approx(row.m1).epsilon(1e-8));
        CHECK(moment(m, row.r, 2) == doctest::Approx(row.m2).epsilon(1e-8));
    }
    CHECK(moment(m, 2, 1) == doctest::Approx(8.397197774275161e-02).epsilon(1e-8));

    // single-moment spot check at small n
    CHECK(moment(DirichletModel(4, 0.8), 1, 1) ==
          doctest::Approx(5.501350360004330e-01).epsilon(1e-9));
}

TEST_CASE("relative fluctuation profile at n=44, beta=0.8") {
    DirichletModel m(44, 0.8);
    CHECK(relative_fluctuation_exact(m, 1) == doctest::Approx(0.067787067128).epsilon(1e-7));
    CHECK(relative_fluctuation_exact(m, 9) == doctest::Approx(0.014426944838).epsilon(1e-7));
    CHECK(relative_fluctuation_exact(m, 40) == doctest::Approx(0.260198190692).epsilon(1e-7));
    CHECK(relative_fluctuation_exact(m, 44) == doctest::Approx(1.473928531186).epsilon(1e-7));

    // the profile dips in the middle: interior minimum, higher at both ends
    std::vector<double> eps(44);
    for (int r = 1; r <= 44; ++r)
        eps[r - 1] = relative_fluctuation_exact(m, r);
    int argmin = static_cast<int>(std::min_element(eps.begin(), eps.end()) - eps.begin()) + 1;
    CHECK(argmin == 9);
    CHECK(eps[0] > eps[argmin - 1]);
    CHECK(eps[43] > eps[argmin - 1]);
    for (double e : eps)
        CHECK(e >= 0.0);
}

TEST_CASE("asymptotic fluctuation tracks the exact one") {
    DirichletModel big(1000, 1.0);
    double exact = relative_fluctuation_exact(big, 500);
    CHECK(exact == doctest::Approx(1.076495198509e-03).epsilon(1e-6));
    double asym = relative_fluctuation_asymptotic(big, 500);
    CHECK(std::fabs(asym - exact) / exact < 0.05);

    DirichletModel m(44, 0.8);
    for (int r : {10, 22, 30}) {
        double ex = relative_fluctuation_exact(m, r);
        double as = relative_fluctuation_asymptotic(m, r);
        CAPTURE(r);
        CHECK(std::fabs(as - ex) / ex < 0.25);
    }

    CHECK_THROWS_AS(relative_fluctuation_asymptotic(m, 0), std::domain_error);
    CHECK_THROWS_AS(relative_fluctuation_asymptotic(m, 44), std::domain_error);
}

TEST_CASE("expected spectrum is a valid ranked spectrum") {
    DirichletModel m(44, 0.8);
    RankedSpectrum spec = expected_spectrum(m);
    CHECK(spec.size() == 44);
    double sum = std::accumulate(spec.freqs().begin(), spec.freqs().end(), 0.0);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 1; i < spec.size(); ++i)
        CHECK(spec.freqs()[i] <= spec.freqs()[i - 1]);
    CHECK(spec.at_rank(1) == doctest::Approx(1.111573021932995e-01).epsilon(1e-7));
}

TEST_CASE("spectrum head falls and tail rises as beta grows") {
    // larger beta means a more homogeneous urn: smaller top frequency,
    // larger bottom frequency
    RankedSpectrum lo = expected_spectrum(DirichletModel(44, 0.5));
    RankedSpectrum hi = expected_spectrum(DirichletModel(44, 1.5));
    CHECK(lo.at_rank(1) > hi.at_rank(1));
    CHECK(lo.at_rank(44) < hi.at_rank(44));
    CHECK(lo.at_rank(1) == doctest::Approx(0.142236).epsilon(1e-4));
    CHECK(hi.at_rank(1) == doctest::Approx(0.081949).epsilon(1e-4));
}

TEST_CASE("approximate spectrum inversion") {
    // closed form at beta=1: rank r maps to ln(n/r)/n
    std::vector<double> approx = approx_spectrum(DirichletModel(100, 1.0));
    CHECK(approx[9] == doctest::Approx(std::log(10.0) / 100.0).epsilon(1e-10));
    CHECK(approx.size() == 100);
    double sum = std::accumulate(approx.begin(), approx.end(), 0.0);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    for (double f : approx)
        CHECK(f >= 0.0);

    // mid-rank agreement with the exact spacings mean is a few percent here
    double exact10 = spacings_mean(100, 10);
    CHECK(std::fabs(approx[9] - exact10) / exact10 < 0.05);
}

TEST_CASE("moment cache is consistent under concurrent access") {
    DirichletModel m(30, 0.9);
    std::vector<double> results(8 * 30);
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            for (int r = 1; r <= 30; ++r)
                results[t * 30 + (r - 1)] = moment(m, r, 1);
        });
    }
    for (auto& th : threads)
        th.join();
    for (int t = 1; t < 8; ++t)
        for (int r = 0; r < 30; ++r)
            CHECK(results[t * 30 + r] == results[r]);
}
