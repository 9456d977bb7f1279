#include <doctest.h>

#include <cmath>
#include <set>

#include "disc/errors.hpp"
#include "disc/randover.hpp"

using namespace disc;

namespace
{

// Upper 1% points of the chi-square distribution, df = 1..10.
constexpr double kChiSquare99[] = {6.635, 9.210, 11.345, 13.277, 15.086, 16.812, 18.475, 20.090, 21.666, 23.209};

double chi_square(const std::vector<std::uint64_t>& observed, const std::vector<double>& expected, int& df)
{
    // Pool the tail until every bin expects at least five.
    std::vector<double> obs;
    std::vector<double> exp;
    double o = 0;
    double e = 0;
    for (std::size_t t = 0; t < expected.size(); ++t) {
        o += static_cast<double>(t < observed.size() ? observed[t] : 0);
        e += expected[t];
        if (e >= 5 && t + 1 < expected.size()) {
            obs.push_back(o);
            exp.push_back(e);
            o = e = 0;
        }
    }
    if (e > 0) {
        if (e < 5 && !exp.empty()) {
            obs.back() += o;
            exp.back() += e;
        } else {
            obs.push_back(o);
            exp.push_back(e);
        }
    }
    double stat = 0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        stat += (obs[i] - exp[i]) * (obs[i] - exp[i]) / exp[i];
    }
    df = static_cast<int>(obs.size()) - 1;
    return stat;
}

}  // namespace

TEST_SUITE("randover")
{
    TEST_CASE("hypergeometric pmf")
    {
        CHECK(hypergeom_pmf(17, 0, 0) == 1);
        CHECK(hypergeom_pmf(10, 2, 0) == Rational(28, 45));
        CHECK(hypergeom_pmf(10, 2, 0) + hypergeom_pmf(10, 2, 1) + hypergeom_pmf(10, 2, 2) == 1);
        CHECK_THROWS_AS(hypergeom_pmf(10, 2, 3), PreconditionError);
        CHECK_THROWS_AS(hypergeom_pmf(3, 4, 0), PreconditionError);
    }

    TEST_CASE("disjoint 2-subsets of a 10-set, counted pair by pair")
    {
        std::vector<unsigned> two;
        for (unsigned m = 0; m < 1024; ++m) {
            if (__builtin_popcount(m) == 2) {
                two.push_back(m);
            }
        }
        REQUIRE(two.size() == 45);
        std::array<int, 3> by_overlap{};
        for (const unsigned a : two) {
            for (const unsigned b : two) {
                ++by_overlap[static_cast<std::size_t>(__builtin_popcount(a & b))];
            }
        }
        CHECK(by_overlap[0] + by_overlap[1] + by_overlap[2] == 2025);
        for (std::uint64_t t = 0; t <= 2; ++t) {
            CHECK(hypergeom_pmf(10, 2, t) == Rational(by_overlap[t], 2025));
        }
        CHECK(prob_disjoint(10, 2).exact == Rational(by_overlap[0], 2025));
    }

    TEST_CASE("normalization and the disjoint probability")
    {
        for (const std::uint64_t N : {1, 2, 7, 50, 333, 1000}) {
            for (const std::uint64_t r : {0, 1, 2, 5, 17, 40}) {
                if (r > N) {
                    continue;
                }
                const OverlapLaw law = overlap_law(N, r);
                Rational total = 0;
                for (const auto& p : law.pmf) {
                    CHECK(p >= 0);
                    total += p;
                }
                CHECK(total == 1);
                CHECK(prob_disjoint(N, r).exact == law.pmf[0]);
            }
        }
        CHECK(prob_disjoint(100, 0).exact == 1);
        CHECK(prob_disjoint(9, 5).exact == 0);
        CHECK(std::isinf(static_cast<double>(prob_disjoint(9, 5).log_error)));
        const auto d = prob_disjoint(10000, 20);
        CHECK(static_cast<double>(d.log_approx) == doctest::Approx(-0.04));
        CHECK(static_cast<double>(d.log_error) < 1e-3);
    }

    TEST_CASE("total variation against closed forms")
    {
        CHECK(tv_distance(50, 0).tv == 0);
        for (const std::uint64_t N : {2, 10, 1000}) {
            const long double p = 1.0L / static_cast<long double>(N);
            const long double e = std::exp(-p);
            const long double expected =
                0.5L * (std::fabs((1 - p) - e) + std::fabs(p - p * e) + (1 - e - p * e));
            const TotalVariation tv = tv_distance(N, 1);
            CHECK(tv.tv > 0);
            CHECK(static_cast<double>(tv.tv) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
            CHECK(static_cast<double>(tv.ratio) ==
                  doctest::Approx(static_cast<double>(expected) * static_cast<double>(N * N)).epsilon(1e-12));
        }
    }

    TEST_CASE("tv decays along r = N^0.4")
    {
        Decimal previous = 1;
        for (const std::uint64_t N : {100, 1000, 10000}) {
            const TotalVariation tv = tv_distance(N, floor_power(N, 0.4));
            CHECK(tv.tv < previous);
            previous = tv.tv;
        }
    }

    TEST_CASE("floor_power at exact powers")
    {
        CHECK(floor_power(10000, 0.5) == 100);
        CHECK(floor_power(1000, 1.0 / 3.0) == 10);
        CHECK(floor_power(10000, 0.3) == 15);
        CHECK(floor_power(10000, 0.7) == 630);
        CHECK(floor_power(100, 0.4) == 6);
    }

    TEST_CASE("subsets are uniform r-subsets")
    {
        for (std::uint64_t s = 0; s < 50; ++s) {
            const auto f = sample_subset(30, 12, s);
            CHECK(f.size() == 12);
            CHECK(std::set(f.begin(), f.end()).size() == 12);
            CHECK(*std::max_element(f.begin(), f.end()) < 30);
        }
        CHECK(sample_subset(5, 5, 1).size() == 5);
        CHECK(sample_subset(30, 12, 3) == sample_subset(30, 12, 3));
        // Each element is included with probability r/N.
        std::vector<std::uint64_t> hits(10, 0);
        const std::uint64_t draws = 100000;
        for (std::uint64_t s = 0; s < draws; ++s) {
            for (const auto x : sample_subset(10, 3, s)) {
                ++hits[x];
            }
        }
        std::vector<double> expected(10, 0.3 * draws);
        double stat = 0;
        for (int i = 0; i < 10; ++i) {
            stat += (static_cast<double>(hits[i]) - expected[i]) * (static_cast<double>(hits[i]) - expected[i]) /
                    expected[i];
        }
        CHECK(stat < kChiSquare99[8]);
    }

    TEST_CASE("overlap experiments")
    {
        const ExperimentResult zero = sample_overlaps({50, 0, 100, 1, 1});
        CHECK(std::all_of(zero.overlap.begin(), zero.overlap.end(), [](auto t) { return t == 0; }));
        CHECK(std::all_of(zero.distance.begin(), zero.distance.end(), [](auto d) { return d == 0; }));

        const ExperimentConfig cfg{200, 9, 5000, 77, 1};
        const ExperimentResult a = sample_overlaps(cfg);
        const ExperimentResult b = sample_overlaps(cfg);
        CHECK(a.overlap == b.overlap);
        CHECK(a.distance == b.distance);
        ExperimentConfig threaded = cfg;
        threaded.threads = 4;
        CHECK(sample_overlaps(threaded).overlap == a.overlap);
        CHECK(a.distance_identity);
        for (std::size_t i = 0; i < a.overlap.size(); ++i) {
            CHECK(a.distance[i] == 2 * cfg.r - 2 * a.overlap[i]);
        }
        std::uint64_t total = 0;
        for (const auto h : a.histogram) {
            total += h;
        }
        CHECK(total == cfg.trials);
        CHECK_THROWS_AS(sample_overlaps({5, 6, 1, 0, 1}), PreconditionError);
    }

    TEST_CASE("overlap law fits the hypergeometric and is symmetric in F and G")
    {
        const std::uint64_t N = 60;
        const std::uint64_t r = 8;
        const std::uint64_t trials = 100000;
        const ExperimentResult res = sample_overlaps({N, r, trials, 2024, 1});
        std::vector<double> expected;
        for (const auto& p : res.exact.pmf) {
            expected.push_back(static_cast<double>(p) * static_cast<double>(trials));
        }
        int df = 0;
        const double stat = chi_square(res.histogram, expected, df);
        REQUIRE(df >= 1);
        REQUIRE(df <= 10);
        CHECK(stat < kChiSquare99[df - 1]);

        // Swap roles: draw G from the first substream and F from the second.
        std::vector<std::uint64_t> swapped(r + 1, 0);
        std::vector<std::uint64_t> forward(r + 1, 0);
        for (std::uint64_t s = 0; s < trials; ++s) {
            const auto f = sample_subset(N, r, 2 * s);
            const auto g = sample_subset(N, r, 2 * s + 1);
            const std::set<std::uint32_t> fs(f.begin(), f.end());
            const std::set<std::uint32_t> gs(g.begin(), g.end());
            const auto in_g = std::count_if(f.begin(), f.end(), [&](auto x) { return gs.contains(x); });
            const auto in_f = std::count_if(g.begin(), g.end(), [&](auto x) { return fs.contains(x); });
            CHECK(in_g == in_f);
            ++forward[static_cast<std::size_t>(in_g)];
            const auto g2 = sample_subset(N, r, 2 * s + 1 + 2 * trials);
            const auto f2 = sample_subset(N, r, 2 * s + 2 * trials);
            const std::set<std::uint32_t> f2s(f2.begin(), f2.end());
            ++swapped[static_cast<std::size_t>(
                std::count_if(g2.begin(), g2.end(), [&](auto x) { return f2s.contains(x); }))];
        }
        // Two-sample chi-square homogeneity test.
        double stat2 = 0;
        int bins = 0;
        for (std::size_t t = 0; t <= r; ++t) {
            const double total = static_cast<double>(forward[t] + swapped[t]);
            if (total < 10) {
                continue;
            }
            const double e = total / 2;
            stat2 += (static_cast<double>(forward[t]) - e) * (static_cast<double>(forward[t]) - e) / e;
            stat2 += (static_cast<double>(swapped[t]) - e) * (static_cast<double>(swapped[t]) - e) / e;
            ++bins;
        }
        REQUIRE(bins >= 2);
        CHECK(stat2 < kChiSquare99[bins - 2]);
    }

    TEST_CASE("threshold sweep")
    {
        const auto rows = threshold_sweep(10000, {0.3, 0.4, 0.5, 0.6, 0.7}, 2000, 5);
        REQUIRE(rows.size() == 5);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].exact >= rows[i - 1].exact);
        }
        CHECK(rows[2].r == 100);
        CHECK(rows[2].exact == 1 - prob_disjoint(10000, 100).exact);
        CHECK(std::fabs(rows[2].exact_value - (1 - std::exp(-1.0))) < 0.01);
        CHECK(rows[0].exact_value < 0.05);
        CHECK(rows[4].exact_value > 0.95);
        CHECK(threshold_sweep(10000, {0.3, 0.5}, 500, 9, 1)[1].empirical ==
              threshold_sweep(10000, {0.3, 0.5}, 500, 9, 3)[1].empirical);
        CHECK_THROWS_AS(threshold_sweep(100, {1.5}, 10, 0), PreconditionError);
    }

    TEST_CASE("concentration")
    {
        const auto trivial = concentration_check(100, 0, 10, 0);
        CHECK(trivial.exact == 1);
        const auto report = concentration_check(1000000, 5, 20000, 3);
        CHECK(report.exact == prob_disjoint(1000000, 5).exact);
        CHECK(report.exact_value >= 0.99);
        CHECK(report.concentrated);
        CHECK(report.distance_identity);
        CHECK(report.gap <= 3 * report.stderr_exact + 1e-12);
    }
}
