#include "disc/randover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "disc/errors.hpp"
#include "disc/rng.hpp"

namespace disc
{

namespace
{

constexpr std::uint64_t kMaxSampledPopulation = 100'000'000;

// Partial Fisher-Yates over a persistent identity permutation; swaps are undone
// after each draw, so every draw costs O(r) and depends only on its RNG.
class SubsetSampler
{
public:
    explicit SubsetSampler(std::uint64_t N) : pool_(N)
    {
        for (std::uint64_t i = 0; i < N; ++i) {
            pool_[i] = static_cast<std::uint32_t>(i);
        }
    }

    void draw(SplitMix64& rng, std::uint64_t r, std::vector<std::uint32_t>& out)
    {
        const std::uint64_t N = pool_.size();
        swaps_.clear();
        out.clear();
        for (std::uint64_t i = 0; i < r; ++i) {
            const std::uint64_t j = i + rng.below(N - i);
            std::swap(pool_[i], pool_[j]);
            swaps_.push_back(j);
            out.push_back(pool_[i]);
        }
        for (std::uint64_t i = r; i-- > 0;) {
            std::swap(pool_[i], pool_[swaps_[i]]);
        }
    }

private:
    std::vector<std::uint32_t> pool_;
    std::vector<std::uint64_t> swaps_;
};

void check_law_domain(std::uint64_t N, std::uint64_t r)
{
    if (r > N) {
        throw PreconditionError("support size r = " + std::to_string(r) + " exceeds N = " + std::to_string(N));
    }
}

double to_double(const Rational& q) { return to_decimal(q).convert_to<double>(); }

double binomial_stderr(double p, std::uint64_t trials)
{
    return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(trials));
}

}  // namespace

Rational hypergeom_pmf(std::uint64_t N, std::uint64_t r, std::uint64_t t)
{
    check_law_domain(N, r);
    if (t > r) {
        throw PreconditionError("overlap t = " + std::to_string(t) + " exceeds r = " + std::to_string(r));
    }
    return Rational(binomial(r, t) * binomial(N - r, r - t), binomial(N, r));
}

OverlapLaw overlap_law(std::uint64_t N, std::uint64_t r)
{
    check_law_domain(N, r);
    OverlapLaw law{N, r, {}};
    const Integer total = binomial(N, r);
    law.pmf.reserve(r + 1);
    for (std::uint64_t t = 0; t <= r; ++t) {
        law.pmf.emplace_back(binomial(r, t) * binomial(N - r, r - t), total);
    }
    return law;
}

Decimal PoissonRef::pmf(std::uint64_t t) const
{
    const Decimal lam = to_decimal(lambda);
    Decimal p = exp(-lam);
    for (std::uint64_t i = 1; i <= t; ++i) {
        p *= lam / Decimal(i);
    }
    return p;
}

DisjointProbability prob_disjoint(std::uint64_t N, std::uint64_t r)
{
    check_law_domain(N, r);
    DisjointProbability out;
    out.exact = Rational(binomial(N - r, r), binomial(N, r));
    const Rational lambda(Integer(r) * Integer(r), Integer(N == 0 ? 1 : N));
    out.log_approx = -to_decimal(lambda);
    if (out.exact == 0) {
        out.log_error = std::numeric_limits<Decimal>::infinity();
    } else {
        out.log_error = abs(log(to_decimal(out.exact)) - out.log_approx);
    }
    return out;
}

TotalVariation tv_distance(std::uint64_t N, std::uint64_t r)
{
    check_law_domain(N, r);
    TotalVariation out;
    if (r == 0) {
        out.tv = 0;
        out.ratio = 0;
        return out;
    }
    const OverlapLaw law = overlap_law(N, r);
    const Decimal lambda = Decimal(Integer(r) * Integer(r)) / Decimal(N);
    Decimal poisson = exp(-lambda);
    Decimal l1 = 0;
    Decimal poisson_mass = 0;
    for (std::uint64_t t = 0; t <= r; ++t) {
        if (t > 0) {
            poisson *= lambda / Decimal(t);
        }
        l1 += abs(to_decimal(law.pmf[t]) - poisson);
        poisson_mass += poisson;
    }
    // Poisson mass beyond r, where the hypergeometric law has none.
    l1 += Decimal(1) - poisson_mass;
    out.tv = l1 / 2;
    out.ratio = out.tv * Decimal(N) * Decimal(N) / (Decimal(r) * Decimal(r) * Decimal(r));
    return out;
}

std::vector<std::uint32_t> sample_subset(std::uint64_t N, std::uint64_t r, std::uint64_t substream)
{
    check_law_domain(N, r);
    SubsetSampler sampler(N);
    SplitMix64 rng(substream);
    std::vector<std::uint32_t> out;
    sampler.draw(rng, r, out);
    return out;
}

ExperimentResult sample_overlaps(const ExperimentConfig& cfg, bool with_exact_law)
{
    check_law_domain(cfg.N, cfg.r);
    if (cfg.trials < 1) {
        throw PreconditionError("at least one trial is required");
    }
    if (cfg.N > kMaxSampledPopulation) {
        throw ScaleGuardError("sampling limited to N <= " + std::to_string(kMaxSampledPopulation));
    }
    ExperimentResult result;
    result.config = cfg;
    result.overlap.resize(cfg.trials);
    result.distance.resize(cfg.trials);

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        SubsetSampler sampler(cfg.N);
        std::vector<std::uint8_t> mark(cfg.N, 0);
        std::vector<std::uint32_t> f;
        std::vector<std::uint32_t> g;
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            SplitMix64 rng(cfg.seed ^ trial);
            sampler.draw(rng, cfg.r, f);
            sampler.draw(rng, cfg.r, g);
            for (const auto x : f) {
                mark[x] |= 1;
            }
            for (const auto y : g) {
                mark[y] |= 2;
            }
            std::uint32_t overlap = 0;
            std::uint64_t only_one = 0;
            for (const auto x : f) {
                overlap += mark[x] == 3;
                only_one += mark[x] == 1;
            }
            for (const auto y : g) {
                only_one += mark[y] == 2;
            }
            for (const auto x : f) {
                mark[x] = 0;
            }
            for (const auto y : g) {
                mark[y] = 0;
            }
            result.overlap[trial] = overlap;
            result.distance[trial] = only_one;
        }
    };
    const unsigned threads = static_cast<unsigned>(std::clamp<std::uint64_t>(cfg.threads, 1, cfg.trials));
    if (threads == 1) {
        work(0, cfg.trials);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, cfg.trials * t / threads, cfg.trials * (t + 1) / threads);
        }
    }

    result.histogram.assign(cfg.r + 1, 0);
    double distance_sum = 0;
    std::uint64_t intersecting = 0;
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        const std::uint32_t t = result.overlap[trial];
        ++result.histogram[t];
        intersecting += t >= 1;
        distance_sum += static_cast<double>(result.distance[trial]);
        if (result.distance[trial] != 2 * cfg.r - 2 * static_cast<std::uint64_t>(t)) {
            result.distance_identity = false;
        }
    }
    const auto trials = static_cast<double>(cfg.trials);
    for (const auto count : result.histogram) {
        result.empirical_pmf.push_back(static_cast<double>(count) / trials);
    }
    result.empirical_intersect = static_cast<double>(intersecting) / trials;
    result.mean_distance = distance_sum / trials;
    if (with_exact_law) {
        result.exact = overlap_law(cfg.N, cfg.r);
    }
    return result;
}

std::uint64_t floor_power(std::uint64_t N, double exponent)
{
    const long double value = std::pow(static_cast<long double>(N), static_cast<long double>(exponent));
    return static_cast<std::uint64_t>(std::floor(value * (1.0L + 1e-12L)));
}

std::vector<ThresholdRow> threshold_sweep(std::uint64_t N, const std::vector<double>& exponents,
                                          std::uint64_t trials, std::uint64_t seed, unsigned threads)
{
    std::vector<ThresholdRow> rows;
    SplitMix64 row_seeds(seed);
    for (const double e : exponents) {
        if (!(e > 0.0 && e < 1.0)) {
            throw PreconditionError("threshold exponents must lie in (0, 1)");
        }
        ThresholdRow row;
        row.exponent = e;
        row.r = floor_power(N, e);
        const Rational disjoint = prob_disjoint(N, row.r).exact;
        row.exact = Rational(1) - disjoint;
        // Kept separately so tiny complements survive the conversion to double.
        row.exact_disjoint = to_double(disjoint);
        row.exact_value = 1.0 - row.exact_disjoint;
        const ExperimentResult sample =
            sample_overlaps(ExperimentConfig{N, row.r, trials, row_seeds(), threads}, false);
        row.empirical = sample.empirical_intersect;
        row.stderr_empirical = binomial_stderr(row.empirical, trials);
        row.stderr_exact = binomial_stderr(row.exact_disjoint, trials);
        row.poisson_reference =
            1.0 - std::exp(-static_cast<double>(row.r) * static_cast<double>(row.r) / static_cast<double>(N));
        rows.push_back(row);
    }
    return rows;
}

ConcentrationReport concentration_check(std::uint64_t N, std::uint64_t r, std::uint64_t trials,
                                        std::uint64_t seed, unsigned threads)
{
    ConcentrationReport report;
    report.N = N;
    report.r = r;
    report.trials = trials;
    report.exact = prob_disjoint(N, r).exact;
    report.exact_value = to_double(report.exact);
    report.concentrated = report.exact >= Rational(99, 100);
    const ExperimentResult sample = sample_overlaps(ExperimentConfig{N, r, trials, seed, threads}, false);
    report.empirical = sample.empirical_pmf.front();
    report.gap = std::abs(report.empirical - report.exact_value);
    report.stderr_exact = binomial_stderr(report.exact_value, trials);
    report.distance_identity = sample.distance_identity;
    return report;
}

}  // namespace disc
