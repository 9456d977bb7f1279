#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disc/numeric.hpp"

namespace disc
{

/// Law of T = |F n G| for independent uniform r-subsets F, G of an N-set:
/// hypergeometric with parameters (N, r, r).
struct OverlapLaw
{
    std::uint64_t N = 0;
    std::uint64_t r = 0;
    std::vector<Rational> pmf;  // pmf[t], t = 0..r
};

Rational hypergeom_pmf(std::uint64_t N, std::uint64_t r, std::uint64_t t);
OverlapLaw overlap_law(std::uint64_t N, std::uint64_t r);

/// Poisson reference with lambda = r^2 / N.
struct PoissonRef
{
    Rational lambda;

    Decimal pmf(std::uint64_t t) const;
};

struct DisjointProbability
{
    Rational exact;        // C(N-r, r) / C(N, r)
    Decimal log_approx;    // -r^2 / N
    Decimal log_error;     // |log P + r^2/N|; zero-probability cases report +inf
};

DisjointProbability prob_disjoint(std::uint64_t N, std::uint64_t r);

struct TotalVariation
{
    Decimal tv;
    Decimal ratio;  // tv * N^2 / r^3, zero when r = 0
};

/// Total variation between Hypergeom(N, r, r) and Poisson(r^2/N) over all of N,
/// including the Poisson mass above r.
TotalVariation tv_distance(std::uint64_t N, std::uint64_t r);

struct ExperimentConfig
{
    std::uint64_t N = 0;
    std::uint64_t r = 0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct ExperimentResult
{
    ExperimentConfig config;
    std::vector<std::uint32_t> overlap;   // T per trial
    std::vector<std::uint64_t> distance;  // |F xor G| per trial, counted element by element
    std::vector<std::uint64_t> histogram; // trials with T = t, t = 0..r
    bool distance_identity = true;        // distance = 2r - 2T for every trial
    std::vector<double> empirical_pmf;
    double empirical_intersect = 0;       // fraction of trials with T >= 1
    double mean_distance = 0;
    OverlapLaw exact;                     // only when with_exact_law
};

/// Draws F, G by partial Fisher-Yates, trial i on substream seed xor i.
ExperimentResult sample_overlaps(const ExperimentConfig& cfg, bool with_exact_law = true);

/// One uniform r-subset of [0, N) drawn from the given substream; used by tests.
std::vector<std::uint32_t> sample_subset(std::uint64_t N, std::uint64_t r, std::uint64_t substream);

/// floor(N^e), robust to rounding at exact powers.
std::uint64_t floor_power(std::uint64_t N, double exponent);

struct ThresholdRow
{
    double exponent = 0;
    std::uint64_t r = 0;
    Rational exact;           // P(F n G nonempty)
    double exact_value = 0;
    double exact_disjoint = 0;    // 1 - exact, computed directly
    double empirical = 0;
    double stderr_empirical = 0;  // sqrt(p(1-p)/trials) from the empirical p
    double stderr_exact = 0;      // same from the exact p
    double poisson_reference = 0; // 1 - exp(-r^2/N)
};

std::vector<ThresholdRow> threshold_sweep(std::uint64_t N, const std::vector<double>& exponents,
                                          std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

struct ConcentrationReport
{
    std::uint64_t N = 0;
    std::uint64_t r = 0;
    std::uint64_t trials = 0;
    Rational exact;        // P(d = 2r) = P(F n G empty)
    double exact_value = 0;
    double empirical = 0;
    double gap = 0;        // |empirical - exact|
    double stderr_exact = 0;
    bool concentrated = false;  // exact >= 0.99
    bool distance_identity = true;
};

ConcentrationReport concentration_check(std::uint64_t N, std::uint64_t r, std::uint64_t trials,
                                        std::uint64_t seed, unsigned threads = 1);

}  // namespace disc
