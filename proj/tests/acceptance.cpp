// Acceptance gate: one PASS/FAIL line per criterion, each with its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <unistd.h>
#include <set>
#include <sstream>
#include <string>

#include "disc/cli.hpp"
#include "disc/cubemetric.hpp"
#include "disc/randover.hpp"
#include "disc/serialize.hpp"

using namespace disc;

namespace
{

struct Verdict
{
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            detail = what;
        }
        ok = ok && cond;
    }
};

struct Criterion
{
    int id;
    const char* name;
    double budget_seconds;
    std::function<Verdict()> body;
};

std::string str(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Verdict johnson_graphs()
{
    Verdict v;
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 1}, {6, 2}, {7, 2}, {7, 3}}) {
        const JohnsonStats s = johnson_stats(n, k);
        const std::string tag = "J(" + std::to_string(n) + "," + std::to_string(k + 1) + ")";
        v.require(Integer(s.vertices) == binomial(static_cast<unsigned>(n), static_cast<unsigned>(k + 1)),
                  tag + " vertex count");
        v.require(s.degree == static_cast<std::uint64_t>((k + 1) * (n - k - 1)), tag + " degree formula");
        v.require(s.degree_checked, tag + " neighbor counting");
        v.require(s.diameter == std::min(k + 1, n - k - 1), tag + " diameter formula");
        v.require(s.diameter_bfs == s.diameter, tag + " BFS diameter");
        v.require(s.distance_formula_checked, tag + " all-pairs BFS distances");
    }
    v.detail = v.ok ? "4 instances, formulas = neighbor counts = BFS" : v.detail;
    return v;
}

Verdict free_distance()
{
    Verdict v;
    double slowest = 0;
    for (int N = 4; N <= 10; ++N) {
        const auto start = std::chrono::steady_clock::now();
        const CoverGraph graph = CoverGraph::build(Mode::free(N), GraphKind::hasse);
        const DistanceMatrix dist = all_pairs_distances(graph);
        const auto t = verify_distance_theorem(graph, dist);
        const std::string tag = "N=" + std::to_string(N);
        v.require(t.cover.pass, tag + " cover");
        v.require(t.distance.pass, tag + " distance");
        v.require(t.partial_cube.pass, tag + " partial cube");
        v.require(verify_median_graph(graph, dist).pass, tag + " median");
        slowest = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    v.require(slowest < 30, "N=10 exceeded 30 s");
    v.detail = v.ok ? "N=4..10 all pass, N=10 in " + str(slowest) + "s" : v.detail;
    return v;
}

Verdict free_geodesics()
{
    Verdict v;
    const Mode mode = Mode::free(6);
    const std::uint64_t expected[] = {6, 24, 120};
    for (int s = 3; s <= 5; ++s) {
        const Support f = Support::singleton(5);
        const Support g = f ^ Support::full(s);
        const GeodesicSet set = geodesics(f, g, mode, true);
        const std::string tag = "|S|=" + std::to_string(s);
        v.require(set.paths && set.paths->size() == expected[s - 3], tag + " path count");
        v.require(set.count == expected[s - 3], tag + " sequence count");
        v.require(set.linear_extensions == expected[s - 3] && set.agree, tag + " linear extensions");
        std::set<std::vector<int>> distinct;
        for (const auto& path : set.paths.value_or(std::vector<std::vector<int>>{})) {
            Support cur = f;
            for (const int c : path) {
                cur = cur.toggled(c);
                v.require(mode.admissible(cur), tag + " inadmissible intermediate");
            }
            v.require(cur == g, tag + " path does not end at target");
            distinct.insert(path);
        }
        v.require(distinct.size() == expected[s - 3], tag + " duplicate paths");
    }
    v.detail = v.ok ? "6, 24, 120 paths; linear extensions agree" : v.detail;
    return v;
}

Verdict free_interval()
{
    Verdict v;
    const int N = 6;
    const CoverGraph graph = CoverGraph::build(Mode::free(N), GraphKind::hasse);
    std::uint64_t intervals = 0;
    for (std::uint64_t lo = 0; lo < 64; ++lo) {
        for (std::uint64_t hi = 0; hi < 64; ++hi) {
            const Support x{lo};
            const Support y{hi};
            if (!x.subset_of(y) || (y - x).size() != 3) {
                continue;
            }
            const IntervalCubeReport r = verify_interval_cube(graph, x, y);
            ++intervals;
            // Members are exactly F(X) u T for the 8 subsets T of the difference.
            std::set<std::uint64_t> members;
            for (const Support z : graph.vertices()) {
                if (x.subset_of(z) && z.subset_of(y)) {
                    members.insert(z.bits);
                }
            }
            std::set<std::uint64_t> cube;
            const Support d = y - x;
            for (std::uint64_t t = d.bits;; t = (t - 1) & d.bits) {
                cube.insert((x | Support{t}).bits);
                if (t == 0) {
                    break;
                }
            }
            v.require(r.elements == 8 && members == cube, "interval is not {F(X) u T}");
            v.require(r.cube, "induced cover graph is not Q3");
            v.require(r.convex, "interval not convex");
            v.require(r.pass(), "interval report failed");
        }
    }
    v.detail = v.ok ? std::to_string(intervals) + " intervals in Q6, each 8 supports, Q3, convex" : v.detail;
    return v;
}

std::set<std::uint64_t> partition_supports(int n)
{
    std::set<std::uint64_t> out;
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> grow = [&](int i, int blocks) {
        if (i == n) {
            std::uint64_t bits = 0;
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    if (block[a] == block[b]) {
                        bits |= std::uint64_t{1} << (a + b * (b - 1) / 2);
                    }
                }
            }
            out.insert(bits);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[static_cast<std::size_t>(i)] = b;
            grow(i + 1, std::max(blocks, b + 1));
        }
    };
    grow(0, 0);
    return out;
}

Verdict braid_lattices()
{
    Verdict v;
    const std::size_t bell[] = {5, 15, 52};
    std::string counts;
    for (int n = 3; n <= 5; ++n) {
        const Lattice lat = build_lattice(make_arrangement_spec(n, 1, 1));
        const auto oracle = partition_supports(n);
        std::set<std::uint64_t> found;
        std::size_t graded = 0;
        for (const auto& level : lat.levels()) {
            graded += level.size();
        }
        for (const auto& e : lat.elements()) {
            found.insert(e.support.bits);
            // rank = n - (number of blocks): connected components of the pair graph.
            std::vector<int> parent(static_cast<std::size_t>(n));
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> root = [&](int a) { return parent[a] == a ? a : parent[a] = root(parent[a]); };
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    if (e.support.contains(a + b * (b - 1) / 2)) {
                        parent[root(a)] = root(b);
                    }
                }
            }
            int blocks = 0;
            for (int a = 0; a < n; ++a) {
                blocks += root(a) == a ? 1 : 0;
            }
            v.require(e.rank == n - blocks, "rank grading disagrees with block count");
        }
        const std::string tag = "B(" + std::to_string(n) + ",1)";
        v.require(lat.size() == bell[n - 3], tag + " element count");
        v.require(oracle.size() == bell[n - 3], tag + " oracle count");
        v.require(found == oracle, tag + " supports differ from the partition oracle");
        v.require(graded == lat.size() && lat.levels().size() == static_cast<std::size_t>(n), tag + " levels");
        counts += (counts.empty() ? "" : ", ") + std::to_string(lat.size());
    }
    v.detail = v.ok ? counts + " elements = Bell numbers" : v.detail;
    return v;
}

Verdict geometric_determinism()
{
    Verdict v;
    const Lattice lat = build_lattice(make_arrangement_spec(3, 1, 0));
    const CoverGraph graph = CoverGraph::build(Mode::geometric(lat), GraphKind::hasse);
    const auto theorem = verify_distance_theorem(graph, all_pairs_distances(graph));
    v.require(!theorem.cover.counterexamples.empty(), "no cover witness");
    std::string witness;
    if (!theorem.cover.counterexamples.empty()) {
        const auto& w = theorem.cover.counterexamples.front().supports;
        v.require(w.size() == 2 && w[0].size() == 1 && w[1].size() == 3 && distance(w[0], w[1]) == 2,
                  "witness is not (atom, top) with symmetric difference 2");
        witness = to_bitstring(w.front(), 3) + " -> " + to_bitstring(w.back(), 3);
    }
    const auto dir = std::filesystem::temp_directory_path() / ("disc-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::vector<std::string> reports;
    for (const auto& threads : {"1", "4", "1", "2"}) {
        const std::string path = (dir / ("r" + std::to_string(reports.size()) + ".json")).string();
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run({"verify", "--n", "3", "--k", "1", "--mode", "geometric", "--claims", "all",
                                   "--report", path, "--threads", threads},
                                  out, err);
        v.require(code == 0, "verify exited with " + std::to_string(code));
        reports.push_back(code == 0 ? read_file(path) : std::string());
    }
    std::filesystem::remove_all(dir);
    for (const auto& r : reports) {
        v.require(r == reports.front() && !r.empty(), "reports differ across runs or thread counts");
    }
    v.detail = v.ok ? "cover witness " + witness + " with |diff| = 2; 4 reports byte-identical" : v.detail;
    return v;
}

Verdict hypergeometric_exactness()
{
    Verdict v;
    int laws = 0;
    for (const std::uint64_t N : {1, 2, 10, 37, 100, 999, 1000, 5000, 10000}) {
        for (const std::uint64_t r : {0, 1, 2, 3, 10, 25, 50, 99, 100}) {
            if (r > N) {
                continue;
            }
            Rational total = 0;
            for (const auto& p : overlap_law(N, r).pmf) {
                total += p;
            }
            v.require(total == 1, "normalization fails at N=" + std::to_string(N) + " r=" + std::to_string(r));
            ++laws;
        }
    }
    std::vector<unsigned> two;
    for (unsigned m = 0; m < 1024; ++m) {
        if (__builtin_popcount(m) == 2) {
            two.push_back(m);
        }
    }
    int pairs = 0;
    int disjoint = 0;
    for (const unsigned a : two) {
        for (const unsigned b : two) {
            ++pairs;
            disjoint += (a & b) == 0 ? 1 : 0;
        }
    }
    v.require(pairs == 2025, "oracle pair count");
    v.require(hypergeom_pmf(10, 2, 0) == Rational(disjoint, pairs), "P(T=0) at (10,2) disagrees with oracle");
    v.require(hypergeom_pmf(10, 2, 0) == Rational(28, 45), "P(T=0) at (10,2) is not 28/45");
    v.detail = v.ok ? std::to_string(laws) + " laws sum to exactly 1; P(T=0) = " +
                          to_string(hypergeom_pmf(10, 2, 0)) + " = " + std::to_string(disjoint) + "/2025"
                    : v.detail;
    return v;
}

// The bound recorded for the ratio tv * N^2 / r^3 over the grid.
constexpr double kTvRatioBound = 2.0;

Verdict poisson_decay()
{
    Verdict v;
    Decimal previous = 2;
    std::string ratios;
    for (const std::uint64_t N : {100, 1000, 10000}) {
        const TotalVariation tv = tv_distance(N, floor_power(N, 0.4));
        v.require(tv.tv < previous, "tv not strictly decreasing at N=" + std::to_string(N));
        v.require(tv.ratio < kTvRatioBound, "ratio above the recorded bound at N=" + std::to_string(N));
        previous = tv.tv;
        ratios += (ratios.empty() ? "" : ", ") + format_decimal(tv.ratio, 4);
    }
    v.detail = v.ok ? "tv decreasing; ratios " + ratios + " < " + str(kTvRatioBound) : v.detail;
    return v;
}

Verdict sharp_threshold()
{
    Verdict v;
    const auto rows = threshold_sweep(10000, {0.3, 0.7}, 100000, 20240101);
    v.require(rows.size() == 2, "row count");
    if (rows.size() == 2) {
        v.require(rows[0].r == 15 && rows[1].r == 630, "r values");
        v.require(rows[0].exact_value < 0.05, "exact at r=15 not below 0.05");
        v.require(rows[1].exact_value > 0.95, "exact at r=630 not above 0.95");
        for (const auto& row : rows) {
            v.require(std::fabs(row.empirical - row.exact_value) <= 3 * row.stderr_exact,
                      "Monte Carlo outside 3 standard errors at r=" + std::to_string(row.r));
        }
        v.detail = "r=15: exact " + str(rows[0].exact_value) + " mc " + str(rows[0].empirical) +
                   "; r=630: exact " + str(rows[1].exact_value) + " mc " + str(rows[1].empirical);
    }
    return v;
}

Verdict metric_concentration()
{
    Verdict v;
    const ExperimentResult res = sample_overlaps({1140, 20, 100000, 42, 1}, false);
    v.require(res.distance_identity && res.overlap.size() == 100000, "identity d = 2r - 2T violated");
    for (std::size_t i = 0; i < res.overlap.size(); ++i) {
        v.require(res.distance[i] == 40 - 2 * static_cast<std::uint64_t>(res.overlap[i]), "identity in trial");
    }
    const ConcentrationReport c = concentration_check(1000000, 5, 100000, 42);
    v.require(c.distance_identity, "identity violated at N=1e6");
    v.require(c.exact_value >= 0.99, "exact P(d = 2r) below 0.99");
    v.detail = v.ok ? "d = 2r - 2T on 2x1e5 pairs; P(d=2r) = " + str(c.exact_value) + " at N=1e6, r=5" : v.detail;
    return v;
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "johnson graph formulas", 5, johnson_graphs},
        {2, "free-mode distance, partial cube, median", 30, free_distance},
        {3, "free-mode geodesic counts", 1, free_geodesics},
        {4, "free-mode interval cubes", 1, free_interval},
        {5, "braid lattices and Bell numbers", 60, braid_lattices},
        {6, "geometric verdicts are deterministic", 60, geometric_determinism},
        {7, "hypergeometric exactness", 5, hypergeometric_exactness},
        {8, "Poisson approximation decay", 30, poisson_decay},
        {9, "sharp threshold", 60, sharp_threshold},
        {10, "metric concentration", 30, metric_concentration},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.body();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.ok && seconds >= c.budget_seconds) {
            v.ok = false;
            v.detail = "over budget: " + str(seconds) + "s >= " + str(c.budget_seconds) + "s";
        }
        failed += v.ok ? 0 : 1;
        std::printf("%s %2d %-42s %7.2fs  %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name, seconds, v.detail.c_str());
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
