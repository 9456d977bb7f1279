#include <doctest.h>

#include <deque>

#include "disc/circuits.hpp"
#include "disc/errors.hpp"
#include "gen.hpp"

using namespace disc;

namespace
{

// All (k+1)-subsets of [n] in increasing mask order, which is colex order.
std::vector<Circuit> by_mask(int n, int k)
{
    std::vector<Circuit> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) == k + 1) {
            out.push_back(Circuit{mask});
        }
    }
    return out;
}

// BFS over the adjacency predicate only.
std::vector<std::vector<int>> bfs_oracle(const std::vector<Circuit>& vs)
{
    const std::size_t n = vs.size();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        std::deque<std::size_t> queue{s};
        dist[s][s] = 0;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (dist[s][v] < 0 && johnson_adjacent(vs[u], vs[v])) {
                    dist[s][v] = dist[s][u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return dist;
}

}  // namespace

TEST_SUITE("circuits")
{
    TEST_CASE("colex rank of fixed circuits")
    {
        CHECK(circuit_rank(Circuit::from_members({0, 1, 2}), 2).value == 0);
        CHECK(circuit_rank(Circuit::from_members({0, 1, 3}), 2).value == 1);
        CHECK(circuit_rank(Circuit::from_members({1, 2, 3}), 2).value == 3);
        CHECK_THROWS_AS(circuit_rank(Circuit::from_members({0, 1}), 2), PreconditionError);
    }

    TEST_CASE("unrank extremes")
    {
        CHECK(circuit_unrank(CircuitIndex{0}, 7, 2) == Circuit::from_members({0, 1, 2}));
        CHECK(circuit_unrank(CircuitIndex{circuit_count(7, 2) - 1}, 7, 2) == Circuit::from_members({4, 5, 6}));
        CHECK_THROWS_AS(circuit_unrank(CircuitIndex{circuit_count(7, 2)}, 7, 2), PreconditionError);
    }

    TEST_CASE("rank and unrank are inverse bijections")
    {
        for (int n = 2; n <= 8; ++n) {
            for (int k = 1; k <= 3 && k + 1 <= n; ++k) {
                const auto all = by_mask(n, k);
                REQUIRE(all.size() == circuit_count(n, k));
                for (std::uint64_t i = 0; i < all.size(); ++i) {
                    CHECK(circuit_unrank(CircuitIndex{i}, n, k) == all[i]);
                    CHECK(circuit_rank(all[i], k).value == i);
                }
            }
        }
    }

    TEST_CASE("binomials")
    {
        CHECK(binom64(6, 3) == 20);
        CHECK(binom64(5, 7) == 0);
        CHECK(binom64(64, 32) == 1832624140942590534ULL);
        CHECK_THROWS_AS(binom64(70, 35), ScaleGuardError);
    }

    TEST_CASE("labels are 1-based")
    {
        CHECK(to_label(Circuit::from_members({0, 1, 3})) == "{1,2,4}");
        CHECK(Circuit::from_members({3, 0, 1}).members() == std::vector<int>{0, 1, 3});
    }

    TEST_CASE("adjacency")
    {
        CHECK(johnson_adjacent(Circuit::from_members({0, 1}), Circuit::from_members({1, 2})));
        CHECK_FALSE(johnson_adjacent(Circuit::from_members({0, 1}), Circuit::from_members({2, 3})));
        CHECK_FALSE(johnson_adjacent(Circuit::from_members({0, 1}), Circuit::from_members({0, 1})));
        CHECK(johnson_distance(Circuit::from_members({0, 1}), Circuit::from_members({2, 3})) == 2);
        CHECK(johnson_distance(Circuit::from_members({0, 1}), Circuit::from_members({0, 1})) == 0);
    }

    TEST_CASE("distance formula equals BFS distance")
    {
        for (int n = 2; n <= 7; ++n) {
            for (int k = 1; k <= 3 && k + 1 <= n; ++k) {
                const auto vs = by_mask(n, k);
                const auto dist = bfs_oracle(vs);
                const JohnsonGraph graph(n, k);
                for (std::size_t a = 0; a < vs.size(); ++a) {
                    const auto from_graph = graph.bfs_distances(vs[a]);
                    for (std::size_t b = 0; b < vs.size(); ++b) {
                        CHECK(johnson_distance(vs[a], vs[b]) == dist[a][b]);
                        CHECK(from_graph[b] == dist[a][b]);
                    }
                }
            }
        }
    }

    TEST_CASE("regular of the stated degree")
    {
        for (int n = 2; n <= 8; ++n) {
            for (int k = 1; k <= 3 && k + 1 <= n; ++k) {
                const JohnsonGraph graph(n, k);
                const auto vs = by_mask(n, k);
                for (const Circuit c : vs) {
                    const auto nb = graph.neighbors(c);
                    CHECK(nb.size() == graph.degree_formula());
                    CHECK(std::is_sorted(nb.begin(), nb.end()));
                    const auto brute = std::count_if(vs.begin(), vs.end(),
                                                     [&](Circuit d) { return johnson_adjacent(c, d); });
                    CHECK(static_cast<std::uint64_t>(brute) == graph.degree_formula());
                }
            }
        }
    }

    TEST_CASE("relabelling preserves distance")
    {
        SplitMix64 rng(31);
        const int n = 7;
        const int k = 2;
        const auto vs = by_mask(n, k);
        for (int trial = 0; trial < 100; ++trial) {
            const auto perm = gen::permutation(rng, n);
            const Circuit a = vs[rng.below(vs.size())];
            const Circuit b = vs[rng.below(vs.size())];
            CHECK(permute(a, perm).size() == k + 1);
            CHECK(johnson_distance(permute(a, perm), permute(b, perm)) == johnson_distance(a, b));
        }
    }

    TEST_CASE("stats records")
    {
        const auto s51 = johnson_stats(5, 1);
        CHECK(s51.vertices == 10);
        CHECK(s51.degree == 6);
        CHECK(s51.diameter == 2);
        CHECK(s51.diameter_bfs == 2);
        CHECK(s51.degree_checked);
        CHECK(s51.distance_formula_checked);

        const auto s62 = johnson_stats(6, 2);
        CHECK(s62.vertices == 20);
        CHECK(s62.degree == 9);
        CHECK(s62.diameter == 3);
        CHECK(s62.diameter_bfs == 3);

        const auto single = johnson_stats(4, 3);
        CHECK(single.vertices == 1);
        CHECK(single.degree == 0);
        CHECK(single.diameter == 0);

        for (const auto& s : {s51, s62}) {
            CHECK(permute(s.witness.from, s.witness.permutation) == s.witness.to);
        }
    }

    TEST_CASE("hypersimplex skeleton")
    {
        const Eigen::VectorXi v = hypersimplex_vertex(Circuit::from_members({0, 1}), 4);
        CHECK(v == (Eigen::VectorXi(4) << 1, 1, 0, 0).finished());
        for (const int k : {1, 2}) {
            const auto vs = by_mask(5, k);
            for (const Circuit a : vs) {
                CHECK(hypersimplex_vertex(a, 5).sum() == k + 1);
                for (const Circuit b : vs) {
                    const int hamming = (hypersimplex_vertex(a, 5) - hypersimplex_vertex(b, 5)).cwiseAbs().sum();
                    CHECK(johnson_adjacent(a, b) == (hamming == 2));
                }
            }
        }
    }
}
