#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace disc
{

/// A (k+1)-subset of {0, ..., n-1}, stored as a bitmask. Human-facing labels are 1-based.
struct Circuit
{
    std::uint64_t elements = 0;

    static Circuit from_members(std::span<const int> members);
    static Circuit from_members(std::initializer_list<int> members)
    {
        return from_members(std::span<const int>(members.begin(), members.size()));
    }

    int size() const noexcept { return __builtin_popcountll(elements); }
    bool contains(int i) const noexcept { return (elements >> i) & 1U; }
    /// 0-based members in increasing order.
    std::vector<int> members() const;

    friend auto operator<=>(const Circuit&, const Circuit&) = default;
};

/// Position of a circuit in colex order, in [0, C(n, k+1)).
struct CircuitIndex
{
    std::uint64_t value = 0;
    friend auto operator<=>(const CircuitIndex&, const CircuitIndex&) = default;
};

/// C(n, k) in 64 bits; throws ScaleGuardError on overflow.
std::uint64_t binom64(int n, int k);

/// Number of circuits N = C(n, k+1).
inline std::uint64_t circuit_count(int n, int k) { return binom64(n, k + 1); }

CircuitIndex circuit_rank(Circuit c, int k);
Circuit circuit_unrank(CircuitIndex i, int n, int k);

/// "{1,2,4}" with 1-based labels.
std::string to_label(Circuit c);

/// Image of c under the permutation i -> perm[i] of {0, ..., n-1}.
Circuit permute(Circuit c, std::span<const int> perm);

bool johnson_adjacent(Circuit a, Circuit b);
int johnson_distance(Circuit a, Circuit b);

/// J(n, k+1) with adjacency computed on demand.
class JohnsonGraph
{
public:
    JohnsonGraph(int n, int k);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::uint64_t vertex_count() const noexcept { return vertices_; }
    std::uint64_t degree_formula() const noexcept;
    int diameter_formula() const noexcept;

    /// Swap one member for one non-member; neighbors come out in colex order.
    std::vector<Circuit> neighbors(Circuit c) const;

    /// Single-source BFS over the implicit graph, indexed by colex rank.
    std::vector<int> bfs_distances(Circuit source) const;

private:
    int n_;
    int k_;
    std::uint64_t vertices_;
};

struct TransitivityWitness
{
    Circuit from;
    Circuit to;
    std::vector<int> permutation;  // 0-based image of each element
};

struct JohnsonStats
{
    int n = 0;
    int k = 0;
    std::uint64_t vertices = 0;
    std::uint64_t degree = 0;          // formula (k+1)(n-k-1)
    bool degree_checked = false;       // every vertex's neighbor list has that size
    int diameter = 0;                  // formula min{k+1, n-k-1}
    std::optional<int> diameter_bfs;   // all-pairs BFS, when C(n,k+1) <= bfs_limit
    bool distance_formula_checked = false;
    TransitivityWitness witness;
};

inline constexpr std::uint64_t kJohnsonBfsLimit = 5000;

JohnsonStats johnson_stats(int n, int k);

/// Characteristic 0/1 vector of c in R^n (a vertex of the hypersimplex).
Eigen::VectorXi hypersimplex_vertex(Circuit c, int n);

}  // namespace disc
