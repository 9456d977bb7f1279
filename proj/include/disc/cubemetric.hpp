#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "disc/lattice.hpp"
#include "disc/support.hpp"

namespace disc
{

// Desk-scale guards.
inline constexpr std::size_t kMaxGraphVertices = 5000;
inline constexpr int kMaxFreeWidth = 12;
// The triple loop runs on interval bitsets, which keeps Q_10 (1024 vertices) in budget.
inline constexpr std::size_t kMaxMedianVertices = 1024;
inline constexpr int kMaxSymmetricDifference = 12;
inline constexpr int kMaxIntervalDimension = 10;
inline constexpr std::uint64_t kMaxEnumeratedPaths = 100000;
inline constexpr std::size_t kMaxCounterexamples = 10;

enum class ModeKind
{
    free,
    geometric
};

/// Which supports count as vertices. FREE admits every support of the given
/// width; GEOMETRIC admits exactly the closed supports of a lattice (which must
/// outlive the mode).
class Mode
{
public:
    static Mode free(int width);
    static Mode geometric(const Lattice& lat);

    ModeKind kind() const noexcept { return kind_; }
    int width() const noexcept { return width_; }
    const Lattice* lattice() const noexcept { return lattice_; }
    std::string_view name() const noexcept { return kind_ == ModeKind::free ? "free" : "geometric"; }

    bool admissible(Support s) const
    {
        if (kind_ == ModeKind::free) {
            return s.subset_of(Support::full(width_));
        }
        return lattice_->contains(s);
    }

private:
    Mode(ModeKind kind, int width, const Lattice* lat) : kind_(kind), width_(width), lattice_(lat) {}

    ModeKind kind_;
    int width_;
    const Lattice* lattice_;
};

/// hasse: lattice covers (transitive reduction). toggle: admissible supports
/// differing in one circuit. In FREE mode both are the hypercube Q_N.
enum class GraphKind
{
    hasse,
    toggle
};

std::string_view to_string(GraphKind kind) noexcept;

inline constexpr std::uint16_t kUnreachable = 0xFFFF;
using DistanceMatrix = Eigen::Array<std::uint16_t, Eigen::Dynamic, Eigen::Dynamic>;

class CoverGraph
{
public:
    static CoverGraph build(const Mode& mode, GraphKind kind);

    const Mode& mode() const noexcept { return mode_; }
    GraphKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    Support vertex(std::size_t v) const { return vertices_.at(v); }
    const std::vector<Support>& vertices() const noexcept { return vertices_; }
    std::optional<std::size_t> find(Support s) const;
    std::span<const std::uint32_t> neighbors(std::size_t v) const;
    /// (u, v) with u < v, sorted.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const noexcept { return edges_; }

    std::vector<std::uint16_t> bfs(std::size_t source) const;

private:
    CoverGraph(Mode mode, GraphKind kind, std::vector<Support> vertices,
               std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    Mode mode_;
    GraphKind kind_;
    std::vector<Support> vertices_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::uint64_t> sorted_bits_;
    std::vector<std::uint32_t> sorted_ids_;
};

/// Row s holds BFS distances from vertex s. Independent of the thread count.
DistanceMatrix all_pairs_distances(const CoverGraph& graph, unsigned threads = 1);

/// |f xor g|.
inline int distance(Support f, Support g) noexcept { return (f ^ g).size(); }

inline Support majority(Support f, Support g, Support h) noexcept
{
    return (f & g) | (g & h) | (h & f);
}

struct MedianResult
{
    Support support;
    bool admissible = false;
};

MedianResult median(Support f, Support g, Support h, const Mode& mode);

struct Counterexample
{
    std::vector<Support> supports;
    std::string equation;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct ClaimReport
{
    std::string claim;
    std::string graph;
    bool pass = true;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<Counterexample> counterexamples;  // first kMaxCounterexamples failures

    /// Counts one check; `witness` is invoked only for retained failures.
    template <typename Witness>
    void record(bool ok, Witness&& witness)
    {
        ++checked;
        if (ok) {
            return;
        }
        pass = false;
        ++failures;
        if (counterexamples.size() < kMaxCounterexamples) {
            counterexamples.push_back(witness());
        }
    }
};

struct DistanceTheoremReport
{
    ClaimReport cover;         // every cover edge has |F(X) xor F(Y)| = 1
    ClaimReport distance;      // BFS distance = Hamming distance for all pairs
    ClaimReport partial_cube;  // phi injective and isometric on a connected graph
};

DistanceTheoremReport verify_distance_theorem(const CoverGraph& graph, const DistanceMatrix& dist);

/// For every vertex triple, the number of vertices on all three pairwise geodesics is 1.
ClaimReport verify_median_graph(const CoverGraph& graph, const DistanceMatrix& dist);

/// Precedence forced by admissibility on S = f xor g. (I, J) in relations means
/// I must be toggled before J in every admissible single-toggle sequence.
struct DependencyPoset
{
    Support from;
    Support to;
    ModeKind mode = ModeKind::free;
    std::vector<int> ground;                         // circuit indices of S, ascending
    std::vector<std::pair<int, int>> relations;      // circuit indices, sorted
    bool sequences_exist = true;                     // some admissible sequence reaches `to`
};

DependencyPoset dependency_poset(Support f, Support g, const Mode& mode);

/// Linear extensions of a poset on {0, ..., size-1}; relations are (before, after) pairs.
std::uint64_t count_linear_extensions(int size, std::span<const std::pair<int, int>> relations);

struct GeodesicSet
{
    std::uint64_t count = 0;                           // admissible single-toggle sequences
    std::uint64_t linear_extensions = 0;               // of the dependency poset
    bool agree = false;
    std::optional<std::vector<std::vector<int>>> paths;  // circuit indices in toggle order
    DependencyPoset poset;
};

GeodesicSet geodesics(Support f, Support g, const Mode& mode, bool enumerate);

struct IntervalCubeReport
{
    Support lower;
    Support upper;
    int dimension = 0;             // |F(y) \ F(x)|
    std::uint64_t elements = 0;    // vertices z of the graph with F(x) within F(z) within F(y)
    bool size_matches = false;     // elements = 2^dimension
    bool bijection = false;        // every F(x) u T is admissible
    bool cube = false;             // induced cover subgraph is Q_dimension
    bool convex = false;           // every geodesic between members stays inside
    std::vector<Counterexample> counterexamples;

    bool pass() const noexcept { return size_matches && bijection && cube && convex; }
};

IntervalCubeReport verify_interval_cube(const CoverGraph& graph, Support lower, Support upper);
IntervalCubeReport verify_interval_cube(const Lattice& lat, ElementId x, ElementId y);

/// Geodesic characterization over pairs of vertices with |S| <= 12: graph geodesic
/// count = toggle-sequence count = linear-extension count, and d = |S|.
ClaimReport verify_geodesic_claim(const CoverGraph& graph, const DistanceMatrix& dist,
                                  std::size_t max_pairs = 2000);

/// Interval cube + convexity over comparable vertex pairs with dimension <= 10.
ClaimReport verify_interval_claim(const CoverGraph& graph, std::size_t max_pairs = 500);

}  // namespace disc
