#include "disc/circuits.hpp"

#include <algorithm>
#include <deque>

#include "disc/errors.hpp"

namespace disc
{

Circuit Circuit::from_members(std::span<const int> members)
{
    Circuit c;
    for (const int m : members) {
        if (m < 0 || m >= 64) {
            throw PreconditionError("circuit member out of range: " + std::to_string(m));
        }
        c.elements |= std::uint64_t{1} << m;
    }
    return c;
}

std::vector<int> Circuit::members() const
{
    std::vector<int> out;
    for (std::uint64_t rest = elements; rest != 0; rest &= rest - 1) {
        out.push_back(__builtin_ctzll(rest));
    }
    return out;
}

std::uint64_t binom64(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > UINT64_MAX) {
            throw ScaleGuardError("binomial C(" + std::to_string(n) + "," + std::to_string(k) +
                                  ") does not fit in 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

CircuitIndex circuit_rank(Circuit c, int k)
{
    if (c.size() != k + 1) {
        throw PreconditionError("circuit_rank: " + to_label(c) + " does not have k+1 = " +
                                std::to_string(k + 1) + " members");
    }
    std::uint64_t rank = 0;
    int j = 1;
    for (const int e : c.members()) {
        rank += binom64(e, j++);
    }
    return CircuitIndex{rank};
}

Circuit circuit_unrank(CircuitIndex i, int n, int k)
{
    if (k < 0 || n < k + 1 || n > 64) {
        throw PreconditionError("circuit_unrank: requires 64 >= n >= k+1");
    }
    if (i.value >= circuit_count(n, k)) {
        throw PreconditionError("circuit_unrank: index " + std::to_string(i.value) +
                                " out of range [0, " + std::to_string(circuit_count(n, k)) + ")");
    }
    Circuit c;
    std::uint64_t rest = i.value;
    int upper = n - 1;
    for (int j = k + 1; j >= 1; --j) {
        int e = upper;
        while (binom64(e, j) > rest) {
            --e;
        }
        c.elements |= std::uint64_t{1} << e;
        rest -= binom64(e, j);
        upper = e - 1;
    }
    return c;
}

std::string to_label(Circuit c)
{
    std::string out = "{";
    bool first = true;
    for (const int m : c.members()) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(m + 1);
        first = false;
    }
    return out + "}";
}

Circuit permute(Circuit c, std::span<const int> perm)
{
    Circuit out;
    for (const int m : c.members()) {
        out.elements |= std::uint64_t{1} << perm[static_cast<std::size_t>(m)];
    }
    return out;
}

bool johnson_adjacent(Circuit a, Circuit b)
{
    if (a.size() != b.size()) {
        throw PreconditionError("johnson_adjacent: circuits of different sizes");
    }
    return __builtin_popcountll(a.elements & b.elements) == a.size() - 1;
}

int johnson_distance(Circuit a, Circuit b)
{
    if (a.size() != b.size()) {
        throw PreconditionError("johnson_distance: circuits of different sizes");
    }
    return a.size() - __builtin_popcountll(a.elements & b.elements);
}

JohnsonGraph::JohnsonGraph(int n, int k) : n_(n), k_(k)
{
    if (k < 0 || n < k + 1 || n > 64) {
        throw PreconditionError("Johnson graph requires 64 >= n >= k+1");
    }
    vertices_ = circuit_count(n, k);
}

std::uint64_t JohnsonGraph::degree_formula() const noexcept
{
    return static_cast<std::uint64_t>(k_ + 1) * static_cast<std::uint64_t>(n_ - k_ - 1);
}

int JohnsonGraph::diameter_formula() const noexcept { return std::min(k_ + 1, n_ - k_ - 1); }

std::vector<Circuit> JohnsonGraph::neighbors(Circuit c) const
{
    std::vector<Circuit> out;
    for (const int in : c.members()) {
        for (int out_el = 0; out_el < n_; ++out_el) {
            if (!c.contains(out_el)) {
                out.push_back(Circuit{c.elements ^ (std::uint64_t{1} << in) ^
                                      (std::uint64_t{1} << out_el)});
            }
        }
    }
    // Colex order on subsets is the numeric order of their masks.
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> JohnsonGraph::bfs_distances(Circuit source) const
{
    std::vector<int> dist(vertices_, -1);
    std::deque<Circuit> queue{source};
    dist[circuit_rank(source, k_).value] = 0;
    while (!queue.empty()) {
        const Circuit c = queue.front();
        queue.pop_front();
        const int d = dist[circuit_rank(c, k_).value];
        for (const Circuit nb : neighbors(c)) {
            int& slot = dist[circuit_rank(nb, k_).value];
            if (slot < 0) {
                slot = d + 1;
                queue.push_back(nb);
            }
        }
    }
    return dist;
}

JohnsonStats johnson_stats(int n, int k)
{
    const JohnsonGraph graph(n, k);
    JohnsonStats stats;
    stats.n = n;
    stats.k = k;
    stats.vertices = graph.vertex_count();
    stats.degree = graph.degree_formula();
    stats.diameter = graph.diameter_formula();

    stats.degree_checked = true;
    for (std::uint64_t i = 0; i < stats.vertices; ++i) {
        if (graph.neighbors(circuit_unrank(CircuitIndex{i}, n, k)).size() != stats.degree) {
            stats.degree_checked = false;
            break;
        }
    }

    if (stats.vertices <= kJohnsonBfsLimit) {
        int diameter = 0;
        bool formula_ok = true;
        for (std::uint64_t i = 0; i < stats.vertices; ++i) {
            const Circuit source = circuit_unrank(CircuitIndex{i}, n, k);
            const std::vector<int> dist = graph.bfs_distances(source);
            for (std::uint64_t j = 0; j < stats.vertices; ++j) {
                diameter = std::max(diameter, dist[j]);
                if (dist[j] != johnson_distance(source, circuit_unrank(CircuitIndex{j}, n, k))) {
                    formula_ok = false;
                }
            }
        }
        stats.diameter_bfs = diameter;
        stats.distance_formula_checked = formula_ok;
    }

    // Relabel the colex-first circuit onto the colex-last one.
    const Circuit from = circuit_unrank(CircuitIndex{0}, n, k);
    const Circuit to = circuit_unrank(CircuitIndex{stats.vertices - 1}, n, k);
    std::vector<int> perm(static_cast<std::size_t>(n));
    const std::vector<int> src = from.members();
    const std::vector<int> dst = to.members();
    for (std::size_t i = 0; i < src.size(); ++i) {
        perm[static_cast<std::size_t>(src[i])] = dst[i];
    }
    std::vector<int> rest_src;
    std::vector<int> rest_dst;
    for (int e = 0; e < n; ++e) {
        if (!from.contains(e)) {
            rest_src.push_back(e);
        }
        if (!to.contains(e)) {
            rest_dst.push_back(e);
        }
    }
    for (std::size_t i = 0; i < rest_src.size(); ++i) {
        perm[static_cast<std::size_t>(rest_src[i])] = rest_dst[i];
    }
    stats.witness = TransitivityWitness{from, to, std::move(perm)};
    return stats;
}

Eigen::VectorXi hypersimplex_vertex(Circuit c, int n)
{
    Eigen::VectorXi v = Eigen::VectorXi::Zero(n);
    for (const int m : c.members()) {
        if (m >= n) {
            throw PreconditionError("hypersimplex_vertex: circuit not contained in [n]");
        }
        v(m) = 1;
    }
    return v;
}

}  // namespace disc
