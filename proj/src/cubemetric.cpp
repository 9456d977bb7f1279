#include "disc/cubemetric.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <thread>

namespace disc
{

namespace
{

std::string num(std::uint64_t v) { return std::to_string(v); }

std::string dist_text(std::uint16_t d) { return d == kUnreachable ? "inf" : std::to_string(d); }

ClaimReport make_claim(std::string claim, GraphKind kind)
{
    ClaimReport report;
    report.claim = std::move(claim);
    report.graph = std::string(to_string(kind));
    return report;
}

// Deterministic thinning of a candidate list down to at most `cap` entries.
template <typename T>
std::vector<T> thin(std::vector<T> items, std::size_t cap)
{
    if (items.size() <= cap) {
        return items;
    }
    std::vector<T> out;
    out.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i) {
        out.push_back(items[i * items.size() / cap]);
    }
    return out;
}

}  // namespace

Mode Mode::free(int width)
{
    if (width < 0 || width > kMaxSupportWidth) {
        throw PreconditionError("free mode width must lie in [0, 64]");
    }
    return Mode(ModeKind::free, width, nullptr);
}

Mode Mode::geometric(const Lattice& lat) { return Mode(ModeKind::geometric, lat.width(), &lat); }

std::string_view to_string(GraphKind kind) noexcept
{
    return kind == GraphKind::hasse ? "hasse" : "toggle";
}

CoverGraph::CoverGraph(Mode mode, GraphKind kind, std::vector<Support> vertices,
                       std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : mode_(mode), kind_(kind), vertices_(std::move(vertices)), edges_(std::move(edges))
{
    std::sort(edges_.begin(), edges_.end());
    std::vector<std::uint32_t> degree(vertices_.size(), 0);
    for (const auto& [u, v] : edges_) {
        ++degree[u];
        ++degree[v];
    }
    offsets_.assign(vertices_.size() + 1, 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        offsets_[v + 1] = offsets_[v] + degree[v];
    }
    adjacency_.resize(offsets_.back());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    }
    sorted_ids_.resize(vertices_.size());
    std::iota(sorted_ids_.begin(), sorted_ids_.end(), 0U);
    std::sort(sorted_ids_.begin(), sorted_ids_.end(),
              [&](std::uint32_t a, std::uint32_t b) { return vertices_[a].bits < vertices_[b].bits; });
    sorted_bits_.reserve(vertices_.size());
    for (const auto id : sorted_ids_) {
        sorted_bits_.push_back(vertices_[id].bits);
    }
}

CoverGraph CoverGraph::build(const Mode& mode, GraphKind kind)
{
    std::vector<Support> vertices;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    const int width = mode.width();
    if (mode.kind() == ModeKind::free) {
        if (width > kMaxFreeWidth) {
            throw ScaleGuardError("free-mode cover graph limited to N <= " + num(kMaxFreeWidth) +
                                  " circuits (2^N vertices)");
        }
        const std::uint64_t count = std::uint64_t{1} << width;
        for (std::uint64_t b = 0; b < count; ++b) {
            vertices.push_back(Support{b});
        }
        std::sort(vertices.begin(), vertices.end(), [&](Support a, Support b) {
            if (a.size() != b.size()) {
                return a.size() < b.size();
            }
            return order_key(a, width) < order_key(b, width);
        });
    } else {
        const Lattice& lat = *mode.lattice();
        if (lat.size() > kMaxGraphVertices) {
            throw ScaleGuardError("cover graph limited to " + num(kMaxGraphVertices) + " vertices");
        }
        for (const auto& e : lat.elements()) {
            vertices.push_back(e.support);
        }
        if (kind == GraphKind::hasse) {
            for (const auto& [lo, hi] : lat.covers()) {
                edges.emplace_back(static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi));
            }
            return CoverGraph(mode, kind, std::move(vertices), std::move(edges));
        }
    }
    // Single-toggle edges between admissible supports.
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        index.emplace(vertices[v].bits, static_cast<std::uint32_t>(v));
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        for (int i = 0; i < width; ++i) {
            const auto it = index.find(vertices[v].toggled(i).bits);
            if (it != index.end() && it->second > v) {
                edges.emplace_back(static_cast<std::uint32_t>(v), it->second);
            }
        }
    }
    return CoverGraph(mode, kind, std::move(vertices), std::move(edges));
}

std::optional<std::size_t> CoverGraph::find(Support s) const
{
    const auto it = std::lower_bound(sorted_bits_.begin(), sorted_bits_.end(), s.bits);
    if (it == sorted_bits_.end() || *it != s.bits) {
        return std::nullopt;
    }
    return sorted_ids_[static_cast<std::size_t>(it - sorted_bits_.begin())];
}

std::span<const std::uint32_t> CoverGraph::neighbors(std::size_t v) const
{
    return std::span<const std::uint32_t>(adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::vector<std::uint16_t> CoverGraph::bfs(std::size_t source) const
{
    std::vector<std::uint16_t> dist(size(), kUnreachable);
    std::vector<std::uint32_t> queue;
    queue.reserve(size());
    dist[source] = 0;
    queue.push_back(static_cast<std::uint32_t>(source));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        for (const std::uint32_t w : neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = static_cast<std::uint16_t>(dist[u] + 1);
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const CoverGraph& graph, unsigned threads)
{
    const auto n = static_cast<Eigen::Index>(graph.size());
    DistanceMatrix dist(n, n);
    threads = std::max(1U, threads);
    auto work = [&](unsigned t) {
        for (Eigen::Index s = t; s < n; s += threads) {
            const auto row = graph.bfs(static_cast<std::size_t>(s));
            for (Eigen::Index j = 0; j < n; ++j) {
                dist(s, j) = row[static_cast<std::size_t>(j)];
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
    }
    return dist;
}

MedianResult median(Support f, Support g, Support h, const Mode& mode)
{
    const Support m = majority(f, g, h);
    return MedianResult{m, mode.admissible(m)};
}

DistanceTheoremReport verify_distance_theorem(const CoverGraph& graph, const DistanceMatrix& dist)
{
    DistanceTheoremReport report{make_claim("cover", graph.kind()), make_claim("distance", graph.kind()),
                                 make_claim("partialcube", graph.kind())};

    for (const auto& [u, v] : graph.edges()) {
        const Support a = graph.vertex(u);
        const Support b = graph.vertex(v);
        const int sym = distance(a, b);
        report.cover.record(sym == 1, [&] {
            return Counterexample{{a, b}, "|F(X) xor F(Y)| = " + num(sym) + " != 1 for a cover pair"};
        });
    }

    bool connected = true;
    bool isometric = true;
    for (std::size_t u = 0; u < graph.size(); ++u) {
        for (std::size_t v = u + 1; v < graph.size(); ++v) {
            const std::uint16_t d = dist(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
            const int hamming = distance(graph.vertex(u), graph.vertex(v));
            connected = connected && d != kUnreachable;
            const bool ok = d == hamming;
            isometric = isometric && ok;
            report.distance.record(ok, [&] {
                return Counterexample{{graph.vertex(u), graph.vertex(v)},
                                      "d(X,Y) = " + dist_text(d) + " != |F(X) xor F(Y)| = " + num(hamming)};
            });
        }
    }

    std::vector<std::uint64_t> bits;
    for (const Support s : graph.vertices()) {
        bits.push_back(s.bits);
    }
    std::sort(bits.begin(), bits.end());
    const bool injective = std::adjacent_find(bits.begin(), bits.end()) == bits.end();
    report.partial_cube.record(injective, [&] {
        return Counterexample{{}, "phi(X) = chi_F(X) is not injective"};
    });
    report.partial_cube.record(connected, [&] {
        return Counterexample{{}, "cover graph is disconnected"};
    });
    report.partial_cube.record(isometric, [&] {
        std::vector<Support> first;
        if (!report.distance.counterexamples.empty()) {
            first = report.distance.counterexamples.front().supports;
        }
        return Counterexample{first, "phi is not an isometry onto its image in Q_N (" +
                                         num(report.distance.failures) + " pairs violate d = Hamming)"};
    });
    return report;
}

ClaimReport verify_median_graph(const CoverGraph& graph, const DistanceMatrix& dist)
{
    ClaimReport report = make_claim("median", graph.kind());
    const std::size_t n = graph.size();
    if (n > kMaxMedianVertices) {
        throw ScaleGuardError("median-graph check limited to " + num(kMaxMedianVertices) + " vertices");
    }
    const std::size_t words = (n + 63) / 64;
    auto pair_index = [n](std::size_t a, std::size_t b) { return a * (2 * n - a - 1) / 2 + (b - a - 1); };
    // Columns are contiguous; distances are symmetric.
    auto column = [&](std::size_t a) { return dist.data() + a * n; };

    // Interval bitsets I(a, b) = { m : d(a,m) + d(m,b) = d(a,b) } for a < b.
    std::vector<std::uint64_t> intervals(n * (n - (n > 0 ? 1 : 0)) / 2 * words, 0);
    for (std::size_t a = 0; a < n; ++a) {
        const std::uint16_t* da = column(a);
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::uint16_t* db = column(b);
            const std::uint16_t dab = da[b];
            if (dab == kUnreachable) {
                continue;
            }
            std::uint64_t* row = &intervals[pair_index(a, b) * words];
            for (std::size_t m = 0; m < n; ++m) {
                // Unreachable entries are 0xFFFF, so their sums never equal a finite dab.
                if (static_cast<std::uint32_t>(da[m]) + db[m] == dab) {
                    row[m / 64] |= std::uint64_t{1} << (m % 64);
                }
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::uint64_t* ab = &intervals[pair_index(a, b) * words];
            for (std::size_t c = b + 1; c < n; ++c) {
                const std::uint64_t* ac = &intervals[pair_index(a, c) * words];
                const std::uint64_t* bc = &intervals[pair_index(b, c) * words];
                int count = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    const std::uint64_t common = ab[w] & ac[w] & bc[w];
                    if (common != 0) {
                        count += std::popcount(common);
                    }
                }
                report.record(count == 1, [&] {
                    const Support x = graph.vertex(a);
                    const Support y = graph.vertex(b);
                    const Support z = graph.vertex(c);
                    const MedianResult m = median(x, y, z, graph.mode());
                    return Counterexample{
                        {x, y, z, m.support},
                        "vertices on all three geodesics = " + num(static_cast<std::uint64_t>(count)) +
                            " != 1; majority support admissible = " + (m.admissible ? "true" : "false")};
                });
            }
        }
    }
    return report;
}

DependencyPoset dependency_poset(Support f, Support g, const Mode& mode)
{
    const Support diff = f ^ g;
    if (diff.size() > kMaxSymmetricDifference) {
        throw ScaleGuardError("|F(X) xor F(Y)| = " + num(static_cast<std::uint64_t>(diff.size())) +
                              " exceeds " + num(kMaxSymmetricDifference));
    }
    if (!mode.admissible(f) || !mode.admissible(g)) {
        throw PreconditionError("dependency poset endpoints must be admissible supports");
    }
    DependencyPoset poset;
    poset.from = f;
    poset.to = g;
    poset.mode = mode.kind();
    for (int i = 0; i < mode.width(); ++i) {
        if (diff.contains(i)) {
            poset.ground.push_back(i);
        }
    }
    const int s = static_cast<int>(poset.ground.size());
    const std::uint32_t full = (1U << s) - 1;
    auto state_support = [&](std::uint32_t m) {
        Support out = f;
        for (int p = 0; p < s; ++p) {
            if ((m >> p) & 1U) {
                out = out.toggled(poset.ground[static_cast<std::size_t>(p)]);
            }
        }
        return out;
    };

    // States reachable from f, and states from which g is reachable.
    std::vector<char> admissible(full + 1), forward(full + 1, 0), backward(full + 1, 0);
    for (std::uint32_t m = 0; m <= full; ++m) {
        admissible[m] = mode.admissible(state_support(m));
    }
    forward[0] = admissible[0];
    for (std::uint32_t m = 1; m <= full; ++m) {
        if (!admissible[m]) {
            continue;
        }
        for (std::uint32_t rest = m; rest != 0 && !forward[m]; rest &= rest - 1) {
            forward[m] = forward[m & ~(rest & -rest)];
        }
    }
    backward[full] = admissible[full];
    for (std::uint32_t m = full; m-- > 0;) {
        if (!admissible[m]) {
            continue;
        }
        for (std::uint32_t rest = full & ~m; rest != 0 && !backward[m]; rest &= rest - 1) {
            backward[m] = backward[m | (rest & -rest)];
        }
    }
    poset.sequences_exist = forward[full] != 0;
    if (!poset.sequences_exist) {
        return poset;
    }

    // J can precede I iff some state on a complete sequence has J toggled and I not.
    std::vector<std::uint32_t> can_precede(static_cast<std::size_t>(s), 0);
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (!forward[m] || !backward[m]) {
            continue;
        }
        for (int j = 0; j < s; ++j) {
            if ((m >> j) & 1U) {
                can_precede[static_cast<std::size_t>(j)] |= ~m & full;
            }
        }
    }
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            if (i != j && !((can_precede[static_cast<std::size_t>(j)] >> i) & 1U)) {
                poset.relations.emplace_back(poset.ground[static_cast<std::size_t>(i)],
                                             poset.ground[static_cast<std::size_t>(j)]);
            }
        }
    }
    std::sort(poset.relations.begin(), poset.relations.end());
    return poset;
}

std::uint64_t count_linear_extensions(int size, std::span<const std::pair<int, int>> relations)
{
    if (size < 0 || size > 24) {
        throw ScaleGuardError("linear-extension counting limited to 24 elements");
    }
    std::vector<std::uint32_t> predecessors(static_cast<std::size_t>(size), 0);
    for (const auto& [before, after] : relations) {
        if (before < 0 || after < 0 || before >= size || after >= size) {
            throw PreconditionError("relation endpoint outside the poset");
        }
        predecessors[static_cast<std::size_t>(after)] |= 1U << before;
    }
    const std::uint32_t full = size == 0 ? 0 : (std::uint32_t{1} << size) - 1;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(full) + 1, 0);
    ways[0] = 1;
    for (std::uint32_t placed = 0; placed <= full; ++placed) {
        if (ways[placed] == 0) {
            continue;
        }
        for (int e = 0; e < size; ++e) {
            if (!((placed >> e) & 1U) && (predecessors[static_cast<std::size_t>(e)] & ~placed) == 0) {
                ways[placed | (1U << e)] += ways[placed];
            }
        }
    }
    return ways[full];
}

GeodesicSet geodesics(Support f, Support g, const Mode& mode, bool enumerate)
{
    GeodesicSet out;
    out.poset = dependency_poset(f, g, mode);
    const auto& ground = out.poset.ground;
    const int s = static_cast<int>(ground.size());
    const std::uint32_t full = (1U << s) - 1;

    std::vector<char> admissible(full + 1);
    for (std::uint32_t m = 0; m <= full; ++m) {
        Support cur = f;
        for (int p = 0; p < s; ++p) {
            if ((m >> p) & 1U) {
                cur = cur.toggled(ground[static_cast<std::size_t>(p)]);
            }
        }
        admissible[m] = mode.admissible(cur);
    }
    std::vector<std::uint64_t> ways(full + 1, 0);
    ways[0] = admissible[0] ? 1 : 0;
    for (std::uint32_t m = 1; m <= full; ++m) {
        if (!admissible[m]) {
            continue;
        }
        for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
            ways[m] += ways[m & ~(rest & -rest)];
        }
    }
    out.count = ways[full];

    // Linear extensions use only the relations, by position in the ground set.
    std::vector<std::pair<int, int>> positional;
    for (const auto& [a, b] : out.poset.relations) {
        const auto pa = std::lower_bound(ground.begin(), ground.end(), a) - ground.begin();
        const auto pb = std::lower_bound(ground.begin(), ground.end(), b) - ground.begin();
        positional.emplace_back(static_cast<int>(pa), static_cast<int>(pb));
    }
    out.linear_extensions = count_linear_extensions(s, positional);
    out.agree = out.poset.sequences_exist && out.count == out.linear_extensions;

    if (enumerate) {
        if (out.count > kMaxEnumeratedPaths) {
            throw ScaleGuardError("refusing to enumerate " + num(out.count) + " geodesics (limit " +
                                  num(kMaxEnumeratedPaths) + ")");
        }
        // Ways back to `full` from each state prunes dead branches.
        std::vector<char> finishes(full + 1, 0);
        finishes[full] = admissible[full];
        for (std::uint32_t m = full; m-- > 0;) {
            if (!admissible[m]) {
                continue;
            }
            for (int p = 0; p < s && !finishes[m]; ++p) {
                if (!((m >> p) & 1U)) {
                    finishes[m] = finishes[m | (1U << p)];
                }
            }
        }
        std::vector<std::vector<int>> paths;
        std::vector<int> current;
        std::function<void(std::uint32_t)> walk = [&](std::uint32_t m) {
            if (m == full) {
                paths.push_back(current);
                return;
            }
            for (int p = 0; p < s; ++p) {
                const std::uint32_t next = m | (1U << p);
                if (next != m && finishes[next]) {
                    current.push_back(ground[static_cast<std::size_t>(p)]);
                    walk(next);
                    current.pop_back();
                }
            }
        };
        if (out.count > 0) {
            walk(0);
        }
        out.paths = std::move(paths);
    }
    return out;
}

IntervalCubeReport verify_interval_cube(const CoverGraph& graph, Support lower, Support upper)
{
    if (!lower.subset_of(upper)) {
        throw PreconditionError("interval: lower support is not contained in upper support");
    }
    const auto lower_id = graph.find(lower);
    const auto upper_id = graph.find(upper);
    if (!lower_id || !upper_id) {
        throw PreconditionError("interval endpoints must be vertices of the cover graph");
    }
    const Support extra = upper - lower;
    if (extra.size() > kMaxIntervalDimension) {
        throw ScaleGuardError("interval dimension limited to " + num(kMaxIntervalDimension));
    }

    IntervalCubeReport report;
    report.lower = lower;
    report.upper = upper;
    report.dimension = extra.size();

    std::vector<char> member(graph.size(), 0);
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < graph.size(); ++v) {
        const Support s = graph.vertex(v);
        if (lower.subset_of(s) && s.subset_of(upper)) {
            member[v] = 1;
            members.push_back(v);
        }
    }
    report.elements = members.size();
    const std::uint64_t expected = std::uint64_t{1} << report.dimension;
    report.size_matches = report.elements == expected;
    if (!report.size_matches) {
        report.counterexamples.push_back(
            {{lower, upper}, "|[X,Y]| = " + num(report.elements) + " != 2^" +
                                 num(static_cast<std::uint64_t>(report.dimension)) + " = " + num(expected)});
    }

    // T -> F(x) u T over all subsets T of F(y) \ F(x).
    std::vector<int> free_bits;
    for (int i = 0; i < kMaxSupportWidth; ++i) {
        if (extra.contains(i)) {
            free_bits.push_back(i);
        }
    }
    report.bijection = true;
    for (std::uint64_t t = 0; t < expected; ++t) {
        Support s = lower;
        for (std::size_t p = 0; p < free_bits.size(); ++p) {
            if ((t >> p) & 1U) {
                s = s | Support::singleton(free_bits[p]);
            }
        }
        if (!graph.find(s)) {
            if (report.bijection && report.counterexamples.size() < kMaxCounterexamples) {
                report.counterexamples.push_back({{lower, upper, s}, "F(X) u T is not admissible"});
            }
            report.bijection = false;
        }
    }

    // Induced subgraph is Q_d: 2^d members, each with d in-interval neighbors at Hamming distance 1.
    report.cube = report.size_matches;
    for (const std::size_t v : members) {
        int inside = 0;
        for (const std::uint32_t w : graph.neighbors(v)) {
            if (!member[w]) {
                continue;
            }
            ++inside;
            if (distance(graph.vertex(v), graph.vertex(w)) != 1) {
                if (report.cube && report.counterexamples.size() < kMaxCounterexamples) {
                    report.counterexamples.push_back(
                        {{graph.vertex(v), graph.vertex(w)}, "interval edge with Hamming distance != 1"});
                }
                report.cube = false;
            }
        }
        if (inside != report.dimension) {
            if (report.cube && report.counterexamples.size() < kMaxCounterexamples) {
                report.counterexamples.push_back(
                    {{graph.vertex(v)}, "degree inside interval = " + num(static_cast<std::uint64_t>(inside)) +
                                            " != " + num(static_cast<std::uint64_t>(report.dimension))});
            }
            report.cube = false;
        }
    }

    // Convexity: from each member, mark vertices lying on a shortest path to some member.
    report.convex = true;
    std::vector<std::uint32_t> order;
    std::vector<char> toward(graph.size());
    for (const std::size_t z : members) {
        const std::vector<std::uint16_t> dz = graph.bfs(z);
        order.clear();
        for (std::size_t v = 0; v < graph.size(); ++v) {
            if (dz[v] != kUnreachable) {
                order.push_back(static_cast<std::uint32_t>(v));
            }
        }
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return dz[a] != dz[b] ? dz[a] > dz[b] : a < b;
        });
        std::fill(toward.begin(), toward.end(), 0);
        for (const std::uint32_t v : order) {
            if (member[v]) {
                toward[v] = 1;
                continue;
            }
            for (const std::uint32_t w : graph.neighbors(v)) {
                if (dz[w] == dz[v] + 1 && toward[w]) {
                    toward[v] = 1;
                    break;
                }
            }
            if (toward[v]) {
                if (report.convex && report.counterexamples.size() < kMaxCounterexamples) {
                    report.counterexamples.push_back(
                        {{graph.vertex(z), graph.vertex(v)},
                         "vertex outside [X,Y] lies on a geodesic between interval members"});
                }
                report.convex = false;
            }
        }
    }
    return report;
}

IntervalCubeReport verify_interval_cube(const Lattice& lat, ElementId x, ElementId y)
{
    if (!lat.less_equal(x, y)) {
        throw PreconditionError("interval: lower element is not below upper element");
    }
    const CoverGraph graph = CoverGraph::build(Mode::geometric(lat), GraphKind::hasse);
    return verify_interval_cube(graph, lat.element(x).support, lat.element(y).support);
}

ClaimReport verify_geodesic_claim(const CoverGraph& graph, const DistanceMatrix& dist, std::size_t max_pairs)
{
    ClaimReport report = make_claim("geodesic", graph.kind());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::size_t u = 0; u < graph.size(); ++u) {
        for (std::size_t v = u + 1; v < graph.size(); ++v) {
            if (distance(graph.vertex(u), graph.vertex(v)) <= kMaxSymmetricDifference) {
                pairs.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
            }
        }
    }
    pairs = thin(std::move(pairs), max_pairs);

    std::vector<std::uint32_t> order;
    std::vector<std::uint64_t> count(graph.size());
    for (const auto& [u, v] : pairs) {
        const Support a = graph.vertex(u);
        const Support b = graph.vertex(v);
        const std::uint16_t duv = dist(u, v);
        // Shortest-path count in the graph, layer by layer from u.
        std::uint64_t graph_paths = 0;
        if (duv != kUnreachable) {
            order.clear();
            for (std::size_t w = 0; w < graph.size(); ++w) {
                const auto e = static_cast<Eigen::Index>(w);
                if (dist(u, e) != kUnreachable && dist(e, v) != kUnreachable && dist(u, e) + dist(e, v) == duv) {
                    order.push_back(static_cast<std::uint32_t>(w));
                }
            }
            std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
                return dist(u, x) != dist(u, y) ? dist(u, x) < dist(u, y) : x < y;
            });
            for (const std::uint32_t w : order) {
                count[w] = 0;
            }
            count[u] = 1;
            for (const std::uint32_t w : order) {
                if (w == u) {
                    continue;
                }
                for (const std::uint32_t p : graph.neighbors(w)) {
                    if (dist(u, p) + 1 == dist(u, w) && dist(u, p) + dist(p, v) == duv) {
                        count[w] += count[p];
                    }
                }
            }
            graph_paths = count[v];
        }
        const GeodesicSet gs = geodesics(a, b, graph.mode(), false);
        const int sym = distance(a, b);
        const bool ok = duv == sym && graph_paths == gs.count && gs.agree;
        report.record(ok, [&] {
            return Counterexample{{a, b},
                                  "d = " + dist_text(duv) + ", |S| = " + num(static_cast<std::uint64_t>(sym)) +
                                      ", graph geodesics = " + num(graph_paths) + ", toggle sequences = " +
                                      num(gs.count) + ", linear extensions = " + num(gs.linear_extensions)};
        });
    }
    return report;
}

ClaimReport verify_interval_claim(const CoverGraph& graph, std::size_t max_pairs)
{
    ClaimReport report = make_claim("interval", graph.kind());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::size_t u = 0; u < graph.size(); ++u) {
        for (std::size_t v = 0; v < graph.size(); ++v) {
            const Support a = graph.vertex(u);
            const Support b = graph.vertex(v);
            if (u != v && a.subset_of(b) && (b - a).size() <= kMaxIntervalDimension) {
                pairs.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
            }
        }
    }
    pairs = thin(std::move(pairs), max_pairs);
    for (const auto& [u, v] : pairs) {
        const IntervalCubeReport r = verify_interval_cube(graph, graph.vertex(u), graph.vertex(v));
        report.record(r.pass(), [&] {
            return Counterexample{{r.lower, r.upper},
                                  "|[X,Y]| = " + num(r.elements) + " vs 2^" +
                                      num(static_cast<std::uint64_t>(r.dimension)) +
                                      "; bijection = " + (r.bijection ? "true" : "false") +
                                      "; cube = " + (r.cube ? "true" : "false") +
                                      "; convex = " + (r.convex ? "true" : "false")};
        });
    }
    return report;
}

}  // namespace disc
