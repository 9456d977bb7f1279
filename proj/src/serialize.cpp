#include "disc/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace disc
{

Json to_json(const ArrangementSpec& spec)
{
    Json normals = Json::array();
    for (Eigen::Index i = 0; i < spec.normals.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < spec.normals.cols(); ++j) {
            row.push_back(to_string(spec.normals(i, j)));
        }
        normals.push_back(std::move(row));
    }
    return Json{{"n", spec.n}, {"k", spec.k}, {"seed", spec.seed}, {"normals", std::move(normals)}};
}

ArrangementSpec spec_from_json(const Json& j)
{
    try {
        ArrangementSpec spec;
        spec.n = j.at("n").get<int>();
        spec.k = j.at("k").get<int>();
        spec.seed = j.at("seed").get<std::uint64_t>();
        const Json& rows = j.at("normals");
        if (!rows.is_array() || static_cast<int>(rows.size()) != spec.n) {
            throw PreconditionError("normals must have n rows");
        }
        spec.normals.resize(spec.n, spec.k);
        for (int i = 0; i < spec.n; ++i) {
            const Json& row = rows.at(static_cast<std::size_t>(i));
            if (!row.is_array() || static_cast<int>(row.size()) != spec.k) {
                throw PreconditionError("every normal must have k entries");
            }
            for (int c = 0; c < spec.k; ++c) {
                spec.normals(i, c) = parse_rational(row.at(static_cast<std::size_t>(c)).get<std::string>());
            }
        }
        return spec;
    } catch (const Json::exception& e) {
        throw PreconditionError(std::string("malformed arrangement spec: ") + e.what());
    }
}

Json to_json(const Lattice& lat)
{
    Json elements = Json::array();
    for (ElementId id = 0; id < lat.size(); ++id) {
        const LatticeElement& e = lat.element(id);
        elements.push_back({{"id", id}, {"support", to_bitstring(e.support, lat.width())}, {"rank", e.rank}});
    }
    Json covers = Json::array();
    for (const auto& [lo, hi] : lat.covers()) {
        covers.push_back({lo, hi});
    }
    return Json{{"spec", to_json(lat.spec())},
                {"N", lat.width()},
                {"elements", std::move(elements)},
                {"covers", std::move(covers)},
                {"levels", lat.levels()}};
}

Json lattice_summary(const Lattice& lat)
{
    Json per_rank = Json::array();
    for (const auto& level : lat.levels()) {
        per_rank.push_back(level.size());
    }
    return Json{{"elements", lat.size()}, {"covers", lat.covers().size()}, {"per_rank", std::move(per_rank)}};
}

Json to_json(const JohnsonStats& stats)
{
    Json j{{"n", stats.n},
           {"k", stats.k},
           {"vertices", stats.vertices},
           {"degree", stats.degree},
           {"degree_checked", stats.degree_checked},
           {"diameter", stats.diameter},
           {"distance_formula_checked", stats.distance_formula_checked},
           {"is_vertex_transitive_witness",
            {{"from", to_label(stats.witness.from)},
             {"to", to_label(stats.witness.to)},
             {"permutation", [&] {
                  std::vector<int> one_based;
                  for (const int p : stats.witness.permutation) {
                      one_based.push_back(p + 1);
                  }
                  return one_based;
              }()}}}};
    j["diameter_bfs"] = stats.diameter_bfs ? Json(*stats.diameter_bfs) : Json(nullptr);
    return j;
}

namespace
{

Json bitstrings(const std::vector<Support>& supports, int width)
{
    Json out = Json::array();
    for (const Support s : supports) {
        out.push_back(to_bitstring(s, width));
    }
    return out;
}

Json counterexamples_json(const std::vector<Counterexample>& list, int width)
{
    Json out = Json::array();
    for (const auto& c : list) {
        out.push_back({{"supports", bitstrings(c.supports, width)}, {"equation", c.equation}});
    }
    return out;
}

}  // namespace

Json to_json(const ClaimReport& report, int width)
{
    return Json{{"claim", report.claim},
                {"graph", report.graph},
                {"verdict", report.pass ? "pass" : "fail"},
                {"checked", report.checked},
                {"failures", report.failures},
                {"counterexamples", counterexamples_json(report.counterexamples, width)}};
}

Json to_json(const DependencyPoset& poset, int width)
{
    Json relations = Json::array();
    for (const auto& [a, b] : poset.relations) {
        relations.push_back({a, b});
    }
    return Json{{"from", to_bitstring(poset.from, width)},
                {"to", to_bitstring(poset.to, width)},
                {"mode", poset.mode == ModeKind::free ? "free" : "geometric"},
                {"ground", poset.ground},
                {"relations", std::move(relations)},
                {"sequences_exist", poset.sequences_exist}};
}

Json to_json(const GeodesicSet& set, int width)
{
    Json j{{"count", set.count},
           {"linear_extensions", set.linear_extensions},
           {"agree", set.agree},
           {"poset", to_json(set.poset, width)}};
    j["paths"] = set.paths ? Json(*set.paths) : Json(nullptr);
    return j;
}

Json to_json(const IntervalCubeReport& report, int width)
{
    return Json{{"lower", to_bitstring(report.lower, width)},
                {"upper", to_bitstring(report.upper, width)},
                {"dimension", report.dimension},
                {"elements", report.elements},
                {"size_matches", report.size_matches},
                {"bijection", report.bijection},
                {"cube", report.cube},
                {"convex", report.convex},
                {"verdict", report.pass() ? "pass" : "fail"},
                {"counterexamples", counterexamples_json(report.counterexamples, width)}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string lattice_dot(const Lattice& lat)
{
    std::ostringstream out;
    out << "graph lattice {\n  node [shape=box];\n";
    for (std::size_t r = 0; r < lat.levels().size(); ++r) {
        out << "  subgraph rank_" << r << " {\n    rank=same;\n";
        for (const ElementId id : lat.levels()[r]) {
            out << "    e" << id << " [label=\"" << to_bitstring(lat.element(id).support, lat.width()) << "\"];\n";
        }
        out << "  }\n";
    }
    for (const auto& [lo, hi] : lat.covers()) {
        out << "  e" << lo << " -- e" << hi << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string johnson_dot(int n, int k)
{
    const JohnsonGraph graph(n, k);
    std::ostringstream out;
    out << "graph johnson {\n";
    for (std::uint64_t i = 0; i < graph.vertex_count(); ++i) {
        out << "  v" << i << " [label=\"" << to_label(circuit_unrank(CircuitIndex{i}, n, k)) << "\"];\n";
    }
    for (std::uint64_t i = 0; i < graph.vertex_count(); ++i) {
        for (const Circuit nb : graph.neighbors(circuit_unrank(CircuitIndex{i}, n, k))) {
            const std::uint64_t j = circuit_rank(nb, k).value;
            if (j > i) {
                out << "  v" << i << " -- v" << j << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::string format_double(double v)
{
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, result.ptr);
}

std::string format_decimal(const Decimal& v, int digits)
{
    return v.str(digits, std::ios_base::scientific);
}

std::string sample_csv(const ExperimentResult& result)
{
    std::string out = "trial,T,distance\n";
    for (std::size_t i = 0; i < result.overlap.size(); ++i) {
        out += std::to_string(i) + "," + std::to_string(result.overlap[i]) + "," +
               std::to_string(result.distance[i]) + "\n";
    }
    return out;
}

std::string threshold_csv(const std::vector<ThresholdRow>& rows)
{
    std::string out = "exponent,r,exact_intersect,empirical_intersect,stderr\n";
    for (const auto& row : rows) {
        out += format_double(row.exponent) + "," + std::to_string(row.r) + "," + format_double(row.exact_value) +
               "," + format_double(row.empirical) + "," + format_double(row.stderr_empirical) + "\n";
    }
    return out;
}

std::string tv_csv(const std::vector<TvRow>& rows)
{
    std::string out = "N,r,tv,ratio_tv_N2_r3\n";
    for (const auto& row : rows) {
        out += std::to_string(row.N) + "," + std::to_string(row.r) + "," + format_decimal(row.tv.tv) + "," +
               format_decimal(row.tv.ratio) + "\n";
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace disc
