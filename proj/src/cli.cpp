#include "disc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "disc/errors.hpp"
#include "disc/serialize.hpp"

namespace disc::cli
{

namespace
{

const std::vector<std::string> kClaimOrder = {"cover", "distance", "partialcube", "median", "geodesic", "interval"};

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

class Stopwatch
{
public:
    std::string elapsed() const
    {
        const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
        return fmt("%.2fs", d.count());
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t\r") + 1);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what)
{
    std::vector<T> out;
    for (const auto& item : split(text, ',')) {
        std::istringstream in(item);
        T v{};
        if (!(in >> v) || !in.eof()) {
            throw PreconditionError(std::string("cannot parse ") + what + " entry '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw PreconditionError(std::string("empty ") + what + " list");
    }
    return out;
}

std::vector<std::string> parse_claims(const std::string& text)
{
    std::set<std::string> wanted;
    for (const auto& c : split(text, ',')) {
        if (c == "all") {
            return kClaimOrder;
        }
        if (std::find(kClaimOrder.begin(), kClaimOrder.end(), c) == kClaimOrder.end()) {
            throw PreconditionError("unknown claim '" + c + "'");
        }
        wanted.insert(c);
    }
    std::vector<std::string> out;
    for (const auto& c : kClaimOrder) {
        if (wanted.contains(c)) {
            out.push_back(c);
        }
    }
    if (out.empty()) {
        throw PreconditionError("no claims selected");
    }
    return out;
}

void emit(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << content;
    } else {
        write_file_atomic(path, content);
    }
}

// ---------------------------------------------------------------- johnson

struct JohnsonArgs
{
    int n = 0;
    int k = 0;
    bool stats = false;
    std::string dot;
};

int cmd_johnson(const JohnsonArgs& a, std::ostream& out)
{
    const Stopwatch clock;
    const JohnsonStats stats = johnson_stats(a.n, a.k);
    if (!a.dot.empty()) {
        write_file_atomic(a.dot, johnson_dot(a.n, a.k));
    }
    if (a.stats) {
        out << canonical_dump(to_json(stats));
    }
    out << "johnson J(" << a.n << "," << a.k + 1 << "): " << stats.vertices << " vertices, degree " << stats.degree
        << ", diameter " << stats.diameter << ", checks "
        << (stats.degree_checked && stats.distance_formula_checked ? "ok" : "FAILED") << " (" << clock.elapsed()
        << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------- lattice

struct LatticeArgs
{
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string dot;
};

int cmd_lattice(const LatticeArgs& a, std::ostream& out)
{
    const Stopwatch clock;
    const Lattice lat = build_lattice(make_arrangement_spec(a.n, a.k, a.seed));
    write_file_atomic(a.out, canonical_dump(to_json(lat)));
    if (!a.dot.empty()) {
        write_file_atomic(a.dot, lattice_dot(lat));
    }
    out << "lattice B(" << a.n << "," << a.k << ") seed " << a.seed << ": " << lat.size() << " elements, "
        << lat.covers().size() << " covers, rank " << lat.levels().size() - 1 << " -> " << a.out << " ("
        << clock.elapsed() << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs
{
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::string mode = "free";
    int N = 0;
    std::string claims = "all";
    std::string report;
    unsigned threads = 1;
    std::optional<std::uint64_t> compare_seed;
};

std::vector<ClaimReport> run_claims(const CoverGraph& graph, const std::vector<std::string>& claims, unsigned threads)
{
    const bool needs_distances = std::any_of(claims.begin(), claims.end(), [](const std::string& c) {
        return c != "interval";
    });
    DistanceMatrix dist;
    if (needs_distances) {
        dist = all_pairs_distances(graph, threads);
    }
    std::optional<DistanceTheoremReport> theorem;
    std::vector<ClaimReport> out;
    for (const auto& claim : claims) {
        if (claim == "cover" || claim == "distance" || claim == "partialcube") {
            if (!theorem) {
                theorem = verify_distance_theorem(graph, dist);
            }
            out.push_back(claim == "cover" ? theorem->cover
                          : claim == "distance" ? theorem->distance
                                                : theorem->partial_cube);
        } else if (claim == "median") {
            out.push_back(verify_median_graph(graph, dist));
        } else if (claim == "geodesic") {
            out.push_back(verify_geodesic_claim(graph, dist));
        } else {
            out.push_back(verify_interval_claim(graph));
        }
    }
    return out;
}

Json boolean_lattice_summary(int width)
{
    Json per_rank = Json::array();
    for (int i = 0; i <= width; ++i) {
        per_rank.push_back(binom64(width, i));
    }
    const std::uint64_t elements = std::uint64_t{1} << width;
    return Json{{"elements", elements},
                {"covers", width == 0 ? 0 : static_cast<std::uint64_t>(width) * (elements / 2)},
                {"per_rank", std::move(per_rank)}};
}

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    const Stopwatch clock;
    const std::vector<std::string> claims = parse_claims(a.claims);
    Json bundle{{"format_version", kFormatVersion}, {"mode", a.mode}, {"seed", a.seed}};
    bundle["seed_comparison"] = nullptr;
    std::vector<ClaimReport> reports;
    int width = 0;

    if (a.mode == "free") {
        if (a.N > 0) {
            width = a.N;
            bundle["n"] = nullptr;
            bundle["k"] = nullptr;
        } else {
            if (a.n <= 0 || a.k <= 0) {
                throw PreconditionError("free mode needs --N or both --n and --k");
            }
            width = static_cast<int>(circuit_count(a.n, a.k));
            bundle["n"] = a.n;
            bundle["k"] = a.k;
        }
        if (width > kMaxFreeWidth) {
            throw ScaleGuardError("free-mode cover graph limited to N <= " + std::to_string(kMaxFreeWidth));
        }
        bundle["spec"] = nullptr;
        bundle["lattice"] = boolean_lattice_summary(width);
        reports = run_claims(CoverGraph::build(Mode::free(width), GraphKind::hasse), claims, a.threads);
    } else {
        if (a.N > 0) {
            throw PreconditionError("--N applies to free mode only");
        }
        const Lattice lat = build_lattice(make_arrangement_spec(a.n, a.k, a.seed));
        width = lat.width();
        bundle["n"] = a.n;
        bundle["k"] = a.k;
        bundle["spec"] = to_json(lat.spec());
        bundle["lattice"] = lattice_summary(lat);
        const Mode mode = Mode::geometric(lat);
        auto hasse = run_claims(CoverGraph::build(mode, GraphKind::hasse), claims, a.threads);
        auto toggle = run_claims(CoverGraph::build(mode, GraphKind::toggle), claims, a.threads);
        for (std::size_t i = 0; i < claims.size(); ++i) {
            reports.push_back(std::move(hasse[i]));
            reports.push_back(std::move(toggle[i]));
        }
        if (a.compare_seed) {
            const Lattice other = build_lattice(make_arrangement_spec(a.n, a.k, *a.compare_seed));
            const bool same = other.size() == lat.size() &&
                              std::equal(lat.elements().begin(), lat.elements().end(), other.elements().begin(),
                                         [](const LatticeElement& x, const LatticeElement& y) {
                                             return x.support == y.support && x.rank == y.rank;
                                         });
            bundle["seed_comparison"] = {{"seed", *a.compare_seed},
                                         {"elements", other.size()},
                                         {"same_supports", same},
                                         {"same_covers", same && other.covers() == lat.covers()}};
        }
    }
    bundle["N"] = width;

    Json claim_json = Json::array();
    std::size_t failed = 0;
    for (const auto& r : reports) {
        claim_json.push_back(to_json(r, width));
        failed += r.pass ? 0 : 1;
    }
    bundle["claims"] = std::move(claim_json);
    emit(a.report, canonical_dump(bundle), out);

    out << "verify " << a.mode << " N=" << width << ": " << reports.size() - failed << "/" << reports.size()
        << " claim checks pass";
    if (!a.report.empty() && a.report != "-") {
        out << " -> " << a.report;
    }
    out << " (" << clock.elapsed() << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------- geodesics / interval

struct PairArgs
{
    std::string mode = "free";
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::string from;
    std::string to;
    bool enumerate = false;
    std::string out;
};

void check_widths(const std::string& a, const std::string& b)
{
    if (a.size() != b.size()) {
        throw PreconditionError("supports must have the same bit width");
    }
}

int cmd_geodesics(const PairArgs& a, std::ostream& out)
{
    check_widths(a.from, a.to);
    const Support f = parse_bitstring(a.from);
    const Support g = parse_bitstring(a.to);
    const int width = static_cast<int>(a.from.size());
    GeodesicSet set;
    if (a.mode == "free") {
        set = geodesics(f, g, Mode::free(width), a.enumerate);
    } else {
        const Lattice lat = build_lattice(make_arrangement_spec(a.n, a.k, a.seed));
        if (lat.width() != width) {
            throw PreconditionError("support width " + std::to_string(width) + " does not match N = " +
                                    std::to_string(lat.width()));
        }
        set = geodesics(f, g, Mode::geometric(lat), a.enumerate);
    }
    emit(a.out, canonical_dump(to_json(set, width)), out);
    out << "geodesics " << a.mode << " |S|=" << (f ^ g).size() << ": " << set.count << " sequences, "
        << set.linear_extensions << " linear extensions, " << (set.agree ? "agree" : "disagree") << "\n";
    return kExitOk;
}

int cmd_interval(const PairArgs& a, std::ostream& out)
{
    check_widths(a.from, a.to);
    const Support lower = parse_bitstring(a.from);
    const Support upper = parse_bitstring(a.to);
    const int width = static_cast<int>(a.from.size());
    IntervalCubeReport report;
    if (a.mode == "free") {
        report = verify_interval_cube(CoverGraph::build(Mode::free(width), GraphKind::hasse), lower, upper);
    } else {
        const Lattice lat = build_lattice(make_arrangement_spec(a.n, a.k, a.seed));
        if (lat.width() != width) {
            throw PreconditionError("support width " + std::to_string(width) + " does not match N = " +
                                    std::to_string(lat.width()));
        }
        const auto x = lat.find(lower);
        const auto y = lat.find(upper);
        if (!x || !y) {
            throw PreconditionError("interval endpoints must be closed supports");
        }
        report = verify_interval_cube(lat, *x, *y);
    }
    emit(a.out, canonical_dump(to_json(report, width)), out);
    out << "interval " << a.mode << " dimension " << report.dimension << ": " << report.elements << " elements, "
        << (report.pass() ? "cube and convex" : "not a convex cube") << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- randomized overlaps

struct SampleArgs
{
    std::uint64_t N = 0;
    std::uint64_t r = 0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string csv;
    unsigned threads = 1;
};

int cmd_sample(const SampleArgs& a, std::ostream& out)
{
    const Stopwatch clock;
    const ExperimentResult result = sample_overlaps({a.N, a.r, a.trials, a.seed, a.threads});
    write_file_atomic(a.csv, sample_csv(result));
    const double exact = 1.0 - static_cast<double>(result.exact.pmf.at(0));
    out << "sample N=" << a.N << " r=" << a.r << " trials=" << a.trials << ": P(T>=1) empirical "
        << fmt("%.6f", result.empirical_intersect) << ", exact " << fmt("%.6f", exact) << ", mean distance "
        << fmt("%.4f", result.mean_distance) << ", identity d=2r-2T " << (result.distance_identity ? "holds" : "FAILS")
        << " -> " << a.csv << " (" << clock.elapsed() << ")\n";
    return kExitOk;
}

struct ThresholdArgs
{
    std::uint64_t N = 0;
    std::string exponents = "0.3,0.4,0.5,0.6,0.7";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string csv;
    unsigned threads = 1;
};

int cmd_threshold(const ThresholdArgs& a, std::ostream& out)
{
    const Stopwatch clock;
    const auto rows = threshold_sweep(a.N, parse_list<double>(a.exponents, "exponent"), a.trials, a.seed, a.threads);
    write_file_atomic(a.csv, threshold_csv(rows));
    out << "threshold N=" << a.N << ": " << rows.size() << " exponents, P(F n G nonempty) from "
        << fmt("%.4f", rows.front().exact_value) << " to " << fmt("%.4f", rows.back().exact_value) << " -> " << a.csv
        << " (" << clock.elapsed() << ")\n";
    return kExitOk;
}

struct TvArgs
{
    std::string grid = "100,1000,10000";
    std::string alpha = "0.3,0.4,0.45";
    std::string csv;
};

int cmd_tv(const TvArgs& a, std::ostream& out)
{
    const Stopwatch clock;
    const auto grid = parse_list<std::uint64_t>(a.grid, "grid");
    const auto alphas = parse_list<double>(a.alpha, "alpha");
    std::vector<TvRow> rows;
    Decimal max_ratio = 0;
    for (const double alpha : alphas) {
        for (const std::uint64_t N : grid) {
            const std::uint64_t r = floor_power(N, alpha);
            rows.push_back({N, r, tv_distance(N, r)});
            max_ratio = std::max(max_ratio, rows.back().tv.ratio);
        }
    }
    write_file_atomic(a.csv, tv_csv(rows));
    out << "tv: " << rows.size() << " rows, max tv*N^2/r^3 = " << format_decimal(max_ratio, 6) << " -> " << a.csv
        << " (" << clock.elapsed() << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------- report

std::string render_table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line.append(widths[c] - row[c].size() + 2, ' ');
            }
        }
        out += line + "\n";
    }
    return out;
}

struct ClaimColumn
{
    std::string mode;
    int n = 0;
    int k = 0;
    int N = 0;
    std::string graph;

    std::string label() const
    {
        std::string s = mode;
        if (n > 0) {
            s += " B(" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
        return s + " N=" + std::to_string(N) + " " + graph;
    }
    auto key() const { return std::tie(n, k, N, mode, graph); }
    bool operator<(const ClaimColumn& o) const { return key() < o.key(); }
};

struct CsvTable
{
    std::string header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path, const std::string& text)
{
    std::istringstream in(text);
    CsvTable t;
    std::getline(in, t.header);
    const std::size_t columns = split(t.header, ',').size();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != columns) {
            throw IoError(path + ": malformed CSV row '" + line + "'");
        }
        t.rows.push_back(std::move(fields));
    }
    return t;
}

}  // namespace

std::string digest(const std::vector<std::string>& paths)
{
    std::map<ClaimColumn, std::map<std::string, std::string>> claims;
    std::vector<std::vector<std::string>> threshold;
    std::vector<std::vector<std::string>> tv;
    std::vector<std::vector<std::string>> samples;

    for (const auto& path : paths) {
        const std::string text = read_file(path);
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            Json j;
            try {
                j = Json::parse(text);
                ClaimColumn base;
                base.mode = j.at("mode").get<std::string>();
                base.n = j.at("n").is_null() ? 0 : j.at("n").get<int>();
                base.k = j.at("k").is_null() ? 0 : j.at("k").get<int>();
                base.N = j.at("N").get<int>();
                for (const auto& c : j.at("claims")) {
                    ClaimColumn col = base;
                    col.graph = c.at("graph").get<std::string>();
                    std::string cell = c.at("verdict").get<std::string>();
                    cell += " (" + std::to_string(c.at("failures").get<std::uint64_t>()) + "/" +
                            std::to_string(c.at("checked").get<std::uint64_t>()) + ")";
                    claims[col][c.at("claim").get<std::string>()] = cell;
                }
            } catch (const Json::exception& e) {
                throw IoError(path + ": not a verify report (" + e.what() + ")");
            }
            continue;
        }
        const CsvTable t = read_csv(path, text);
        if (t.header == "exponent,r,exact_intersect,empirical_intersect,stderr") {
            threshold.insert(threshold.end(), t.rows.begin(), t.rows.end());
        } else if (t.header == "N,r,tv,ratio_tv_N2_r3") {
            tv.insert(tv.end(), t.rows.begin(), t.rows.end());
        } else if (t.header == "trial,T,distance") {
            double sum_t = 0;
            double sum_d = 0;
            std::uint64_t hits = 0;
            for (const auto& row : t.rows) {
                const double T = std::stod(row[1]);
                sum_t += T;
                sum_d += std::stod(row[2]);
                hits += T >= 1 ? 1 : 0;
            }
            const double n = t.rows.empty() ? 1.0 : static_cast<double>(t.rows.size());
            samples.push_back({path, std::to_string(t.rows.size()), fmt("%.6f", sum_t / n), fmt("%.6f", sum_d / n),
                               fmt("%.6f", static_cast<double>(hits) / n)});
        } else {
            throw IoError(path + ": unrecognised CSV header '" + t.header + "'");
        }
    }

    std::string out;
    if (!claims.empty()) {
        std::vector<std::vector<std::string>> rows{{"claim"}};
        for (const auto& [col, _] : claims) {
            rows[0].push_back(col.label());
        }
        for (const auto& claim : kClaimOrder) {
            std::vector<std::string> row{claim};
            bool any = false;
            for (const auto& [col, verdicts] : claims) {
                const auto it = verdicts.find(claim);
                any = any || it != verdicts.end();
                row.push_back(it == verdicts.end() ? "-" : it->second);
            }
            if (any) {
                rows.push_back(std::move(row));
            }
        }
        out += "claims\n" + render_table(rows);
    }
    const auto section = [&out](const char* title, std::vector<std::string> header,
                                std::vector<std::vector<std::string>> rows) {
        if (rows.empty()) {
            return;
        }
        rows.insert(rows.begin(), std::move(header));
        if (!out.empty()) {
            out += "\n";
        }
        out += std::string(title) + "\n" + render_table(rows);
    };
    section("threshold", {"exponent", "r", "exact_intersect", "empirical_intersect", "stderr"}, threshold);
    section("tv", {"N", "r", "tv", "ratio_tv_N2_r3"}, tv);
    section("sample", {"file", "trials", "mean_T", "mean_distance", "empirical_intersect"}, samples);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Discriminantal arrangement lattices, support metrics and random overlaps", "disc"};
    app.set_version_flag("--version", std::string("disc ") + std::string(kToolVersion) + " (format " +
                                          std::to_string(kFormatVersion) + ")");
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    const std::vector<std::string> modes{"free", "geometric"};

    JohnsonArgs johnson;
    auto* sc_johnson = app.add_subcommand("johnson", "Johnson graph statistics and DOT export");
    sc_johnson->add_option("--n", johnson.n, "ground set size")->required();
    sc_johnson->add_option("--k", johnson.k, "dimension of the base hyperplanes")->required();
    sc_johnson->add_flag("--stats", johnson.stats, "print the statistics record as JSON");
    sc_johnson->add_option("--dot", johnson.dot, "write the graph in DOT format");

    LatticeArgs lattice;
    auto* sc_lattice = app.add_subcommand("lattice", "build the intersection lattice of B(n,k)");
    sc_lattice->add_option("--n", lattice.n)->required();
    sc_lattice->add_option("--k", lattice.k)->required();
    sc_lattice->add_option("--seed", lattice.seed, "seed for the generic base normals");
    sc_lattice->add_option("--out", lattice.out, "lattice JSON file")->required();
    sc_lattice->add_option("--dot", lattice.dot, "cover graph in DOT format");

    VerifyArgs verify;
    auto* sc_verify = app.add_subcommand("verify", "check the metric claims on a cover graph");
    sc_verify->add_option("--n", verify.n);
    sc_verify->add_option("--k", verify.k);
    sc_verify->add_option("--seed", verify.seed);
    sc_verify->add_option("--mode", verify.mode)->check(CLI::IsMember(modes));
    sc_verify->add_option("--N", verify.N, "free mode bit width (default C(n,k+1))");
    sc_verify->add_option("--claims", verify.claims, "comma list of claims or 'all'");
    sc_verify->add_option("--report", verify.report, "report JSON file ('-' for stdout)")->required();
    sc_verify->add_option("--threads", verify.threads)->check(CLI::Range(1u, 256u));
    sc_verify->add_option("--compare-seed", verify.compare_seed, "second seed whose lattice is compared");

    PairArgs geo;
    auto* sc_geo = app.add_subcommand("geodesics", "count geodesics and linear extensions between two supports");
    sc_geo->add_option("--mode", geo.mode)->check(CLI::IsMember(modes));
    sc_geo->add_option("--n", geo.n);
    sc_geo->add_option("--k", geo.k);
    sc_geo->add_option("--seed", geo.seed);
    sc_geo->add_option("--from", geo.from, "support bitstring")->required();
    sc_geo->add_option("--to", geo.to, "support bitstring")->required();
    sc_geo->add_flag("--enumerate", geo.enumerate, "list every path");
    sc_geo->add_option("--out", geo.out, "JSON output file (default stdout)");

    PairArgs iv;
    auto* sc_iv = app.add_subcommand("interval", "check that an interval is a convex hypercube");
    sc_iv->add_option("--mode", iv.mode)->check(CLI::IsMember(modes));
    sc_iv->add_option("--n", iv.n);
    sc_iv->add_option("--k", iv.k);
    sc_iv->add_option("--seed", iv.seed);
    sc_iv->add_option("--lower", iv.from, "support bitstring")->required();
    sc_iv->add_option("--upper", iv.to, "support bitstring")->required();
    sc_iv->add_option("--out", iv.out, "JSON output file (default stdout)");

    SampleArgs sample;
    auto* sc_sample = app.add_subcommand("sample", "sample overlaps of random r-subsets");
    sc_sample->add_option("--N", sample.N)->required();
    sc_sample->add_option("--r", sample.r)->required();
    sc_sample->add_option("--trials", sample.trials);
    sc_sample->add_option("--seed", sample.seed);
    sc_sample->add_option("--csv", sample.csv)->required();
    sc_sample->add_option("--threads", sample.threads)->check(CLI::Range(1u, 256u));

    ThresholdArgs thr;
    auto* sc_thr = app.add_subcommand("threshold", "intersection probability across r = N^e");
    sc_thr->add_option("--N", thr.N)->required();
    sc_thr->add_option("--exponents", thr.exponents);
    sc_thr->add_option("--trials", thr.trials);
    sc_thr->add_option("--seed", thr.seed);
    sc_thr->add_option("--csv", thr.csv)->required();
    sc_thr->add_option("--threads", thr.threads)->check(CLI::Range(1u, 256u));

    TvArgs tv;
    auto* sc_tv = app.add_subcommand("tv", "total variation to the Poisson law");
    sc_tv->add_option("--grid", tv.grid);
    sc_tv->add_option("--alpha", tv.alpha);
    sc_tv->add_option("--csv", tv.csv)->required();

    std::vector<std::string> report_inputs;
    auto* sc_report = app.add_subcommand("report", "digest of verify reports and CSV files");
    sc_report->add_option("files", report_inputs);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        if (sc_johnson->parsed()) {
            return cmd_johnson(johnson, out);
        }
        if (sc_lattice->parsed()) {
            return cmd_lattice(lattice, out);
        }
        if (sc_verify->parsed()) {
            return cmd_verify(verify, out);
        }
        if (sc_geo->parsed()) {
            return cmd_geodesics(geo, out);
        }
        if (sc_iv->parsed()) {
            return cmd_interval(iv, out);
        }
        if (sc_sample->parsed()) {
            return cmd_sample(sample, out);
        }
        if (sc_thr->parsed()) {
            return cmd_threshold(thr, out);
        }
        if (sc_tv->parsed()) {
            return cmd_tv(tv, out);
        }
        out << digest(report_inputs);
        return kExitOk;
    } catch (const IoError& e) {
        err << "disc: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "disc: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "disc: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace disc::cli
