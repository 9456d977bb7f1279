#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "disc/circuits.hpp"
#include "disc/cubemetric.hpp"
#include "disc/exactgeom.hpp"
#include "disc/lattice.hpp"
#include "disc/randover.hpp"

namespace disc
{

using Json = nlohmann::json;

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

/// {"k","n","normals":[["p/q",...],...],"seed"}; rationals as "p/q" or "p".
Json to_json(const ArrangementSpec& spec);
ArrangementSpec spec_from_json(const Json& j);

Json to_json(const Lattice& lat);
Json lattice_summary(const Lattice& lat);
Json to_json(const JohnsonStats& stats);
Json to_json(const ClaimReport& report, int width);
Json to_json(const DependencyPoset& poset, int width);
Json to_json(const GeodesicSet& set, int width);
Json to_json(const IntervalCubeReport& report, int width);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// Cover graph of the lattice, one same-rank cluster per level.
std::string lattice_dot(const Lattice& lat);
/// Johnson graph with 1-based circuit labels.
std::string johnson_dot(int n, int k);

std::string sample_csv(const ExperimentResult& result);
std::string threshold_csv(const std::vector<ThresholdRow>& rows);

struct TvRow
{
    std::uint64_t N = 0;
    std::uint64_t r = 0;
    TotalVariation tv;
};
std::string tv_csv(const std::vector<TvRow>& rows);

/// Shortest round-trip representation of a double.
std::string format_double(double v);
/// Scientific notation with `digits` digits after the decimal point.
std::string format_decimal(const Decimal& v, int digits = 20);

/// Writes to a sibling temporary file and renames it over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace disc
