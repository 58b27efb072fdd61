#pragma once

#include <string>

#include "json.hpp"

#include "ttlab/census.hpp"
#include "ttlab/container.hpp"
#include "ttlab/embed.hpp"
#include "ttlab/search.hpp"

namespace ttlab::cli {

using Json = nlohmann::ordered_json;

enum class Format
{
    Text,
    Json,
    Csv,
};

/// Artifact version; part of every record and of every cache key.
inline constexpr const char * kVersion = "ttlab-1.0.0";

// Result objects for each subcommand. Exact counts are decimal strings.

Json graph_result(const Digraph & g);
Json check_result(const Digraph & g, const BlowupSpec & spec);
Json extremal_result(const ExtremalResult & r);
Json count_result(const BigInt & count, const std::string & what);
Json ratio_result(const CensusReport & report);
Json density_result(const ContainerExponent & c, bool with_shape);
Json edit_distance_result(const EditDistanceResult & r);

/// Renders a full record {command, params, result, version, runtime_ms}.
std::string render(const Json & record, Format format);

/// Column names of the CSV form of a record.
std::string csv_header(const Json & record);

} // namespace ttlab::cli
