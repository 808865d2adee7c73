#pragma once

// Text formats: representations as "[(1,2,3)(1,2)(1,2,3)(1,2)]", point sets
// as JSON arrays of [x, y] pairs, count tables as CSV or OEIS b-files.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "insep/enumeration.hpp"
#include "insep/lattice.hpp"
#include "insep/representation.hpp"

namespace insep {

/// Whitespace between tokens is ignored. Throws ParseError on bad syntax and
/// ValidationError on lists that are not strictly increasing and positive.
Theta parse_theta(std::string_view text);
/// No whitespace; inverse of parse_theta().
std::string format_theta(const Theta& theta);

/// Throws ParseError on malformed JSON and ValidationError on duplicates or
/// entries that are not integer pairs.
PointSet parse_points_json(std::string_view text);
PointSet read_points_file(const std::filesystem::path& file);
std::string format_points_json(const PointSet& set);

/// "uphill 3 -1 E N N E": direction, start anchor, steps.
std::string format_path(const MonotonePath& path);

enum class CountFormat { Table, Csv, BFileC, BFileChat };

std::optional<CountFormat> parse_count_format(std::string_view name);
std::string emit_counts(std::span<const CountRow> rows, CountFormat format);

}  // namespace insep
