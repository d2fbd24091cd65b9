#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace metapool {

std::string_view trim(std::string_view s);

// Strict, locale-independent numeric parsing. The whole field must be
// consumed; "1,27" or "12x" yield nullopt.
std::optional<long long> parse_count(std::string_view s);
std::optional<double> parse_real(std::string_view s);

// Shortest decimal form that round-trips through a double ("13", "7.34").
std::string format_shortest(double v);

// Six significant digits, "." decimal; the one rendering used by tables,
// plots and CLI summaries.
std::string format_sig6(double v);

// Fixed-point with the given number of decimals (plot coordinates).
std::string format_fixed(double v, int decimals);

// Validates UTF-8; on failure stores the byte offset of the first bad byte.
bool utf8_valid(std::string_view bytes, std::size_t* bad_offset = nullptr);

std::string xml_escape(std::string_view s);
std::string latex_escape(std::string_view s);

}  // namespace metapool
