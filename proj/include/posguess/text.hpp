#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace posguess::text {

// Number of UTF-8 code points in s. Bytes that are not continuation bytes
// count as one point each, so malformed input degrades to byte counting.
std::size_t cp_length(std::string_view s);

// The last n code points of s (all of s if it is shorter).
std::string_view cp_suffix(std::string_view s, std::size_t n);

// The first n code points of s.
std::string_view cp_prefix(std::string_view s, std::size_t n);

// First code point of s, or U+FFFD when s is empty or malformed.
char32_t first_codepoint(std::string_view s);

// True when the first code point has the Unicode uppercase property
// (classified through the C.UTF-8 locale; ASCII + Latin-1 ranges when that
// locale is unavailable). Non-alphabetic first characters are never
// capitalized.
bool starts_uppercase(std::string_view word);

bool contains_whitespace(std::string_view s);

// Split on runs of spaces and tabs; no empty fields.
std::vector<std::string_view> split_ws(std::string_view s);

std::string_view trim(std::string_view s);

// FNV-1a 64-bit, used for input checksums in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace posguess::text
