#include "posguess/text.hpp"

#include <locale.h>
#include <wctype.h>

namespace posguess::text {

namespace {

bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// C.UTF-8 carries the full Unicode LC_CTYPE tables on glibc; when it is
// missing we fall back to an ASCII + Latin-1 range check.
locale_t utf8_locale() {
  static const locale_t loc = newlocale(LC_CTYPE_MASK, "C.UTF-8", (locale_t)0);
  return loc;
}

}  // namespace

std::size_t cp_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char b : s) {
    if (!is_continuation(b)) ++n;
  }
  return n;
}

std::string_view cp_suffix(std::string_view s, std::size_t n) {
  if (n == 0) return s.substr(s.size());
  std::size_t seen = 0;
  for (std::size_t i = s.size(); i-- > 0;) {
    if (!is_continuation(static_cast<unsigned char>(s[i]))) {
      if (++seen == n) return s.substr(i);
    }
  }
  return s;
}

std::string_view cp_prefix(std::string_view s, std::size_t n) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_continuation(static_cast<unsigned char>(s[i]))) {
      if (seen == n) return s.substr(0, i);
      ++seen;
    }
  }
  return n >= seen ? s : s;
}

char32_t first_codepoint(std::string_view s) {
  constexpr char32_t kReplacement = 0xFFFD;
  if (s.empty()) return kReplacement;
  const auto b0 = static_cast<unsigned char>(s[0]);
  std::size_t len = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return kReplacement;
  }
  if (s.size() < len) return kReplacement;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[i]);
    if (!is_continuation(b)) return kReplacement;
    cp = (cp << 6) | (b & 0x3F);
  }
  return cp;
}

bool starts_uppercase(std::string_view word) {
  const char32_t cp = first_codepoint(word);
  if (cp < 0x80) return cp >= U'A' && cp <= U'Z';
  if (const locale_t loc = utf8_locale(); loc != (locale_t)0)
    return iswupper_l(static_cast<wint_t>(cp), loc) != 0;
  // Latin-1: À..Þ minus the multiplication sign.
  return cp >= 0xC0 && cp <= 0xDE && cp != 0xD7;
}

bool contains_whitespace(std::string_view s) {
  for (char c : s) {
    if (is_space(c)) return true;
  }
  return false;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace posguess::text
