#pragma once

// UTF-8 codepoint codec plus a minimal script classifier. The classifier
// covers the scripts relevant to homoglyph scanning (Latin, Greek, Cyrillic)
// and lumps the remaining alphabetic ranges into Script::other; extending it
// means adding ranges to kScriptRanges below.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace textfoil {

enum class Script { none, latin, greek, cyrillic, other };

inline const char* script_name(Script s) {
  switch (s) {
    case Script::latin: return "Latin";
    case Script::greek: return "Greek";
    case Script::cyrillic: return "Cyrillic";
    case Script::other: return "Other";
    default: return "None";
  }
}

namespace detail {
struct ScriptRange {
  char32_t lo, hi;
  Script script;
};

// Letter ranges only; anything outside is treated as a non-letter.
inline constexpr std::array<ScriptRange, 22> kScriptRanges{{
    {U'A', U'Z', Script::latin},
    {U'a', U'z', Script::latin},
    {0x00C0, 0x00D6, Script::latin},
    {0x00D8, 0x00F6, Script::latin},
    {0x00F8, 0x024F, Script::latin},
    {0x1E00, 0x1EFF, Script::latin},
    {0x2C60, 0x2C7F, Script::latin},
    {0xA720, 0xA7FF, Script::latin},
    {0x0370, 0x0373, Script::greek},
    {0x0376, 0x0377, Script::greek},
    {0x037B, 0x03FF, Script::greek},
    {0x1F00, 0x1FFF, Script::greek},
    {0x0400, 0x052F, Script::cyrillic},
    {0x2DE0, 0x2DFF, Script::cyrillic},
    {0xA640, 0xA69F, Script::cyrillic},
    {0x05D0, 0x05EA, Script::other},  // Hebrew
    {0x0620, 0x064A, Script::other},  // Arabic
    {0x0900, 0x097F, Script::other},  // Devanagari
    {0x3040, 0x30FF, Script::other},  // Kana
    {0x4E00, 0x9FFF, Script::other},  // CJK unified
    {0xAC00, 0xD7AF, Script::other},  // Hangul
    {0x10A0, 0x10FF, Script::other},  // Georgian
}};
}  // namespace detail

inline Script script_of(char32_t cp) {
  for (const auto& r : detail::kScriptRanges)
    if (cp >= r.lo && cp <= r.hi) return r.script;
  return Script::none;
}

inline bool is_letter(char32_t cp) { return script_of(cp) != Script::none; }

// Strict UTF-8 decoder: rejects truncated sequences, bad continuation bytes,
// overlong encodings, surrogates and out-of-range codepoints.
inline std::vector<char32_t> utf8_decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    int extra = 0;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      extra = 1;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      extra = 2;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      extra = 3;
    } else {
      throw std::invalid_argument("invalid UTF-8 lead byte at offset " +
                                  std::to_string(i));
    }
    if (i + extra >= s.size())
      throw std::invalid_argument("truncated UTF-8 sequence at offset " +
                                  std::to_string(i));
    for (int k = 1; k <= extra; ++k) {
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80)
        throw std::invalid_argument("invalid UTF-8 continuation at offset " +
                                    std::to_string(i + k));
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMin[4] = {0, 0x80, 0x800, 0x10000};
    if (extra > 0 && cp < kMin[extra])
      throw std::invalid_argument("overlong UTF-8 encoding at offset " +
                                  std::to_string(i));
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw std::invalid_argument("invalid codepoint at offset " +
                                  std::to_string(i));
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

inline void utf8_append(std::string& out, char32_t cp) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) utf8_append(out, cp);
  return out;
}

inline std::size_t codepoint_length(std::string_view s) {
  return utf8_decode(s).size();
}

}  // namespace textfoil
