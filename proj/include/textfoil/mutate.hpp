#pragma once

// Character-level mutation engine and homoglyph scanner.
//
// A mutation swaps single codepoints (e.g. Latin "a" -> Cyrillic "a") at a
// configurable rate and records every touched position, so the original text
// can always be restored exactly. The scanner is the defensive counterpart:
// it reports letters whose script disagrees with the dominant script of the
// text, which catches the Cyrillic swaps but is structurally blind to
// Latin-to-Latin swaps such as lowercase l -> uppercase I.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "textfoil/unicode.hpp"
#include "textfoil/util.hpp"

namespace textfoil::mutate {

struct MutationRule {
  std::string id;
  char32_t source = 0;
  char32_t target = 0;
  std::string description;
};

inline void validate_rule(const MutationRule& rule) {
  if (rule.id.empty()) throw std::invalid_argument("mutation rule id is empty");
  if (rule.source == rule.target)
    throw std::invalid_argument("mutation rule " + rule.id +
                                ": source equals target");
}

inline const std::vector<MutationRule>& builtin_rules() {
  static const std::vector<MutationRule> rules = {
      {"A_CYR", U'a', 0x0430, "Latin lowercase a to Cyrillic a"},
      {"E_CYR", U'e', 0x0435, "Latin lowercase e to Cyrillic e"},
      {"L_TO_I", U'l', U'I', "Latin lowercase l to Latin uppercase I"},
  };
  return rules;
}

inline const MutationRule* find_rule(const std::vector<MutationRule>& rules,
                                     std::string_view id) {
  for (const auto& r : rules)
    if (r.id == id) return &r;
  return nullptr;
}

inline const MutationRule& rule_by_id(std::string_view id) {
  const MutationRule* r = find_rule(builtin_rules(), id);
  if (!r) throw std::invalid_argument("unknown mutation rule: " + std::string(id));
  return *r;
}

struct MutationRecord {
  std::size_t position = 0;  // codepoint index into the original text
  char32_t original = 0;
  char32_t replacement = 0;
};

struct MutatedText {
  std::string content;
  std::string rule_id;
  double rate = 1.0;
  std::uint64_t seed = 0;
  std::vector<MutationRecord> records;
};

// Replaces round(rate * k) of the k source-codepoint occurrences, selected
// uniformly by seed. rate 1.0 replaces all, rate 0.0 none.
inline MutatedText apply(std::string_view text, const MutationRule& rule,
                         double rate, std::uint64_t seed) {
  validate_rule(rule);
  if (!(rate >= 0.0 && rate <= 1.0))
    throw std::invalid_argument("mutation rate must be in [0,1], got " +
                                fmt_real(rate));

  std::vector<char32_t> cps = utf8_decode(text);
  std::vector<std::size_t> occurrences;
  for (std::size_t i = 0; i < cps.size(); ++i)
    if (cps[i] == rule.source) occurrences.push_back(i);

  const auto k = occurrences.size();
  auto m = static_cast<std::size_t>(
      std::llround(rate * static_cast<double>(k)));
  if (m > k) m = k;

  // Partial Fisher-Yates; selection depends only on the seed.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, k - 1);
    std::swap(occurrences[i], occurrences[pick(rng)]);
  }
  occurrences.resize(m);
  std::sort(occurrences.begin(), occurrences.end());

  MutatedText out;
  out.rule_id = rule.id;
  out.rate = rate;
  out.seed = seed;
  out.records.reserve(m);
  for (std::size_t pos : occurrences) {
    out.records.push_back({pos, rule.source, rule.target});
    cps[pos] = rule.target;
  }
  out.content = utf8_encode(cps);
  return out;
}

// Exact inverse of apply. Throws if the records do not match the content.
inline std::string restore(const MutatedText& m, const MutationRule& rule) {
  std::vector<char32_t> cps = utf8_decode(m.content);
  std::size_t prev = 0;
  bool first = true;
  for (const auto& rec : m.records) {
    if (!first && rec.position <= prev)
      throw std::runtime_error("corrupted mutation provenance: positions not "
                               "strictly increasing");
    if (rec.position >= cps.size())
      throw std::runtime_error("corrupted mutation provenance: position " +
                               std::to_string(rec.position) + " out of range");
    if (cps[rec.position] != rec.replacement ||
        rec.replacement != rule.target || rec.original != rule.source)
      throw std::runtime_error("corrupted mutation provenance: record at " +
                               std::to_string(rec.position) +
                               " does not match content");
    cps[rec.position] = rec.original;
    prev = rec.position;
    first = false;
  }
  return utf8_encode(cps);
}

struct HomoglyphFinding {
  std::size_t position = 0;  // codepoint index
  char32_t codepoint = 0;
  Script script = Script::none;
};

// Script with the highest letter count; ties resolved toward Latin, then by
// enum order, so degenerate inputs stay deterministic.
inline Script dominant_script(const std::vector<char32_t>& cps) {
  std::size_t counts[5] = {0, 0, 0, 0, 0};
  for (char32_t cp : cps) counts[static_cast<int>(script_of(cp))]++;
  Script best = Script::latin;
  std::size_t best_count = counts[static_cast<int>(Script::latin)];
  for (Script s : {Script::greek, Script::cyrillic, Script::other}) {
    if (counts[static_cast<int>(s)] > best_count) {
      best = s;
      best_count = counts[static_cast<int>(s)];
    }
  }
  return best;
}

inline Script dominant_script(std::string_view text) {
  return dominant_script(utf8_decode(text));
}

// One finding per letter whose script differs from the text's dominant
// script. Non-letters never produce findings.
inline std::vector<HomoglyphFinding> scan_homoglyphs(std::string_view text) {
  std::vector<char32_t> cps = utf8_decode(text);
  Script dom = dominant_script(cps);
  std::vector<HomoglyphFinding> findings;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    Script s = script_of(cps[i]);
    if (s != Script::none && s != dom) findings.push_back({i, cps[i], s});
  }
  return findings;
}

// Rule catalog serialization: id<TAB>source_hex<TAB>target_hex<TAB>description
inline std::string rules_to_tsv(const std::vector<MutationRule>& rules) {
  std::string out;
  for (const auto& r : rules) {
    char hex[16];
    out += r.id;
    std::snprintf(hex, sizeof(hex), "\t%04X\t%04X\t",
                  static_cast<unsigned>(r.source),
                  static_cast<unsigned>(r.target));
    out += hex;
    out += r.description;
    out += '\n';
  }
  return out;
}

inline std::vector<MutationRule> rules_from_tsv(std::string_view tsv) {
  std::vector<MutationRule> rules;
  for (const std::string& line : split_lines(tsv)) {
    if (line.empty()) continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 4)
      throw std::invalid_argument("bad rule line (want 4 tab-separated "
                                  "columns): " + line);
    MutationRule r;
    r.id = cols[0];
    r.source = static_cast<char32_t>(std::stoul(cols[1], nullptr, 16));
    r.target = static_cast<char32_t>(std::stoul(cols[2], nullptr, 16));
    r.description = cols[3];
    validate_rule(r);
    rules.push_back(std::move(r));
  }
  return rules;
}

}  // namespace textfoil::mutate
