#pragma once

// Text statistics: burstiness (sentence-length variation) and perplexity
// under a local add-k smoothed n-gram model.
//
// Tokenization is deliberately simple: lowercase letter runs, split at any
// non-letter codepoint. A token is scored against the model verbatim, so any
// token containing a codepoint outside the training vocabulary falls into
// the out-of-vocabulary slot as a whole.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "textfoil/unicode.hpp"
#include "textfoil/util.hpp"

namespace textfoil::metrics {

// Lowercased letter runs. Sentence punctuation, digits and whitespace all
// act as separators; non-ASCII letters pass through unchanged.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t cp : utf8_decode(text)) {
    if (is_letter(cp)) {
      if (cp >= U'A' && cp <= U'Z') cp = cp - U'A' + U'a';
      utf8_append(current, cp);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

struct SentenceSplit {
  std::vector<std::size_t> token_counts;  // tokens per sentence, all >= 1
};

// Sentences end at '.', '!' or '?' followed by whitespace or end-of-text.
// Segments without any token are dropped. Abbreviations like "e.g." split;
// that is a documented limitation of the delimiter rule.
inline SentenceSplit split_sentences(std::string_view text) {
  std::vector<char32_t> cps = utf8_decode(text);
  SentenceSplit out;
  std::size_t tokens_in_sentence = 0;
  bool in_token = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    if (is_letter(cp)) {
      if (!in_token) {
        ++tokens_in_sentence;
        in_token = true;
      }
      continue;
    }
    in_token = false;
    if (cp == U'.' || cp == U'!' || cp == U'?') {
      bool at_end = (i + 1 == cps.size());
      bool before_space =
          !at_end && (cps[i + 1] == U' ' || cps[i + 1] == U'\t' ||
                      cps[i + 1] == U'\n' || cps[i + 1] == U'\r');
      if (at_end || before_space) {
        if (tokens_in_sentence > 0) out.token_counts.push_back(tokens_in_sentence);
        tokens_in_sentence = 0;
      }
    }
  }
  if (tokens_in_sentence > 0) out.token_counts.push_back(tokens_in_sentence);
  if (out.token_counts.empty())
    throw std::invalid_argument("text has no tokens");
  return out;
}

// Coefficient of variation of sentence token counts (population standard
// deviation over mean). Single-sentence texts return 0.
inline double burstiness(std::string_view text) {
  SentenceSplit s = split_sentences(text);
  const std::size_t n = s.token_counts.size();
  if (n == 1) return 0.0;
  double mean = 0.0;
  for (std::size_t c : s.token_counts) mean += static_cast<double>(c);
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (std::size_t c : s.token_counts) {
    double d = static_cast<double>(c) - mean;
    var += d * d;
  }
  var /= static_cast<double>(n);
  return std::sqrt(var) / mean;
}

// Add-k smoothed n-gram model. Counts are kept for every order 1..n so that
// the first tokens of a text are scored with the longest available context.
// p(w | c) = (count(c,w) + k) / (count(c) + k * (|V| + 1)); the +1 slot is
// the out-of-vocabulary token, which by construction gets the minimal count.
class NgramModel {
 public:
  NgramModel() = default;

  static NgramModel train(const std::vector<std::string>& tokens, int order,
                          double add_k) {
    if (tokens.empty()) throw std::invalid_argument("empty training corpus");
    if (order < 1) throw std::invalid_argument("model order must be >= 1");
    if (!(add_k > 0.0)) throw std::invalid_argument("add_k must be > 0");
    NgramModel m;
    m.order_ = order;
    m.add_k_ = add_k;
    for (const auto& t : tokens) m.vocab_.insert(t);
    for (int n = 1; n <= order; ++n) {
      if (tokens.size() < static_cast<std::size_t>(n)) break;
      for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string gram = join_range(tokens, i, i + n);
        std::string ctx = join_range(tokens, i, i + n - 1);
        m.gram_counts_[gram] += 1;
        m.context_totals_[ctx] += 1;
      }
    }
    return m;
  }

  int order() const { return order_; }
  double add_k() const { return add_k_; }
  std::size_t vocab_size() const { return vocab_.size(); }
  bool in_vocab(const std::string& token) const {
    return vocab_.count(token) > 0;
  }

  // context = tokens preceding the scored token; only the last order-1 are
  // used. Works for OOV tokens and unseen contexts alike.
  double probability(const std::string& token,
                     std::span<const std::string> context) const {
    std::size_t ctx_len =
        std::min<std::size_t>(static_cast<std::size_t>(order_) - 1,
                              context.size());
    std::span<const std::string> ctx = context.subspan(context.size() - ctx_len);
    std::string ctx_key = join_span(ctx);
    std::string gram_key =
        ctx_key.empty() ? token : ctx_key + " " + token;
    double num = lookup(gram_counts_, gram_key) + add_k_;
    double den = lookup(context_totals_, ctx_key) +
                 add_k_ * (static_cast<double>(vocab_.size()) + 1.0);
    return num / den;
  }

  double log_prob_sum(const std::vector<std::string>& tokens) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::span<const std::string> ctx(tokens.data(), i);
      sum += std::log(probability(tokens[i], ctx));
    }
    return sum;
  }

  // Versioned text format: one header line (version, order, add_k, vocab
  // size), then "ngram<TAB>count" lines sorted bytewise. Byte-stable.
  std::string save() const {
    std::string out = "ngramlm\tv1\t" + std::to_string(order_) + "\t" +
                      fmt_real(add_k_, 17) + "\t" +
                      std::to_string(vocab_.size()) + "\n";
    std::vector<std::pair<std::string, std::uint64_t>> rows(
        gram_counts_.begin(), gram_counts_.end());
    std::sort(rows.begin(), rows.end());
    for (const auto& [gram, count] : rows)
      out += gram + "\t" + std::to_string(count) + "\n";
    return out;
  }

  static NgramModel load(std::string_view serialized) {
    std::vector<std::string> lines = split_lines(serialized);
    if (lines.empty()) throw std::invalid_argument("empty model file");
    std::vector<std::string> header = split(lines[0], '\t');
    if (header.size() != 5 || header[0] != "ngramlm" || header[1] != "v1")
      throw std::invalid_argument("bad model header: " + lines[0]);
    NgramModel m;
    m.order_ = std::stoi(header[2]);
    m.add_k_ = std::stod(header[3]);
    std::size_t declared_vocab = std::stoul(header[4]);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      std::vector<std::string> cols = split(lines[i], '\t');
      if (cols.size() != 2)
        throw std::invalid_argument("bad model line: " + lines[i]);
      std::uint64_t count = std::stoull(cols[1]);
      m.gram_counts_[cols[0]] = count;
      std::vector<std::string> toks = split(cols[0], ' ');
      if (toks.size() == 1) m.vocab_.insert(cols[0]);
      std::string ctx = join_tokens(toks, toks.size() - 1);
      m.context_totals_[ctx] += count;
    }
    if (m.vocab_.size() != declared_vocab)
      throw std::invalid_argument("model vocab size mismatch");
    return m;
  }

 private:
  static std::string join_range(const std::vector<std::string>& tokens,
                                std::size_t b, std::size_t e) {
    std::string out;
    for (std::size_t i = b; i < e; ++i) {
      if (i > b) out += ' ';
      out += tokens[i];
    }
    return out;
  }
  static std::string join_span(std::span<const std::string> tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i > 0) out += ' ';
      out += tokens[i];
    }
    return out;
  }
  static std::string join_tokens(const std::vector<std::string>& tokens,
                                 std::size_t count) {
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) out += ' ';
      out += tokens[i];
    }
    return out;
  }
  static double lookup(const std::unordered_map<std::string, std::uint64_t>& m,
                       const std::string& key) {
    auto it = m.find(key);
    return it == m.end() ? 0.0 : static_cast<double>(it->second);
  }

  int order_ = 1;
  double add_k_ = 1.0;
  std::unordered_map<std::string, std::uint64_t> gram_counts_;
  std::unordered_map<std::string, std::uint64_t> context_totals_;
  std::unordered_set<std::string> vocab_;
};

inline NgramModel train_lm(std::string_view corpus, int order, double add_k) {
  return NgramModel::train(tokenize(corpus), order, add_k);
}

// exp of average negative log-likelihood per token.
inline double perplexity(std::string_view text, const NgramModel& model) {
  std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty())
    throw std::invalid_argument("text has no tokens to score");
  double sum = model.log_prob_sum(tokens);
  return std::exp(-sum / static_cast<double>(tokens.size()));
}

}  // namespace textfoil::metrics
