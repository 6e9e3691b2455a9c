#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proseviz/common.hpp"
#include "proseviz/lexicon.hpp"

namespace proseviz {

enum class SummaryMode { Extractive, Lede, Keywords, Remote };

std::string_view to_string(SummaryMode mode);
SummaryMode parse_summary_mode(std::string_view name);  // throws Error

struct SummaryRequest {
  std::string source;
  int target_words = 0;
  SummaryMode mode = SummaryMode::Extractive;
};

struct SummaryResult {
  std::string text;
  int word_count = 0;
  SummaryMode mode_used = SummaryMode::Extractive;
  // Fragments of the source the text was built from (scalar-value offsets).
  std::vector<CharSpan> attended_spans;

  friend bool operator==(const SummaryResult&, const SummaryResult&) = default;
};

// Lowercase content tokens (letter-bearing alphanumeric runs of two or more
// characters that are not stopwords), each with its span in `text`.
struct Token {
  std::string lower;
  CharSpan span;
};
std::vector<Token> content_tokens(std::u32string_view text);

struct ExtractiveOptions {
  std::size_t max_sentences = std::numeric_limits<std::size_t>::max();
  // When no sentence fits the budget, return the top sentence cut to
  // target_words words plus an ellipsis instead of an empty summary.
  bool truncate_when_nothing_fits = false;
};

// Picks whole source sentences greedily by descending score, where a
// sentence's score is its summed max-normalised content-word frequency divided
// by its word count. Output keeps source order, joined by single spaces.
SummaryResult extractive_summarize(std::string_view source, int target_words,
                                   const ExtractiveOptions& options = {});

// First sentence of `source`, cut at the last word boundary that fits
// `max_chars` characters including a trailing "…".
SummaryResult lede_extract(std::string_view source, int max_chars);

// Up to k distinct content words ranked by tf × ln(1 / background frequency),
// ties by first occurrence, returned in source order with source casing.
std::vector<std::string> keyword_extract(std::string_view source, int k);
SummaryResult keyword_summarize(std::string_view source, int k);

// Whole-word, case-insensitive replacement by the shortest synonym. A leading
// capital on the original word is carried over.
std::string synonym_shorten(std::string_view text, const SynonymLexicon& lexicon);

// ---------------------------------------------------------------------------
// Remote provider

struct ProviderConfig {
  std::string endpoint;  // empty = offline
  std::string api_key;
  std::string model = "default";
  std::string prompt_field = "prompt";  // or "input"
  std::string response_field = "text";  // dotted path, numeric parts index arrays
  double slack = 0.25;
  int max_retries = 3;
  double retry_shrink = 0.8;
  std::size_t max_concurrency = 4;
  std::chrono::milliseconds timeout{30000};

  [[nodiscard]] bool enabled() const { return !endpoint.empty(); }

  // Reads SUMMARIZER_ENDPOINT and SUMMARIZER_API_KEY.
  static ProviderConfig from_env();
};

struct HttpRequest {
  std::string url;
  std::vector<std::pair<std::string, std::string>> headers;
  std::string body;
};

struct HttpResponse {
  int status = 0;  // 0 = transport failure
  std::string body;
  std::string error;
};

using Transport = std::function<HttpResponse(const HttpRequest&)>;

// POST over cpp-httplib. https requires the library to be built with OpenSSL.
Transport http_transport(std::chrono::milliseconds timeout);

struct RemoteAttempt {
  int stated_target = 0;
  int status = 0;
  int words = -1;  // -1 when no text could be read
  std::string note;
};

// Instruction text sent to the provider for a given word target.
std::string remote_prompt(std::string_view source, int target_words);

// Stated word target for attempt `attempt` (0 = first call).
int retry_target(int target_words, int attempt, double shrink);

// Calls the provider, retrying with shrinking stated targets while the reply
// overruns target_words × (1 + slack). Any failure, or exhausting the retries,
// falls back to extractive_summarize; this function never throws for
// provider problems.
SummaryResult remote_summarize(const SummaryRequest& req, const ProviderConfig& config,
                               const Transport& transport,
                               std::vector<RemoteAttempt>* attempts = nullptr);

// ---------------------------------------------------------------------------
// Pluggable summarizer used by the fitting ladder and the summary tree.

class Summarizer {
 public:
  virtual ~Summarizer() = default;
  virtual SummaryResult summarize(std::string_view source, int target_words) const = 0;
  // Upper bound on concurrent summarize() calls the caller may issue.
  [[nodiscard]] virtual std::size_t max_concurrency() const { return 1; }
};

class ExtractiveSummarizer final : public Summarizer {
 public:
  explicit ExtractiveSummarizer(ExtractiveOptions options = {}) : options_(options) {}
  SummaryResult summarize(std::string_view source, int target_words) const override;

 private:
  ExtractiveOptions options_;
};

// Lede truncated to roughly six characters per requested word.
class LedeSummarizer final : public Summarizer {
 public:
  SummaryResult summarize(std::string_view source, int target_words) const override;
};

class KeywordSummarizer final : public Summarizer {
 public:
  SummaryResult summarize(std::string_view source, int target_words) const override;
};

class RemoteSummarizer final : public Summarizer {
 public:
  RemoteSummarizer(ProviderConfig config, Transport transport);
  SummaryResult summarize(std::string_view source, int target_words) const override;
  [[nodiscard]] std::size_t max_concurrency() const override;

 private:
  ProviderConfig config_;
  Transport transport_;
};

// Remote mode falls back to an extractive summarizer when the provider is not
// configured.
std::unique_ptr<Summarizer> make_summarizer(SummaryMode mode, const ProviderConfig& provider);

}  // namespace proseviz
