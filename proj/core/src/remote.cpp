#ifdef PROSEVIZ_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <cmath>
#include <cstdlib>
#include <json.hpp>

#include "proseviz/log.hpp"
#include "proseviz/summarizer.hpp"
#include "proseviz/text_model.hpp"

namespace proseviz {
namespace {

using nlohmann::json;

// Follows a dotted path such as "generations.0.text".
const json* find_path(const json& root, std::string_view path) {
  const json* node = &root;
  while (!path.empty()) {
    const std::size_t dot = path.find('.');
    const std::string part(path.substr(0, dot));
    path = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
    if (node->is_array()) {
      char* end = nullptr;
      const unsigned long idx = std::strtoul(part.c_str(), &end, 10);
      if (part.empty() || *end != '\0' || idx >= node->size()) return nullptr;
      node = &(*node)[idx];
    } else if (node->is_object()) {
      const auto it = node->find(part);
      if (it == node->end()) return nullptr;
      node = &*it;
    } else {
      return nullptr;
    }
  }
  return node;
}

std::string trim_copy(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ProviderConfig ProviderConfig::from_env() {
  ProviderConfig cfg;
  if (const char* endpoint = std::getenv("SUMMARIZER_ENDPOINT")) cfg.endpoint = endpoint;
  if (const char* key = std::getenv("SUMMARIZER_API_KEY")) cfg.api_key = key;
  return cfg;
}

Transport http_transport(std::chrono::milliseconds timeout) {
  return [timeout](const HttpRequest& req) -> HttpResponse {
    const std::size_t scheme_end = req.url.find("://");
    const std::size_t path_start =
        req.url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    const std::string origin = req.url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : req.url.substr(path_start);
    try {
      httplib::Client client(origin);
      if (!client.is_valid()) return {0, {}, "unsupported endpoint " + origin};
      const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
      const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);
      client.set_connection_timeout(secs.count(), usecs.count());
      client.set_read_timeout(secs.count(), usecs.count());
      httplib::Headers headers;
      for (const auto& [k, v] : req.headers) headers.emplace(k, v);
      auto res = client.Post(path, headers, req.body, "application/json");
      if (!res) return {0, {}, httplib::to_string(res.error())};
      return {res->status, res->body, {}};
    } catch (const std::exception& e) {
      return {0, {}, e.what()};
    }
  };
}

std::string remote_prompt(std::string_view source, int target_words) {
  std::string prompt = "Summarize the following text in at most " + std::to_string(target_words) +
                       " words. Reply with the summary only.\n\n";
  prompt += source;
  return prompt;
}

int retry_target(int target_words, int attempt, double shrink) {
  const double stated = target_words * std::pow(shrink, attempt);
  return std::max(1, static_cast<int>(std::lround(stated)));
}

SummaryResult remote_summarize(const SummaryRequest& req, const ProviderConfig& config,
                               const Transport& transport, std::vector<RemoteAttempt>* attempts) {
  const auto fallback = [&] { return extractive_summarize(req.source, req.target_words); };
  if (!config.enabled() || !transport || req.target_words <= 0) return fallback();

  const double limit = req.target_words * (1.0 + config.slack);
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    RemoteAttempt record;
    record.stated_target = retry_target(req.target_words, attempt, config.retry_shrink);

    json body = json::object();
    body["model"] = config.model;
    body[config.prompt_field] = remote_prompt(req.source, record.stated_target);
    body["max_words"] = record.stated_target;
    HttpRequest http{config.endpoint, {{"Content-Type", "application/json"}}, body.dump()};
    if (!config.api_key.empty()) http.headers.emplace_back("Authorization", "Bearer " + config.api_key);

    HttpResponse res;
    try {
      res = transport(http);
    } catch (const std::exception& e) {
      res = {0, {}, e.what()};
    }
    record.status = res.status;

    bool give_up = false;
    std::optional<std::string> text;
    if (res.status == 0 || res.status >= 500) {
      record.note = "transport failure: " + (res.error.empty() ? std::to_string(res.status) : res.error);
    } else if (res.status < 200 || res.status >= 300) {
      record.note = "provider rejected request with status " + std::to_string(res.status);
      give_up = true;
    } else {
      const json parsed = json::parse(res.body, nullptr, false);
      const json* field = parsed.is_discarded() ? nullptr : find_path(parsed, config.response_field);
      if (field == nullptr || !field->is_string()) {
        record.note = "malformed provider response";
        give_up = true;
      } else if (std::string reply = trim_copy(field->get<std::string>()); reply.empty()) {
        record.note = "empty provider response";
        give_up = true;
      } else {
        record.words = word_count(reply);
        text = std::move(reply);
      }
    }

    if (text && record.words <= limit) {
      if (attempts) attempts->push_back(record);
      return {*text, record.words, SummaryMode::Remote, {}};
    }
    if (text) record.note = "over length (" + std::to_string(record.words) + " words)";
    if (attempts) attempts->push_back(record);
    log_warning("remote summarizer attempt " + std::to_string(attempt + 1) + ": " + record.note);
    if (give_up) break;
  }
  log_warning("remote summarizer falling back to extractive");
  return fallback();
}

RemoteSummarizer::RemoteSummarizer(ProviderConfig config, Transport transport)
    : config_(std::move(config)), transport_(std::move(transport)) {}

SummaryResult RemoteSummarizer::summarize(std::string_view source, int target_words) const {
  return remote_summarize({std::string(source), target_words, SummaryMode::Remote}, config_,
                          transport_);
}

std::size_t RemoteSummarizer::max_concurrency() const {
  return config_.enabled() ? std::max<std::size_t>(1, config_.max_concurrency) : 1;
}

}  // namespace proseviz
