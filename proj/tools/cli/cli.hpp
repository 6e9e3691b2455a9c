#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proseviz/layout.hpp"
#include "proseviz/render.hpp"
#include "proseviz/summarizer.hpp"
#include "proseviz/text_model.hpp"

namespace proseviz::cli {

// Items from CSV (header id,size,color,label,text; color optional) or a JSON
// array of objects with the same keys, chosen by extension. A text value of
// the form "@path" is read from that file, relative to the items file.
std::vector<Item> parse_items(const std::filesystem::path& file);
std::vector<Item> parse_items_csv(std::string_view bytes, const std::filesystem::path& base_dir);
std::vector<Item> parse_items_json(std::string_view bytes, const std::filesystem::path& base_dir);

// JSON list of {start, end, score, channel}; score is a number in [-1, 1] or
// a category string, channel defaults to "background".
std::vector<MarkupSpan> parse_spans(std::string_view json);

std::string read_text_file(const std::filesystem::path& path);  // UTF-8 checked

enum class Command { Treemap, Barchart, Reader, Markup, Summarize };

std::string_view to_string(Command c);
Command parse_command(std::string_view name);

struct RunConfig {
  Command command = Command::Summarize;
  std::vector<std::filesystem::path> inputs;
  double width = 1200.0;
  double height = 800.0;
  double font_size = 12.0;
  std::optional<double> padding;  // per-command default when unset
  SummaryMode mode = SummaryMode::Extractive;
  std::optional<int> target_words;  // per-command default when unset
  std::filesystem::path out;        // empty = stdout
  bool overlay = false;
  bool landmark = false;
  std::filesystem::path landmark_out;  // default: out with a .svg extension
  double landmark_opacity = 0.18;
  std::string title;
  std::string color_scale = "red-yellow-green";  // or green-yellow-red
  std::optional<double> color_min;
  std::optional<double> color_max;
  double gap = 12.0;
  bool side_summary = false;  // markup: show an extractive summary beside the source
  std::vector<std::string> heading_patterns;  // level-1 rules; empty = defaults
  ProviderConfig provider;

  // Throws Error naming the first invalid field.
  void validate() const;
};

// Runs one command. Errors are reported on `err` with a nonzero return.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace proseviz::cli
