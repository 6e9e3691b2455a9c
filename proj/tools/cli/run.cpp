#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "cli/cli.hpp"
#include "proseviz/lexicon.hpp"
#include "proseviz/reader_export.hpp"
#include "proseviz/summary_tree.hpp"
#include "proseviz/textfit.hpp"

namespace proseviz::cli {
namespace {

namespace fs = std::filesystem;

void write_output(const fs::path& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write '" + path.string() + "'");
  file << content;
  if (!file.flush()) throw Error("failed writing '" + path.string() + "'");
}

void require_inputs(const RunConfig& cfg, std::size_t min, std::size_t max, std::string_view what) {
  if (cfg.inputs.size() < min || cfg.inputs.size() > max) {
    throw Error(std::string(to_string(cfg.command)) + " expects " + std::string(what));
  }
}

ColorScale scale_for(const RunConfig& cfg, const std::vector<Item>& items) {
  double lo = cfg.color_min.value_or(INFINITY);
  double hi = cfg.color_max.value_or(-INFINITY);
  for (const auto& item : items) {
    if (!item.color_value) continue;
    if (!cfg.color_min) lo = std::min(lo, *item.color_value);
    if (!cfg.color_max) hi = std::max(hi, *item.color_value);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) lo = 0.0, hi = 1.0;
  if (lo == hi) lo -= 0.5, hi += 0.5;
  if (cfg.color_scale == "green-yellow-red") return ColorScale::green_yellow_red(lo, hi);
  return ColorScale::red_yellow_green(lo, hi);
}

std::unique_ptr<Summarizer> ladder_summarizer(const RunConfig& cfg) {
  return make_summarizer(cfg.mode, cfg.provider);
}

std::vector<HeadingRule> heading_rules(const RunConfig& cfg) {
  if (cfg.heading_patterns.empty()) return default_heading_rules();
  std::vector<HeadingRule> rules;
  for (const auto& p : cfg.heading_patterns) rules.push_back({p, 1, 0});
  return rules;
}

void run_treemap(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1, 1, "one items file");
  const auto items = parse_items(cfg.inputs[0]);
  TreemapStyle style;
  style.width = cfg.width;
  style.height = cfg.height;
  style.title = cfg.title;
  style.font = FontMetrics::sans(cfg.font_size);
  style.padding = cfg.padding.value_or(2.0);
  const auto cells = squarified_treemap(items, treemap_bounds(style), style.padding);
  const auto summarizer = ladder_summarizer(cfg);
  std::vector<FitResult> fits;
  for (const auto& cell : cells) {
    const auto& item = *std::find_if(items.begin(), items.end(),
                                     [&](const Item& it) { return it.id == cell.item_id; });
    const TextBudget budget = budget_for_rect(treemap_text_area(cell, style.font), style.font);
    fits.push_back(fit_ladder(item.text, budget, style.font, *summarizer, SynonymLexicon::bundled()));
  }
  write_output(cfg.out, render_treemap(items, cells, fits, scale_for(cfg, items), style).str(), out);
}

void run_barchart(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1, 1, "one items file");
  const auto items = parse_items(cfg.inputs[0]);
  BarchartStyle style;
  style.width = cfg.width;
  style.height = cfg.height;
  style.title = cfg.title;
  style.font = FontMetrics::sans(cfg.font_size);
  style.padding = cfg.padding.value_or(4.0);
  style.gap = cfg.gap;
  style.overlay = cfg.overlay;
  const auto slots = barchart_layout(items, barchart_bounds(style), style.gap);
  const auto summarizer = ladder_summarizer(cfg);
  std::vector<FitResult> fits;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const TextBudget budget = budget_for_rect(barchart_text_area(slots[i], style), style.font);
    fits.push_back(fit_ladder(items[i].text, budget, style.font, *summarizer, SynonymLexicon::bundled()));
  }
  const bool any_color = std::any_of(items.begin(), items.end(), [](const Item& i) { return i.color_value; });
  std::optional<ColorScale> scale;
  if (any_color) scale = scale_for(cfg, items);
  write_output(cfg.out, render_barchart(items, slots, fits, scale, style).str(), out);
}

void run_reader(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1, 1, "one text file");
  const fs::path& input = cfg.inputs[0];
  const std::string title = cfg.title.empty() ? input.stem().string() : cfg.title;
  const Document doc = parse_document(input.stem().string(), title, read_text_file(input), heading_rules(cfg));

  TreeConfig tree_cfg;
  tree_cfg.leaf_target_words = cfg.target_words.value_or(tree_cfg.leaf_target_words);
  std::unique_ptr<Summarizer> summarizer;
  if (cfg.mode == SummaryMode::Extractive) {
    summarizer = std::make_unique<ExtractiveSummarizer>(
        ExtractiveOptions{.max_sentences = 1, .truncate_when_nothing_fits = true});
  } else {
    summarizer = make_summarizer(cfg.mode, cfg.provider);
  }
  const SummaryTree tree = build_summary_tree(doc, tree_cfg, *summarizer);
  write_output(cfg.out, serialize_reader(export_reader(doc, tree)), out);

  if (cfg.landmark) {
    fs::path svg_path = cfg.landmark_out;
    if (svg_path.empty()) {
      if (cfg.out.empty()) throw Error("--landmark needs --out or --landmark-out");
      svg_path = fs::path(cfg.out).replace_extension(".svg");
    }
    LandmarkStyle style;
    style.font = FontMetrics::sans(cfg.font_size);
    style.opacity = cfg.landmark_opacity;
    style.width = cfg.width;
    write_output(svg_path, render_landmark_prose(doc, tree, style).str(), out);
  }
}

void run_markup(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1, 2, "a text file and an optional span file");
  const std::string text = read_text_file(cfg.inputs[0]);
  std::vector<MarkupSpan> spans;
  if (cfg.inputs.size() > 1) spans = parse_spans(read_text_file(cfg.inputs[1]));
  MarkupStyle style;
  style.width = cfg.width;
  style.font = FontMetrics::sans(cfg.font_size);
  style.title = cfg.title;
  if (cfg.side_summary) {
    const auto summarizer = make_summarizer(cfg.mode, cfg.provider);
    SummaryResult summary = summarizer->summarize(text, cfg.target_words.value_or(25));
    style.side_text = summary.text;
    if (cfg.inputs.size() == 1) {
      for (const auto& s : summary.attended_spans) spans.push_back({s, 1.0, MarkupChannel::Background});
    }
  }
  const ColorScale scale = cfg.color_scale == "green-yellow-red" ? ColorScale::green_yellow_red(-1.0, 1.0)
                                                                 : ColorScale::red_yellow_green(-1.0, 1.0);
  write_output(cfg.out, render_markup(text, spans, scale, style).str(), out);
}

void run_summarize(const RunConfig& cfg, std::ostream& out) {
  require_inputs(cfg, 1, 1, "one text file");
  const std::string text = read_text_file(cfg.inputs[0]);
  const auto summarizer = make_summarizer(cfg.mode, cfg.provider);
  const SummaryResult r = summarizer->summarize(text, cfg.target_words.value_or(25));
  write_output(cfg.out, r.text.empty() ? std::string() : r.text + "\n", out);
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Treemap: return "treemap";
    case Command::Barchart: return "barchart";
    case Command::Reader: return "reader";
    case Command::Markup: return "markup";
    case Command::Summarize: return "summarize";
  }
  return "summarize";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::Treemap, Command::Barchart, Command::Reader, Command::Markup, Command::Summarize}) {
    if (to_string(c) == name) return c;
  }
  throw Error("unknown command '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  if (!(width > 0.0) || !std::isfinite(width)) throw Error("width must be positive");
  if (!(height > 0.0) || !std::isfinite(height)) throw Error("height must be positive");
  if (!(font_size > 0.0) || !std::isfinite(font_size)) throw Error("font size must be positive");
  if (padding && !(*padding >= 0.0)) throw Error("padding must not be negative");
  if (target_words && *target_words < 0) throw Error("target words must not be negative");
  if (!(gap >= 0.0)) throw Error("gap must not be negative");
  if (!(landmark_opacity >= 0.0 && landmark_opacity <= 1.0)) throw Error("landmark opacity must be in [0, 1]");
  if (color_scale != "red-yellow-green" && color_scale != "green-yellow-red") {
    throw Error("unknown color scale '" + color_scale + "'");
  }
  if (color_min && color_max && !(*color_min < *color_max)) throw Error("color min must be below color max");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    switch (config.command) {
      case Command::Treemap: run_treemap(config, out); break;
      case Command::Barchart: run_barchart(config, out); break;
      case Command::Reader: run_reader(config, out); break;
      case Command::Markup: run_markup(config, out); break;
      case Command::Summarize: run_summarize(config, out); break;
    }
  } catch (const std::exception& e) {
    err << "proseviz " << to_string(config.command) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace proseviz::cli
