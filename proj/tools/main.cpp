#include <iostream>

#include <CLI11.hpp>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  using proseviz::cli::Command;
  proseviz::cli::RunConfig cfg;
  cfg.provider = proseviz::ProviderConfig::from_env();

  CLI::App app{"Fit prose into charts and build summarize-and-expand readers."};
  app.set_config("--config", "", "TOML file of option defaults; flags override it");
  app.require_subcommand(1);
  app.fallthrough();
  app.get_formatter()->column_width(34);

  std::string mode = "extractive";
  std::optional<double> padding;
  std::optional<int> target;
  std::string out;
  std::string landmark_out;
  app.add_option("--width", cfg.width, "Canvas width in px")->capture_default_str();
  app.add_option("--height", cfg.height, "Canvas height in px")->capture_default_str();
  app.add_option("--font-size", cfg.font_size, "Body font size in px")->capture_default_str();
  app.add_option("--padding", padding, "Cell or column padding in px (treemap 2, barchart 4)");
  app.add_option("--mode", mode, "Summarizer: extractive, lede, keywords or remote")
      ->check(CLI::IsMember({"extractive", "lede", "keywords", "remote"}))
      ->capture_default_str();
  app.add_option("--target-words,--target", target, "Summary length in words");
  app.add_option("--out,-o", out, "Output file (stdout when omitted)");
  app.add_option("--title", cfg.title, "Title drawn above the chart");
  app.add_flag("--overlay", cfg.overlay, "barchart: text spans whole columns, drawn over the bars");
  app.add_option("--gap", cfg.gap, "barchart: gap between columns in px")->capture_default_str();
  app.add_flag("--landmark", cfg.landmark, "reader: also render the landmark prose SVG");
  app.add_option("--landmark-out", landmark_out, "reader: landmark SVG path (default: --out with .svg)");
  app.add_option("--landmark-opacity", cfg.landmark_opacity, "reader: landmark text opacity")
      ->capture_default_str();
  app.add_option("--color-scale", cfg.color_scale, "red-yellow-green or green-yellow-red")
      ->capture_default_str();
  app.add_option("--color-min", cfg.color_min, "Color domain minimum (default: data minimum)");
  app.add_option("--color-max", cfg.color_max, "Color domain maximum (default: data maximum)");
  app.add_flag("--summary", cfg.side_summary, "markup: show a summary beside the source");
  app.add_option("--heading-pattern", cfg.heading_patterns,
                 "reader: regex marking chapter headings (repeatable; replaces the defaults)");
  app.add_option("--endpoint", cfg.provider.endpoint, "Summarizer endpoint (env SUMMARIZER_ENDPOINT)");
  app.add_option("--model", cfg.provider.model, "Model name sent to the summarizer endpoint");
  app.add_option("--response-field", cfg.provider.response_field, "Dotted path of the summary in replies");

  std::vector<std::string> inputs;
  const auto add_command = [&](Command c, const char* help, const char* inputs_help, std::size_t max) {
    auto* sub = app.add_subcommand(std::string(proseviz::cli::to_string(c)), help);
    sub->add_option("inputs", inputs, inputs_help)->required()->expected(1, static_cast<int>(max));
    sub->callback([&cfg, c] { cfg.command = c; });
  };
  add_command(Command::Treemap, "Treemap with fitted text per cell", "Items file (.csv or .json)", 1);
  add_command(Command::Barchart, "Bar chart with text in the columns", "Items file (.csv or .json)", 1);
  add_command(Command::Reader, "Summary hierarchy as reader.json", "UTF-8 text file", 1);
  add_command(Command::Markup, "Running text with span markup", "Text file and optional span JSON", 2);
  add_command(Command::Summarize, "Summarize a text file to stdout", "UTF-8 text file", 1);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.mode = proseviz::parse_summary_mode(mode);
  } catch (const std::exception& e) {
    std::cerr << "proseviz: " << e.what() << "\n";
    return 2;
  }
  cfg.padding = padding;
  cfg.target_words = target;
  cfg.out = out;
  cfg.landmark_out = landmark_out;
  cfg.inputs.assign(inputs.begin(), inputs.end());
  return proseviz::cli::run(cfg, std::cout, std::cerr);
}
