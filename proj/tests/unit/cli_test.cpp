#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "cli/cli.hpp"
#include "proseviz/reader_export.hpp"
#include "support/oracles.hpp"

using namespace proseviz;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome tool(const std::string& args) {
  const std::string cmd = std::string(PROSEVIZ_TOOL) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

std::string fixture_path(const std::string& name) { return std::string(PROSEVIZ_FIXTURE_DIR) + "/" + name; }

Outcome run_in_process(cli::RunConfig cfg) {
  std::ostringstream out, err;
  Outcome o;
  o.status = cli::run(cfg, out, err);
  o.out = out.str();
  if (o.status != 0) o.out = err.str();
  return o;
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / ("proseviz_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(ParseItems, TwoRowCsv) {
  const auto items = cli::parse_items_csv(
      "id,size,color,label,text\n"
      "a,3,0.5,Alpha,\"Hello, \"\"world\"\".\"\n"
      "b,1.5,,Beta,Plain\n",
      ".");
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[0], (Item{"a", 3, 0.5, "Alpha", "Hello, \"world\"."}));
  EXPECT_EQ(items[1], (Item{"b", 1.5, std::nullopt, "Beta", "Plain"}));
}

TEST(ParseItems, ColumnOrderAndOptionalColor) {
  const auto items = cli::parse_items_csv("text,label,size,id\r\nSome text,L,2,x\r\n", ".");
  ASSERT_EQ(items.size(), 1u);
  EXPECT_EQ(items[0], (Item{"x", 2, std::nullopt, "L", "Some text"}));
}

TEST(ParseItems, ErrorsNameRowAndColumn) {
  try {
    cli::parse_items_csv("id,size,label,text\na,1,A,t\nb,abc,B,t\n", ".");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("row 3, column size"), std::string::npos) << e.what();
  }
  EXPECT_THROW(cli::parse_items_csv("id,size,label\na,1,A\n", "."), Error);
  EXPECT_THROW(cli::parse_items_csv("id,size,label,text\na,1,A\n", "."), Error);
  EXPECT_THROW(cli::parse_items_csv("id,size,label,text\na,-1,A,t\n", "."), Error);
  EXPECT_THROW(cli::parse_items_csv("id,size,label,text\na,1,A,t\na,2,B,u\n", "."), Error);
  EXPECT_THROW(cli::parse_items_json(R"([{"id":"a","size":1,"label":"A"}])", "."), Error);
}

TEST(ParseItems, JsonAndCsvAgree) {
  const auto csv = cli::parse_items(fixture_path("oil_exporters.csv"));
  const auto json = cli::parse_items(fixture_path("oil_exporters.json"));
  EXPECT_EQ(csv.size(), 5u);
  EXPECT_EQ(csv, json);
}

TEST(ParseItems, TextFromReferencedFiles) {
  const auto items = cli::parse_items(fixture_path("cloud_vendors.csv"));
  ASSERT_FALSE(items.empty());
  const std::map<std::string, std::string> files = {
      {"aws", "aws"}, {"azure", "azure"}, {"gcp", "gcp"}, {"ali", "alibaba"}};
  ASSERT_EQ(items.size(), files.size());
  for (const auto& it : items) {
    std::string file = oracle::read_file(fixture_path("vendor_text/" + files.at(it.id) + ".txt"));
    file.erase(file.find_last_not_of(" \n\r\t") + 1);
    EXPECT_EQ(it.text, file) << it.id;
  }
}

TEST(ParseSpans, NumbersCategoriesAndChannels) {
  const auto spans = cli::parse_spans(
      R"([{"start":0,"end":3,"score":-0.5},{"start":4,"end":6,"score":"place","channel":"color"}])");
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0].span, (CharSpan{0, 3}));
  EXPECT_EQ(std::get<double>(spans[0].value), -0.5);
  EXPECT_EQ(spans[0].channel, MarkupChannel::Background);
  EXPECT_EQ(std::get<std::string>(spans[1].value), "place");
  EXPECT_EQ(spans[1].channel, MarkupChannel::Color);
  EXPECT_THROW(cli::parse_spans(R"([{"start":-1,"end":3,"score":0}])"), Error);
  EXPECT_FALSE(cli::parse_spans(oracle::read_file(fixture_path("markup_spans.json"))).empty());
}

TEST(Run, TreemapProducesOneCellPerItem) {
  cli::RunConfig cfg;
  cfg.command = cli::Command::Treemap;
  cfg.inputs = {fixture_path("oil_exporters.csv")};
  const Outcome o = run_in_process(cfg);
  ASSERT_EQ(o.status, 0) << o.out;
  ASSERT_TRUE(oracle::well_formed(o.out));
  EXPECT_EQ(oracle::named(oracle::elements(o.out), "g", "cell").size(), 5u);
}

TEST(Run, TreemapMatchesGolden) {
  const Outcome o = tool("treemap --title \"Oil exporters\" " + fixture_path("oil_exporters.csv"));
  ASSERT_EQ(o.status, 0);
  EXPECT_EQ(o.out, oracle::read_file(std::string(PROSEVIZ_GOLDEN_DIR) + "/treemap_oil.svg"));
}

TEST(Run, ReaderOutputValidates) {
  const fs::path out = temp_dir() / "ch3.json";
  const Outcome o = tool("reader --landmark -o " + out.string() + " " + fixture_path("wonderland_ch3.txt"));
  ASSERT_EQ(o.status, 0);
  const ReaderValidation v = validate_reader(oracle::read_file(out.string()));
  ASSERT_TRUE(v.ok()) << v.errors.front();
  ASSERT_EQ(v.doc->chapters.size(), 1u);
  EXPECT_EQ(v.doc->chapters[0].heading, "CHAPTER III. A Caucus-Race and a Long Tale");
  fs::path svg = out;
  svg.replace_extension(".svg");
  EXPECT_TRUE(oracle::well_formed(oracle::read_file(svg.string())));
}

TEST(Run, ZeroTargetSummaryIsEmpty) {
  const Outcome o = tool("summarize --mode extractive --target 0 " + fixture_path("wonderland_opening.txt"));
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(o.out, "");
}

TEST(Run, SummaryRespectsTarget) {
  const Outcome o = tool("summarize --target 40 " + fixture_path("wonderland_ch3.txt"));
  ASSERT_EQ(o.status, 0);
  EXPECT_GT(word_count(o.out), 0);
  EXPECT_LE(word_count(o.out), 40);
}

TEST(Run, BarchartAndMarkup) {
  const Outcome bars = tool("barchart --overlay " + fixture_path("cloud_vendors.csv"));
  ASSERT_EQ(bars.status, 0);
  EXPECT_EQ(oracle::named(oracle::elements(bars.out), "rect", "bar").size(), 4u);
  const Outcome markup = tool("markup " + fixture_path("markup_source.txt") + " " + fixture_path("markup_spans.json"));
  ASSERT_EQ(markup.status, 0);
  EXPECT_FALSE(oracle::named(oracle::elements(markup.out), "rect", "highlight").empty());
}

TEST(Run, ErrorsExitNonzero) {
  EXPECT_NE(tool("treemap /nonexistent.csv").status, 0);
  EXPECT_NE(tool("nonsense").status, 0);
  EXPECT_NE(tool("summarize --mode magic " + fixture_path("markup_source.txt")).status, 0);
  EXPECT_NE(tool("treemap --width -5 " + fixture_path("oil_exporters.csv")).status, 0);
  EXPECT_NE(tool("reader --landmark " + fixture_path("wonderland_ch3.txt")).status, 0);
  EXPECT_EQ(tool("--help").status, 0);
}
