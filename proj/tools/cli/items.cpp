#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli/cli.hpp"
#include "proseviz/utf8.hpp"

namespace proseviz::cli {
namespace {

namespace fs = std::filesystem;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string_view strip_bom(std::string_view s) {
  return s.starts_with("\xEF\xBB\xBF") ? s.substr(3) : s;
}

std::optional<double> to_number(std::string_view raw) {
  const std::string s = trim(raw);
  if (s.empty()) return std::nullopt;
  const char* first = s.data();
  if (*first == '+') ++first;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

// RFC 4180 records: quoted fields may hold commas, doubled quotes and newlines.
std::vector<std::vector<std::string>> csv_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  const auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    const bool blank = record.size() == 1 && record[0].empty() && !field_started;
    if (!blank) records.push_back(std::move(record));
    record.clear();
    field_started = false;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field.push_back(c);
      }
      ++i;
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      field_started = true;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      end_record();
    } else {
      field.push_back(c);
    }
    ++i;
  }
  if (quoted) throw Error("unterminated quoted field at end of input");
  if (!field.empty() || !record.empty() || field_started) end_record();
  return records;
}

std::string where(std::string_view unit, std::size_t row, std::string_view column) {
  return std::string(unit) + " " + std::to_string(row) + ", column " + std::string(column) + ": ";
}

std::string resolve_text(const std::string& value, const fs::path& base_dir, const std::string& context) {
  if (!value.starts_with('@')) return value;
  const fs::path path = base_dir / fs::path(value.substr(1));
  try {
    return trim(read_text_file(path));
  } catch (const Error& e) {
    throw Error(context + e.what());
  }
}

void check_unique(std::set<std::string>& seen, const Item& item, const std::string& context) {
  if (item.id.empty()) throw Error(context + "empty id");
  if (!seen.insert(item.id).second) throw Error(context + "duplicate id '" + item.id + "'");
}

}  // namespace

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string bytes = buffer.str();
  if (!utf8::is_valid(bytes)) throw Error("'" + path.string() + "' is not valid UTF-8");
  return std::string(strip_bom(bytes));
}

std::vector<Item> parse_items(const fs::path& file) {
  const std::string bytes = read_text_file(file);
  const fs::path base = file.parent_path();
  auto ext = file.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  try {
    return ext == ".json" ? parse_items_json(bytes, base) : parse_items_csv(bytes, base);
  } catch (const Error& e) {
    throw Error(file.string() + ": " + e.what());
  }
}

std::vector<Item> parse_items_csv(std::string_view bytes, const fs::path& base_dir) {
  if (!utf8::is_valid(bytes)) throw Error("items are not valid UTF-8");
  const auto records = csv_records(strip_bom(bytes));
  if (records.empty()) throw Error("missing header row");

  std::optional<std::size_t> col_id, col_size, col_color, col_label, col_text;
  for (std::size_t c = 0; c < records[0].size(); ++c) {
    const std::string name = trim(records[0][c]);
    if (name == "id") col_id = c;
    else if (name == "size") col_size = c;
    else if (name == "color") col_color = c;
    else if (name == "label") col_label = c;
    else if (name == "text") col_text = c;
  }
  std::string missing;
  for (const auto& [name, col] : {std::pair{"id", col_id}, {"size", col_size}, {"label", col_label},
                                  {"text", col_text}}) {
    if (!col) missing += (missing.empty() ? "" : ", ") + std::string(name);
  }
  if (!missing.empty()) throw Error("row 1: missing column(s) " + missing);

  std::vector<Item> items;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::size_t row = r + 1;
    const auto cell = [&](std::size_t col) { return col < rec.size() ? rec[col] : std::string(); };
    if (rec.size() != records[0].size()) {
      throw Error("row " + std::to_string(row) + ": expected " + std::to_string(records[0].size()) +
                  " fields, found " + std::to_string(rec.size()));
    }
    Item item;
    item.id = trim(cell(*col_id));
    const auto size = to_number(cell(*col_size));
    if (!size) throw Error(where("row", row, "size") + "'" + cell(*col_size) + "' is not a number");
    if (*size < 0.0) throw Error(where("row", row, "size") + "must not be negative");
    item.size_value = *size;
    if (col_color && !trim(cell(*col_color)).empty()) {
      const auto color = to_number(cell(*col_color));
      if (!color) throw Error(where("row", row, "color") + "'" + cell(*col_color) + "' is not a number");
      item.color_value = color;
    }
    item.label = trim(cell(*col_label));
    item.text = resolve_text(cell(*col_text), base_dir, where("row", row, "text"));
    check_unique(seen, item, "row " + std::to_string(row) + ": ");
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<Item> parse_items_json(std::string_view bytes, const fs::path& base_dir) {
  if (!utf8::is_valid(bytes)) throw Error("items are not valid UTF-8");
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(strip_bom(bytes));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_array()) throw Error("expected a JSON array of items");

  std::vector<Item> items;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const auto& obj = root[i];
    const std::size_t row = i + 1;
    if (!obj.is_object()) throw Error("item " + std::to_string(row) + ": expected an object");
    const auto string_field = [&](const char* key) {
      const auto it = obj.find(key);
      if (it == obj.end()) throw Error(where("item", row, key) + "missing");
      if (!it->is_string()) throw Error(where("item", row, key) + "expected a string");
      return it->get<std::string>();
    };
    Item item;
    item.id = string_field("id");
    const auto size = obj.find("size");
    if (size == obj.end()) throw Error(where("item", row, "size") + "missing");
    if (!size->is_number()) throw Error(where("item", row, "size") + "expected a number");
    item.size_value = size->get<double>();
    if (!std::isfinite(item.size_value) || item.size_value < 0.0) {
      throw Error(where("item", row, "size") + "must be a finite non-negative number");
    }
    if (const auto color = obj.find("color"); color != obj.end() && !color->is_null()) {
      if (!color->is_number()) throw Error(where("item", row, "color") + "expected a number or null");
      item.color_value = color->get<double>();
    }
    item.label = string_field("label");
    item.text = resolve_text(string_field("text"), base_dir, where("item", row, "text"));
    check_unique(seen, item, "item " + std::to_string(row) + ": ");
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<MarkupSpan> parse_spans(std::string_view json) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed span JSON: ") + e.what());
  }
  if (!root.is_array()) throw Error("expected a JSON array of spans");
  std::vector<MarkupSpan> spans;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const auto& s = root[i];
    const std::string at = "span " + std::to_string(i + 1) + ": ";
    if (!s.is_object()) throw Error(at + "expected an object");
    if (!s.contains("start") || !s["start"].is_number_unsigned() || !s.contains("end") ||
        !s["end"].is_number_unsigned()) {
      throw Error(at + "start and end must be non-negative integers");
    }
    MarkupSpan m;
    m.span = {s["start"].get<std::size_t>(), s["end"].get<std::size_t>()};
    if (m.span.begin > m.span.end) throw Error(at + "start is after end");
    const auto score = s.find("score");
    if (score == s.end()) throw Error(at + "missing score");
    if (score->is_number()) {
      m.value = score->get<double>();
    } else if (score->is_string()) {
      m.value = score->get<std::string>();
    } else {
      throw Error(at + "score must be a number or a category string");
    }
    if (const auto channel = s.find("channel"); channel != s.end()) {
      if (!channel->is_string()) throw Error(at + "channel must be a string");
      try {
        m.channel = parse_markup_channel(channel->get<std::string>());
      } catch (const Error& e) {
        throw Error(at + e.what());
      }
    }
    spans.push_back(std::move(m));
  }
  return spans;
}

}  // namespace proseviz::cli
