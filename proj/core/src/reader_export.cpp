#include "proseviz/reader_export.hpp"

#include <json.hpp>

#include "proseviz/utf8.hpp"

namespace proseviz {
namespace {

using Json = nlohmann::ordered_json;

class Checker {
 public:
  void fail(const std::string& path, const std::string& message) {
    errors.push_back(path + ": " + message);
  }

  const Json* field(const Json& obj, const std::string& path, const char* key, Json::value_t type) {
    const std::string where = path.empty() ? key : path + "." + key;
    const auto it = obj.find(key);
    if (it == obj.end()) {
      fail(where, "missing required field");
      return nullptr;
    }
    const bool integer = type == Json::value_t::number_integer;
    const bool ok = integer ? (it->is_number_integer() || it->is_number_unsigned()) : it->type() == type;
    if (!ok) {
      fail(where, std::string("expected ") + (integer ? "integer" : Json(type).type_name()));
      return nullptr;
    }
    return &*it;
  }

  std::vector<std::string> errors;
};

std::string index_path(const std::string& base, const char* key, std::size_t i) {
  return base + (base.empty() ? "" : ".") + key + "[" + std::to_string(i) + "]";
}

}  // namespace

ReaderDoc export_reader(const Document& doc, const SummaryTree& tree) {
  const std::u32string body = utf8::decode(doc.body);
  ReaderDoc out;
  out.title = doc.title;
  for (std::size_t chapter_index : tree.chapters) {
    if (chapter_index >= tree.nodes.size()) throw Error("span coverage violation");
    const SummaryNode& chapter = tree.nodes[chapter_index];
    if (chapter.span.begin > chapter.span.end || chapter.span.end > body.size()) {
      throw Error("span coverage violation");
    }
    ReaderChapter rc{chapter.id, chapter.heading, chapter.summary.text, {}};
    std::size_t cursor = chapter.span.begin;
    for (std::size_t leaf_index : chapter.children) {
      if (leaf_index >= tree.nodes.size()) throw Error("span coverage violation");
      const SummaryNode& leaf = tree.nodes[leaf_index];
      if (leaf.span.begin != cursor || leaf.span.end < leaf.span.begin ||
          leaf.span.end > chapter.span.end) {
        throw Error("span coverage violation");
      }
      std::string text = utf8::encode(std::u32string_view(body).substr(leaf.span.begin, leaf.span.size()));
      const int words = word_count(text);
      rc.nodes.push_back({leaf.id, CharSpan{leaf.span.begin - chapter.span.begin, leaf.span.end - chapter.span.begin},
                          leaf.summary.text, std::move(text), words});
      cursor = leaf.span.end;
    }
    if (cursor != chapter.span.end && !(chapter.children.empty() && chapter.span.empty())) {
      throw Error("span coverage violation");
    }
    out.chapters.push_back(std::move(rc));
  }
  return out;
}

std::string serialize_reader(const ReaderDoc& doc) {
  Json root;
  root["version"] = doc.version;
  root["title"] = doc.title;
  Json chapters = Json::array();
  for (const auto& c : doc.chapters) {
    Json jc;
    jc["id"] = c.id;
    jc["heading"] = c.heading;
    jc["summary"] = c.summary;
    Json nodes = Json::array();
    for (const auto& n : c.nodes) {
      Json jn;
      jn["id"] = n.id;
      jn["span"] = Json::array({n.span.begin, n.span.end});
      jn["summary"] = n.summary;
      jn["full_text"] = n.full_text;
      jn["word_count"] = n.word_count;
      nodes.push_back(std::move(jn));
    }
    jc["nodes"] = std::move(nodes);
    chapters.push_back(std::move(jc));
  }
  root["chapters"] = std::move(chapters);
  return root.dump(2, ' ', false, Json::error_handler_t::strict) + "\n";
}

ReaderValidation validate_reader(std::string_view bytes) {
  ReaderValidation result;
  Checker check;
  if (!utf8::is_valid(bytes)) {
    result.errors.push_back("$: input is not valid UTF-8");
    return result;
  }
  Json root;
  try {
    root = Json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    result.errors.push_back(std::string("$: malformed JSON: ") + e.what());
    return result;
  }
  if (!root.is_object()) {
    result.errors.push_back("$: expected object");
    return result;
  }

  ReaderDoc doc;
  if (const Json* v = check.field(root, "", "version", Json::value_t::number_integer)) {
    doc.version = v->get<int>();
    if (doc.version != kReaderFormatVersion) {
      check.fail("version", "unsupported version " + std::to_string(doc.version));
    }
  }
  if (const Json* v = check.field(root, "", "title", Json::value_t::string)) doc.title = v->get<std::string>();

  if (const Json* chapters = check.field(root, "", "chapters", Json::value_t::array)) {
    for (std::size_t ci = 0; ci < chapters->size(); ++ci) {
      const std::string cpath = index_path("", "chapters", ci);
      const Json& jc = (*chapters)[ci];
      if (!jc.is_object()) {
        check.fail(cpath, "expected object");
        continue;
      }
      ReaderChapter rc;
      if (const Json* v = check.field(jc, cpath, "id", Json::value_t::string)) rc.id = v->get<std::string>();
      if (const Json* v = check.field(jc, cpath, "heading", Json::value_t::string)) rc.heading = v->get<std::string>();
      if (jc.contains("summary")) {
        if (const Json* v = check.field(jc, cpath, "summary", Json::value_t::string)) rc.summary = v->get<std::string>();
      }
      const Json* nodes = check.field(jc, cpath, "nodes", Json::value_t::array);
      if (nodes == nullptr) continue;

      std::size_t cursor = 0;
      bool coverage_reported = false;
      for (std::size_t ni = 0; ni < nodes->size(); ++ni) {
        const std::string npath = index_path(cpath, "nodes", ni);
        const Json& jn = (*nodes)[ni];
        if (!jn.is_object()) {
          check.fail(npath, "expected object");
          continue;
        }
        ReaderNode rn;
        bool have_span = false;
        bool have_text = false;
        if (const Json* v = check.field(jn, npath, "id", Json::value_t::string)) rn.id = v->get<std::string>();
        if (const Json* v = check.field(jn, npath, "span", Json::value_t::array)) {
          const bool shape = v->size() == 2 && (*v)[0].is_number_unsigned() && (*v)[1].is_number_unsigned();
          if (shape && (*v)[0].get<std::size_t>() <= (*v)[1].get<std::size_t>()) {
            rn.span = {(*v)[0].get<std::size_t>(), (*v)[1].get<std::size_t>()};
            have_span = true;
          } else {
            check.fail(npath + ".span", "expected [start, end] with 0 <= start <= end");
          }
        }
        if (const Json* v = check.field(jn, npath, "summary", Json::value_t::string)) rn.summary = v->get<std::string>();
        if (const Json* v = check.field(jn, npath, "full_text", Json::value_t::string)) {
          rn.full_text = v->get<std::string>();
          have_text = true;
        }
        if (const Json* v = check.field(jn, npath, "word_count", Json::value_t::number_integer)) {
          rn.word_count = v->get<int>();
          if (have_text && rn.word_count != word_count(rn.full_text)) {
            check.fail(npath + ".word_count", "does not match full_text");
          }
        }
        if (have_span && !coverage_reported) {
          if (rn.span.begin != cursor) {
            check.fail(npath + ".span", "span coverage violation: expected start " + std::to_string(cursor));
            coverage_reported = true;
          } else if (have_text && rn.span.size() != utf8::length(rn.full_text)) {
            check.fail(npath + ".span", "span coverage violation: length differs from full_text");
            coverage_reported = true;
          }
          cursor = rn.span.end;
        }
        rc.nodes.push_back(std::move(rn));
      }
      doc.chapters.push_back(std::move(rc));
    }
  }

  result.errors = std::move(check.errors);
  if (result.errors.empty()) result.doc = std::move(doc);
  return result;
}

ReaderDoc parse_reader(std::string_view bytes) {
  ReaderValidation v = validate_reader(bytes);
  if (!v.ok()) {
    std::string message = "invalid reader document";
    for (const auto& e : v.errors) message += "\n  " + e;
    throw Error(message);
  }
  return std::move(*v.doc);
}

}  // namespace proseviz
