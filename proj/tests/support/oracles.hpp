#pragma once

// Independent reference implementations and helpers shared by the unit and
// acceptance tests. Nothing here calls into the code under test except for
// data tables (stopwords) and plain types.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "proseviz/layout.hpp"
#include "proseviz/lexicon.hpp"

namespace oracle {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string fixture(const std::string& name) {
  return read_file(std::string(PROSEVIZ_FIXTURE_DIR) + "/" + name);
}

// ---------------------------------------------------------------------------
// Layout

// Strips across the longer side, one per item in input order.
inline std::vector<proseviz::Rect> slice_and_dice(const std::vector<double>& sizes,
                                                  const proseviz::Rect& b) {
  double total = 0.0;
  for (double s : sizes) total += s;
  std::vector<proseviz::Rect> out;
  double offset = 0.0;
  const bool across_x = b.w >= b.h;
  for (double s : sizes) {
    const double frac = s / total;
    if (across_x) {
      out.push_back({b.x + offset, b.y, b.w * frac, b.h});
      offset += b.w * frac;
    } else {
      out.push_back({b.x, b.y + offset, b.w, b.h * frac});
      offset += b.h * frac;
    }
  }
  return out;
}

inline double max_aspect(const std::vector<proseviz::Rect>& rects) {
  double worst = 1.0;
  for (const auto& r : rects) worst = std::max(worst, std::max(r.w / r.h, r.h / r.w));
  return worst;
}

inline double overlap_area(const proseviz::Rect& a, const proseviz::Rect& b) {
  const double w = std::min(a.right(), b.right()) - std::max(a.x, b.x);
  const double h = std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
  return (w > 0.0 && h > 0.0) ? w * h : 0.0;
}

// ---------------------------------------------------------------------------
// Extractive summarization

struct ToySentence {
  std::string text;
  std::vector<std::string> words;  // as written, lowercase
};

// ASCII-only tokenizer mirroring the documented content-word rule.
inline std::vector<std::string> content_words(const ToySentence& s) {
  std::vector<std::string> out;
  for (const auto& w : s.words) {
    std::string t;
    for (char c : w) {
      if (std::isalnum(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(c)));
    }
    const bool letter = std::any_of(t.begin(), t.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
    if (t.size() >= 2 && letter && !proseviz::is_stopword(t)) out.push_back(t);
  }
  return out;
}

inline std::vector<double> sentence_scores(const std::vector<ToySentence>& doc) {
  std::map<std::string, int> tf;
  int max_tf = 0;
  for (const auto& s : doc) {
    for (const auto& w : content_words(s)) max_tf = std::max(max_tf, ++tf[w]);
  }
  std::vector<double> scores;
  for (const auto& s : doc) {
    double sum = 0.0;
    for (const auto& w : content_words(s)) sum += static_cast<double>(tf[w]) / max_tf;
    scores.push_back(sum / static_cast<double>(s.words.size()));
  }
  return scores;
}

struct Selection {
  std::vector<std::size_t> chosen;  // ascending
  double score = 0.0;
  int words = 0;
};

// Best-scoring subset within the word budget; among equal scores the
// lexicographically smallest index set.
inline Selection exhaustive_best(const std::vector<ToySentence>& doc, int target) {
  const auto scores = sentence_scores(doc);
  Selection best;
  bool have = false;
  const std::size_t n = doc.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Selection s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        s.chosen.push_back(i);
        s.score += scores[i];
        s.words += static_cast<int>(doc[i].words.size());
      }
    }
    if (s.words > target) continue;
    if (!have || s.score > best.score + 1e-12 ||
        (std::abs(s.score - best.score) <= 1e-12 && s.chosen < best.chosen)) {
      best = s;
      have = true;
    }
  }
  return best;
}

// Straight-line greedy: visit sentences by descending score (earlier first on
// ties), take each one that still fits.
inline Selection greedy_reference(const std::vector<ToySentence>& doc, int target) {
  const auto scores = sentence_scores(doc);
  std::vector<std::size_t> order(doc.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return scores[a] > scores[b]; });
  Selection s;
  for (auto i : order) {
    const int w = static_cast<int>(doc[i].words.size());
    if (s.words + w <= target) {
      s.chosen.push_back(i);
      s.words += w;
      s.score += scores[i];
    }
  }
  std::sort(s.chosen.begin(), s.chosen.end());
  return s;
}

inline std::vector<ToySentence> random_toy_document(std::mt19937_64& rng, std::size_t n) {
  static const std::vector<std::string> vocab = {
      "river", "mouse", "dodo",  "race",  "prize", "thimble", "lory",  "eaglet", "caucus", "tale",
      "dry",   "bank",  "party", "birds", "wet",   "circle",  "alice", "comfits", "duck",  "crab",
      "the",   "and",   "of",    "was",   "she",   "it",      "to",    "in"};
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> len(3, 14);
  std::vector<ToySentence> doc;
  for (std::size_t s = 0; s < n; ++s) {
    ToySentence t;
    const int words = len(rng);
    for (int w = 0; w < words; ++w) t.words.push_back(vocab[pick(rng)]);
    for (std::size_t w = 0; w < t.words.size(); ++w) {
      std::string word = t.words[w];
      if (w == 0) word[0] = static_cast<char>(std::toupper(word[0]));
      t.text += (w ? " " : "") + word;
    }
    t.text += ".";
    doc.push_back(std::move(t));
  }
  return doc;
}

inline std::string join_toy(const std::vector<ToySentence>& doc) {
  std::string out;
  for (const auto& s : doc) out += (out.empty() ? "" : " ") + s.text;
  return out;
}

// ---------------------------------------------------------------------------
// SVG inspection

using boost::property_tree::ptree;

inline ptree parse_xml(const std::string& xml) {
  std::istringstream in(xml);
  ptree tree;
  boost::property_tree::read_xml(in, tree);
  return tree;
}

inline bool well_formed(const std::string& xml) {
  try {
    parse_xml(xml);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

struct Element {
  std::string name;
  std::map<std::string, std::string> attrs;
  std::string text;
  std::vector<std::string> ancestors_class;  // classes of enclosing <g>
};

inline void collect(const ptree& node, const std::string& name, std::vector<std::string> classes,
                    std::vector<Element>& out) {
  Element e{name, {}, node.data(), classes};
  if (auto attrs = node.get_child_optional("<xmlattr>")) {
    for (const auto& [k, v] : *attrs) e.attrs[k] = v.data();
  }
  if (name == "g" && e.attrs.count("class")) classes.push_back(e.attrs["class"]);
  if (!name.empty()) out.push_back(e);
  for (const auto& [child_name, child] : node) {
    if (child_name == "<xmlattr>" || child_name == "<xmlcomment>") continue;
    collect(child, child_name, classes, out);
  }
}

inline std::vector<Element> elements(const std::string& xml) {
  std::vector<Element> out;
  collect(parse_xml(xml), "", {}, out);
  return out;
}

inline std::vector<Element> named(const std::vector<Element>& all, const std::string& name,
                                  const std::string& cls = "") {
  std::vector<Element> out;
  for (const auto& e : all) {
    if (e.name != name) continue;
    if (!cls.empty() && (!e.attrs.count("class") || e.attrs.at("class") != cls)) continue;
    out.push_back(e);
  }
  return out;
}

inline double num(const Element& e, const std::string& key) { return std::stod(e.attrs.at(key)); }

// Glyph box of a left-anchored text element given its rendered width.
inline proseviz::Rect glyph_box(const Element& e, double width) {
  const double fs = num(e, "font-size");
  return {num(e, "x"), num(e, "y") - 0.8 * fs, width, fs};
}

// Attributes are rounded to 0.01, so containment allows that much slack.
inline bool inside(const proseviz::Rect& outer, const proseviz::Rect& inner, double eps = 0.011) {
  return inner.x >= outer.x - eps && inner.y >= outer.y - eps &&
         inner.right() <= outer.right() + eps && inner.bottom() <= outer.bottom() + eps;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Text fitting

#include "proseviz/summarizer.hpp"
#include "proseviz/textfit.hpp"

namespace oracle {

// Greedy breaking re-derived from whole-line measurement.
inline bool fits(const std::string& text, const proseviz::TextBudget& b, const proseviz::FontMetrics& f,
                 std::vector<std::string>* lines_out = nullptr) {
  if (b.max_lines <= 0 || b.line_width <= 0) return false;
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string w; in >> w;) {
    if (!lines.empty() && proseviz::measure(lines.back() + " " + w, f) <= b.line_width + 1e-9) {
      lines.back() += " " + w;
    } else {
      lines.push_back(w);
    }
  }
  if (lines.empty() || lines.size() > static_cast<std::size_t>(b.max_lines)) return false;
  for (const auto& l : lines) {
    if (proseviz::measure(l, f) > b.line_width + 1e-9) return false;
  }
  if (lines_out) *lines_out = lines;
  return true;
}

struct LadderStep {
  proseviz::FitStrategy strategy;
  int parameter;
  std::string text;
};

// The documented candidate sequence, generated straight from the summarizers.
inline std::vector<LadderStep> ladder_candidates(const std::string& text, const proseviz::TextBudget& b,
                                                 const proseviz::Summarizer& summarizer,
                                                 const proseviz::SynonymLexicon& lexicon) {
  using proseviz::FitStrategy;
  std::vector<LadderStep> steps{{FitStrategy::Full, 0, text}};
  std::string best;
  for (int target : {b.est_words, b.est_words / 2}) {
    if (target <= 0) continue;
    const auto s = summarizer.summarize(text, target);
    if (best.empty()) best = s.text;
    steps.push_back({FitStrategy::Summarized, target, s.text});
  }
  const std::string base = best.empty() ? text : best;
  steps.push_back({FitStrategy::SynonymShortened, 0, proseviz::synonym_shorten(base, lexicon)});
  for (int k = b.est_words; k >= 1; --k) {
    steps.push_back({FitStrategy::Keywords, k, proseviz::keyword_summarize(text, k).text});
  }
  for (int chars = b.est_chars; chars >= 1; --chars) {
    steps.push_back({FitStrategy::TruncatedLede, chars, proseviz::lede_extract(text, chars).text});
  }
  return steps;
}

}  // namespace oracle
