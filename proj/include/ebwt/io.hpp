#ifndef EBWT_IO_HPP
#define EBWT_IO_HPP

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ebwt/error.hpp"
#include "ebwt/transform.hpp"
#include "ebwt/words.hpp"

// Multiset interchange formats.
//
// Text: one entry per line, `lyndon` or `lyndon xN` (N >= 1). Blank lines
// are ignored. Output lists entries in ascending Lyndon order, multiplicity
// suffix only when N > 1.
//
// JSON: {"necklaces": [{"lyndon": "aab", "multiplicity": 1}, ...]}

namespace ebwt::io {

struct RawEntry {
  std::string word;
  std::size_t multiplicity = 1;
  std::size_t line = 0;  // 1-based; 0 for JSON entries
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline std::string where(const RawEntry& e) {
  if (e.line == 0) {
    return "entry \"" + e.word + "\"";
  }
  return "line " + std::to_string(e.line) + " (\"" + e.word + "\")";
}

}  // namespace detail

inline std::vector<RawEntry> parse_text_entries(std::string_view text) {
  std::vector<RawEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++line_no;
    const std::string_view line = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) {
      continue;
    }
    RawEntry entry;
    entry.line = line_no;
    const auto space = line.find_first_of(" \t");
    entry.word = std::string(line.substr(0, space));
    if (space != std::string_view::npos) {
      std::string_view suffix = detail::trim(line.substr(space));
      if (suffix.size() < 2 || suffix.front() != 'x') {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected `word` or `word xN`, got \"" +
                         std::string(line) + "\"");
      }
      suffix.remove_prefix(1);
      std::size_t mult = 0;
      auto [ptr, ec] =
          std::from_chars(suffix.data(), suffix.data() + suffix.size(), mult);
      if (ec != std::errc{} || ptr != suffix.data() + suffix.size() ||
          mult == 0) {
        throw InputError("line " + std::to_string(line_no) +
                         ": bad multiplicity in \"" + std::string(line) + "\"");
      }
      entry.multiplicity = mult;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

inline std::vector<RawEntry> parse_json_entries(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("necklaces") ||
      !doc["necklaces"].is_array()) {
    throw InputError("JSON multiset must be an object with a \"necklaces\" "
                     "array");
  }
  std::vector<RawEntry> out;
  for (const auto& item : doc["necklaces"]) {
    if (!item.is_object() || !item.contains("lyndon") ||
        !item["lyndon"].is_string()) {
      throw InputError("JSON necklace entry needs a string \"lyndon\" field");
    }
    RawEntry entry;
    entry.word = item["lyndon"].get<std::string>();
    if (item.contains("multiplicity")) {
      const auto& m = item["multiplicity"];
      if (!m.is_number_unsigned() || m.get<std::size_t>() == 0) {
        throw InputError("multiplicity of \"" + entry.word +
                         "\" must be a positive integer");
      }
      entry.multiplicity = m.get<std::size_t>();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

// JSON when the first non-blank character is '{', text otherwise.
inline std::vector<RawEntry> parse_entries(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json_entries(text);
  }
  return parse_text_entries(text);
}

// Concatenated entry words, for alphabet inference.
inline std::string entry_symbols(const std::vector<RawEntry>& entries) {
  std::string s;
  for (const auto& e : entries) {
    s += e.word;
  }
  return s;
}

// Entries must be Lyndon words unless `canonicalize` is set, in which case
// any primitive word is replaced by its Lyndon rotation.
inline NecklaceMultiset to_multiset(const std::vector<RawEntry>& entries,
                                    const Alphabet& alphabet,
                                    bool canonicalize = false) {
  NecklaceMultiset m;
  for (const auto& e : entries) {
    Word w;
    try {
      w = alphabet.encode(e.word);
    } catch (const InputError& err) {
      throw InputError(detail::where(e) + ": " + err.what());
    }
    if (w.empty()) {
      throw InputError(detail::where(e) + ": empty necklace");
    }
    if (!is_primitive(w)) {
      throw InputError(detail::where(e) + ": not primitive");
    }
    if (canonicalize) {
      m.add(lyndon_representative(w), e.multiplicity);
    } else {
      try {
        m.add(Necklace::from_lyndon(std::move(w)), e.multiplicity);
      } catch (const InputError&) {
        throw InputError(detail::where(e) +
                         ": not a Lyndon word (use --canonicalize)");
      }
    }
  }
  return m;
}

inline NecklaceMultiset parse_multiset(std::string_view text,
                                       const Alphabet& alphabet,
                                       bool canonicalize = false) {
  return to_multiset(parse_entries(text), alphabet, canonicalize);
}

inline std::string format_text(const NecklaceMultiset& m,
                               const Alphabet& alphabet) {
  std::string out;
  for (const auto& e : m.entries()) {
    out += alphabet.decode(e.necklace.lyndon());
    if (e.multiplicity > 1) {
      out += " x" + std::to_string(e.multiplicity);
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json to_json(const NecklaceMultiset& m,
                              const Alphabet& alphabet) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : m.entries()) {
    arr.push_back({{"lyndon", alphabet.decode(e.necklace.lyndon())},
                   {"multiplicity", e.multiplicity}});
  }
  return nlohmann::json{{"necklaces", std::move(arr)}};
}

}  // namespace ebwt::io

#endif  // EBWT_IO_HPP
