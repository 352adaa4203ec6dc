#include "tempods/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <unordered_set>

#include "json.hpp"

namespace tempods {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

bool is_connector_char(char c) { return c == '&' || c == '-' || c == '\''; }

std::string join_tokens(const std::vector<std::string>& tokens, int begin,
                        int end) {
  std::string out;
  for (int i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += tokens[i];
  }
  return out;
}

// Trailing-period abbreviations that do not end a sentence.
const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> set = {
      "Mr", "Mrs", "Ms", "Dr", "Prof", "Gen", "Rep", "Sen", "St",
      "Jr", "Sr", "Inc", "Corp", "Co", "Ltd", "vs", "etc", "approx",
      "dept", "est", "No", "U.S", "U.K", "a.m", "p.m", "e.g", "i.e",
      "Jan", "Feb", "Mar", "Apr", "Jun", "Jul", "Aug", "Sep", "Sept",
      "Oct", "Nov", "Dec"};
  return set;
}

}  // namespace

std::string Gazetteer::fold(std::string_view s) const {
  std::string out(s);
  if (!case_sensitive_) {
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
  }
  return out;
}

bool Gazetteer::add(const std::string& surface, const std::string& entity_type,
                    const std::string& canonical_id,
                    std::vector<std::string>* diags) {
  auto fail = [&](const std::string& msg) {
    if (diags) diags->push_back(msg);
    return false;
  };
  if (surface.empty()) return fail("gazetteer: empty surface form");
  if (entity_type.empty() || canonical_id.empty())
    return fail("gazetteer: missing type or canonical id for '" + surface + "'");

  auto tokens = tokenize(surface);
  if (tokens.empty()) return fail("gazetteer: surface '" + surface + "' has no tokens");

  auto it = id_types_.find(canonical_id);
  if (it != id_types_.end() && it->second != entity_type) {
    return fail("gazetteer: canonical id '" + canonical_id +
                "' already registered with type " + it->second);
  }

  std::string key = fold(join_tokens(tokens, 0, static_cast<int>(tokens.size())));
  if (entries_.count(key)) {
    return fail("gazetteer: duplicate surface '" + surface + "' (first entry kept)");
  }
  entries_.emplace(std::move(key), Entry{canonical_id, entity_type});
  id_types_.emplace(canonical_id, entity_type);
  max_tokens_ = std::max(max_tokens_, static_cast<int>(tokens.size()));
  return true;
}

const Gazetteer::Entry* Gazetteer::find(const std::vector<std::string>& tokens,
                                        int begin, int end) const {
  auto it = entries_.find(fold(join_tokens(tokens, begin, end)));
  return it == entries_.end() ? nullptr : &it->second;
}

const std::string* Gazetteer::type_of(const std::string& canonical_id) const {
  auto it = id_types_.find(canonical_id);
  return it == id_types_.end() ? nullptr : &it->second;
}

IngestResult ingest_documents(std::istream& record_stream) {
  IngestResult result;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(record_stream, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
      result.diagnostics.push_back({line_no, "malformed record (not a JSON object)"});
      continue;
    }
    auto field = [&](const char* name) -> std::string {
      auto it = rec.find(name);
      if (it == rec.end() || !it->is_string()) return {};
      return it->get<std::string>();
    };
    std::string id = field("id");
    if (id.empty()) {
      result.diagnostics.push_back({line_no, "missing id"});
      continue;
    }
    std::string ts = field("timestamp");
    auto day = parse_day(ts);
    if (!day) {
      result.diagnostics.push_back(
          {line_no, "record '" + id + "': missing or unparseable timestamp '" + ts + "'"});
      continue;
    }
    if (!seen_ids.insert(id).second) {
      result.diagnostics.push_back(
          {line_no, "duplicate document id '" + id + "' (first occurrence kept)"});
      continue;
    }
    result.documents.push_back(
        Document{id, field("source"), field("title"), field("body"), *day});
  }
  return result;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i + 1;
      while (j < n) {
        unsigned char cj = static_cast<unsigned char>(text[j]);
        if (is_word_char(cj)) {
          ++j;
        } else if (is_connector_char(text[j]) && j + 1 < n &&
                   is_word_char(static_cast<unsigned char>(text[j + 1]))) {
          j += 2;
        } else {
          break;
        }
      }
      tokens.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      tokens.emplace_back(1, text[i]);
      ++i;
    }
  }
  return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::string current;
  const std::size_t n = text.size();
  auto flush = [&]() {
    // Trim surrounding whitespace.
    std::size_t a = current.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) {
      current.clear();
      return;
    }
    std::size_t b = current.find_last_not_of(" \t\r\n");
    sentences.push_back(current.substr(a, b - a + 1));
    current.clear();
  };
  for (std::size_t i = 0; i < n; ++i) {
    char c = text[i];
    current += c;
    if (c != '.' && c != '!' && c != '?') continue;
    bool boundary = true;
    if (c == '.') {
      // Decimal point.
      if (i > 0 && i + 1 < n &&
          std::isdigit(static_cast<unsigned char>(text[i - 1])) &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        boundary = false;
      }
      // Preceding word in the abbreviation list.
      if (boundary && i > 0) {
        std::size_t w = i;
        while (w > 0 && !std::isspace(static_cast<unsigned char>(text[w - 1]))) {
          --w;
        }
        std::string word(text.substr(w, i - w));
        if (abbreviations().count(word)) boundary = false;
      }
    }
    // Keep runs like "..." or "?!" together.
    if (boundary && i + 1 < n &&
        (text[i + 1] == '.' || text[i + 1] == '!' || text[i + 1] == '?')) {
      boundary = false;
    }
    if (boundary) flush();
  }
  flush();
  return sentences;
}

std::vector<EntityMention> find_mentions(const std::vector<std::string>& tokens,
                                         const Gazetteer& gaz) {
  std::vector<EntityMention> mentions;
  const int n = static_cast<int>(tokens.size());
  int i = 0;
  while (i < n) {
    int longest = 0;
    const Gazetteer::Entry* hit = nullptr;
    const int cap = std::min(n - i, gaz.max_tokens());
    for (int len = cap; len >= 1; --len) {
      if (const auto* e = gaz.find(tokens, i, i + len)) {
        longest = len;
        hit = e;
        break;
      }
    }
    if (hit) {
      mentions.push_back(EntityMention{join_tokens(tokens, i, i + longest),
                                       hit->entity_type, hit->canonical_id, i,
                                       i + longest});
      i += longest;
    } else {
      ++i;
    }
  }
  return mentions;
}

std::vector<Sentence> annotate_sentences(const Document& doc,
                                         const Gazetteer& gaz) {
  std::vector<Sentence> out;
  int index = 0;
  for (const std::string_view part : {std::string_view(doc.title),
                                      std::string_view(doc.body)}) {
    for (auto& text : split_sentences(part)) {
      Sentence s;
      s.doc_id = doc.id;
      s.index = index++;
      s.date = doc.date;
      s.tokens = tokenize(text);
      s.mentions = find_mentions(s.tokens, gaz);
      s.text = std::move(text);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Gazetteer load_gazetteer(std::istream& in, bool case_sensitive,
                         std::vector<std::string>* diags) {
  Gazetteer gaz(case_sensitive);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      if (diags)
        diags->push_back("gazetteer line " + std::to_string(line_no) +
                         ": expected surface<TAB>type<TAB>canonical_id");
      continue;
    }
    gaz.add(line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1),
            line.substr(t2 + 1), diags);
  }
  return gaz;
}

}  // namespace tempods
