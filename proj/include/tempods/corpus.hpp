#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "tempods/date.hpp"

namespace tempods {

/// One news record: the unit of ingestion. Only the title, the first
/// paragraph (body) and the day-granular timestamp are kept.
struct Document {
  std::string id;
  std::string source;
  std::string title;
  std::string body;
  CalDay date;
};

/// Token interval [begin, end) resolved against a gazetteer entry.
struct EntityMention {
  std::string surface;
  std::string entity_type;
  std::string canonical_id;
  int begin = 0;
  int end = 0;
};

struct SentenceRef {
  std::string doc_id;
  int index = 0;

  auto operator<=>(const SentenceRef&) const = default;
};

struct Sentence {
  std::string doc_id;
  int index = 0;
  std::string text;
  std::vector<std::string> tokens;
  std::vector<EntityMention> mentions;
  CalDay date;

  SentenceRef ref() const { return SentenceRef{doc_id, index}; }
};

/// Surface form -> (canonical id, entity type) dictionary used in place of a
/// statistical NER system. Matching is longest-match left-to-right over token
/// sequences; the case policy applies to both build and lookup.
class Gazetteer {
 public:
  explicit Gazetteer(bool case_sensitive = true)
      : case_sensitive_(case_sensitive) {}

  /// Returns false (with a diagnostic appended) on empty surfaces, surfaces
  /// that duplicate an existing entry, or canonical ids already registered
  /// with a different type. First entry wins.
  bool add(const std::string& surface, const std::string& entity_type,
           const std::string& canonical_id, std::vector<std::string>* diags = nullptr);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool case_sensitive() const { return case_sensitive_; }
  int max_tokens() const { return max_tokens_; }

  struct Entry {
    std::string canonical_id;
    std::string entity_type;
  };

  /// Looks up an exact token sequence (joined canonically). Null if absent.
  const Entry* find(const std::vector<std::string>& tokens, int begin,
                    int end) const;

  const std::string* type_of(const std::string& canonical_id) const;

 private:
  std::string fold(std::string_view s) const;

  bool case_sensitive_;
  int max_tokens_ = 0;
  std::unordered_map<std::string, Entry> entries_;          // token-key -> entry
  std::unordered_map<std::string, std::string> id_types_;   // id -> type
};

struct IngestDiagnostic {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Document> documents;
  std::vector<IngestDiagnostic> diagnostics;
};

/// Parses line-delimited JSON records with fields id, source, title, body,
/// timestamp. Malformed lines are reported with their line number; duplicate
/// ids keep the first occurrence.
IngestResult ingest_documents(std::istream& record_stream);

/// Whitespace/punctuation tokenizer. Alphanumeric runs form tokens (with
/// &, - and ' allowed between alphanumerics); every other non-space character
/// is a single-character token.
std::vector<std::string> tokenize(std::string_view text);

/// Splits on terminal punctuation (. ! ?) outside a fixed abbreviation list;
/// a decimal point between digits never ends a sentence.
std::vector<std::string> split_sentences(std::string_view text);

/// Longest-match, left-to-right, non-overlapping gazetteer scan.
std::vector<EntityMention> find_mentions(const std::vector<std::string>& tokens,
                                         const Gazetteer& gaz);

/// Splits title+body into sentences, tokenizes, and attaches mentions.
/// Sentence indices run over title sentences first, then body sentences.
std::vector<Sentence> annotate_sentences(const Document& doc,
                                         const Gazetteer& gaz);

/// Loads `surface<TAB>type<TAB>canonical_id` lines; '#' starts a comment.
Gazetteer load_gazetteer(std::istream& in, bool case_sensitive,
                         std::vector<std::string>* diags = nullptr);

}  // namespace tempods
