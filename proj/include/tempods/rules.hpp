#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tempods/corpus.hpp"

namespace tempods {

struct RelationDef {
  bool directed = true;
  // Slot types used by the synthetic generator; rule files carry their own
  // slot constraints.
  std::string head_type = "ORG";
  std::string tail_type = "ORG";
};

/// The configured relation set plus the entity type inventory. Rule
/// compilation validates against both.
struct RelationSchema {
  std::map<std::string, RelationDef> relations;
  std::set<std::string> entity_types = {"ORG", "PER", "LOC"};

  bool has_relation(const std::string& name) const {
    return relations.count(name) > 0;
  }
  bool is_directed(const std::string& name) const;

  static RelationSchema default_schema();
  /// Parses "Name:directed[:HEAD:TAIL],Name:undirected,..." lists.
  static RelationSchema parse(const std::string& relations_spec,
                              const std::string& types_spec);
};

/// A <Pattern, Constraint> rule: a literal connector token sequence between
/// two typed entity slots.
struct RuleTemplate {
  std::string rule_id;
  std::string relation_type;
  std::vector<std::string> connector;
  std::string head_type;  // constraint on [entity1]
  std::string tail_type;  // constraint on [entity2]
  bool directed = true;
};

struct RuleMatch {
  std::string rule_id;
  std::string relation_type;
  SentenceRef sentence;
  EntityMention head;
  EntityMention tail;
  bool directed = true;
  CalDay date;
};

struct RuleCompileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Compiles `RELATION: [entity1:TYPE] connector tokens [entity2:TYPE]`.
/// When rule_id is empty an id is derived from the rule text.
RuleTemplate compile_rule(const std::string& template_text,
                          const RelationSchema& schema,
                          std::string rule_id = "");

/// One rule per line, '#' comments allowed. Rules receive ids r001, r002, ...
/// in file order.
std::vector<RuleTemplate> load_rules(std::istream& in,
                                     const RelationSchema& schema);

/// All (head, tail) mention pairs whose between-token sequence equals the
/// connector and whose types satisfy the slot constraints. Undirected matches
/// are canonicalized by canonical id order.
std::vector<RuleMatch> match_sentence(const RuleTemplate& rule,
                                      const Sentence& s);

std::vector<RuleMatch> match_all(const std::vector<RuleTemplate>& rules,
                                 const Sentence& s);

}  // namespace tempods
