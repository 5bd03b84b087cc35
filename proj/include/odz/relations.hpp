#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odz/words.hpp"

namespace odz {

// var + offset, or a constant when var < 0.
struct IndexExpr {
  int var = -1;
  int offset = 0;
};

struct TemplateToken {
  GenKind kind = GenKind::MinusOne;
  std::array<IndexExpr, 4> idx{};
  // Present iff the evaluated exponent is odd; absent means always present.
  std::optional<IndexExpr> exponent;
};

struct RelationSchema {
  std::string id;     // R1..R21, S1..S4, D-...
  std::string label;  // alias, e.g. "orderx"
  std::vector<std::string> vars;  // sorted: a, a', b, b', ...
  std::string lhs_text, rhs_text;
  std::vector<TemplateToken> lhs, rhs;
  bool scaled = false;  // mentions IH
};

RelationSchema make_schema(std::string id, std::string label, std::string lhs, std::string rhs);

using Substitution = std::map<std::string, int>;

struct RelationInstance {
  std::string id;
  Substitution subst;
  int n = 0;
  friend bool operator==(const RelationInstance&, const RelationInstance&) = default;
};

enum class Direction { LhsToRhs, RhsToLhs };

struct RewriteStep {
  std::size_t position = 0;
  RelationInstance instance;
  Direction dir = Direction::LhsToRhs;
  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct RewriteTrace {
  int n = 0;
  Word start;
  std::vector<RewriteStep> steps;
  std::optional<Word> target;
};

const std::vector<RelationSchema>& primitive_catalog();  // R1..R21
const std::vector<RelationSchema>& scaled_catalog();     // S1..S4
// Looks up primitive, scaled and derived schemas by id or label.
const RelationSchema& find_schema(std::string_view id_or_label);
bool is_primitive(std::string_view id);

std::pair<Word, Word> instantiate(const RelationSchema& schema, const Substitution& subst, int n);
std::pair<Word, Word> instantiate(std::string_view id, const Substitution& subst, int n);
std::pair<Word, Word> instantiate(const RelationInstance& inst);

std::vector<RelationInstance> enumerate_instances(const RelationSchema& schema, int n);
std::vector<RelationInstance> enumerate_instances(std::string_view id, int n);

Word apply_step(const Word& w, const RewriteStep& step);
// Applies every step in order; throws RelationError naming the failing step index.
Word replay(const RewriteTrace& trace);

struct SoundnessReport {
  bool ok = true;
  std::size_t instances = 0;
  std::optional<RelationInstance> first_failure;
};
SoundnessReport verify_soundness(const RelationSchema& schema, int n);
SoundnessReport verify_soundness(std::string_view id, int n);

std::string to_string(const RelationInstance& inst);
std::string to_string(const RewriteStep& step);

// Trace file text; positions are 0-based.
std::string render_trace(const RewriteTrace& trace);
RewriteTrace parse_trace(std::string_view text);

}  // namespace odz
