#include "odz/relations.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "odz/derived.hpp"
#include "odz/error.hpp"
#include "odz/matrix.hpp"

namespace odz {

namespace {

// Variables sort by letter, then unprimed before primed.
bool var_less(const std::string& x, const std::string& y) {
  if (x[0] != y[0]) return x[0] < y[0];
  return x.size() < y.size();
}

struct ExprText {
  std::string var;  // empty for a constant
  int offset = 0;
};

ExprText parse_expr(std::string_view s, std::string_view token) {
  ExprText e;
  std::size_t i = 0;
  if (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) {
    e.var = std::string(1, s[i++]);
    while (i < s.size() && s[i] == '\'') e.var += s[i++];
    if (i == s.size()) return e;
    if (s[i] != '+' && s[i] != '-')
      throw ParseError("bad template token '" + std::string(token) + "'");
  }
  std::string rest(s.substr(i));
  if (rest.empty()) throw ParseError("bad template token '" + std::string(token) + "'");
  std::size_t used = 0;
  try {
    e.offset = std::stoi(rest, &used);
  } catch (const std::exception&) {
    throw ParseError("bad template token '" + std::string(token) + "'");
  }
  if (used != rest.size()) throw ParseError("bad template token '" + std::string(token) + "'");
  return e;
}

struct TokenText {
  GenKind kind;
  std::vector<ExprText> idx;
  std::optional<ExprText> exponent;
};

TokenText parse_template_token(std::string_view token) {
  TokenText t{GenKind::IH, {}, std::nullopt};
  std::string_view body = token;
  auto caret = body.find('^');
  if (caret != std::string_view::npos) {
    std::string_view e = body.substr(caret + 1);
    if (e.size() >= 2 && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
    t.exponent = parse_expr(e, token);
    body = body.substr(0, caret);
  }
  if (body == "IH") return t;
  std::string_view head;
  if (body.starts_with("(-1)[")) {
    head = "(-1)";
    t.kind = GenKind::MinusOne;
  } else if (body.starts_with("X[")) {
    head = "X";
    t.kind = GenKind::X;
  } else if (body.starts_with("K[")) {
    head = "K";
    t.kind = GenKind::K;
  } else {
    throw ParseError("bad template token '" + std::string(token) + "'");
  }
  if (!body.ends_with("]")) throw ParseError("bad template token '" + std::string(token) + "'");
  std::string_view inner = body.substr(head.size() + 1, body.size() - head.size() - 2);
  std::size_t start = 0;
  while (true) {
    auto comma = inner.find(',', start);
    t.idx.push_back(parse_expr(inner.substr(start, comma == inner.npos ? inner.npos : comma - start), token));
    if (comma == inner.npos) break;
    start = comma + 1;
  }
  std::size_t want = t.kind == GenKind::MinusOne ? 1 : t.kind == GenKind::X ? 2 : 4;
  if (t.idx.size() != want) throw ParseError("bad template token '" + std::string(token) + "': arity");
  return t;
}

std::vector<TokenText> parse_template(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<TokenText> out;
  std::string tok;
  while (in >> tok)
    if (tok != "eps") out.push_back(parse_template_token(tok));
  return out;
}

IndexExpr resolve(const ExprText& e, const std::vector<std::string>& vars) {
  if (e.var.empty()) return {-1, e.offset};
  auto it = std::find(vars.begin(), vars.end(), e.var);
  return {static_cast<int>(it - vars.begin()), e.offset};
}

int eval(const IndexExpr& e, const std::vector<int>& values) {
  return e.var < 0 ? e.offset : values[static_cast<std::size_t>(e.var)] + e.offset;
}

bool present(const TemplateToken& t, const std::vector<int>& values) {
  if (!t.exponent) return true;
  int e = eval(*t.exponent, values);
  return ((e % 2) + 2) % 2 == 1;
}

// Why the token fails to be a well-formed generator in dimension n, or empty.
std::string token_problem(const TemplateToken& t, const std::vector<int>& values, int n) {
  if (t.kind == GenKind::IH) return n % 2 == 0 ? "" : "IH needs even n";
  int arity = t.kind == GenKind::MinusOne ? 1 : t.kind == GenKind::X ? 2 : 4;
  int prev = 0;
  for (int i = 0; i < arity; ++i) {
    int v = eval(t.idx[static_cast<std::size_t>(i)], values);
    if (v < 1 || v > n) return "index " + std::to_string(v) + " outside 1.." + std::to_string(n);
    if (v <= prev) return "indices not strictly increasing";
    prev = v;
  }
  return "";
}

Generator build(const TemplateToken& t, const std::vector<int>& values) {
  auto at = [&](int i) { return eval(t.idx[static_cast<std::size_t>(i)], values); };
  switch (t.kind) {
    case GenKind::MinusOne: return Generator::minus_one(at(0));
    case GenKind::X: return Generator::x(at(0), at(1));
    case GenKind::K: return Generator::k(at(0), at(1), at(2), at(3));
    case GenKind::IH: return Generator::ih();
  }
  return Generator::ih();
}

int max_var(const TemplateToken& t) {
  int m = -1;
  for (const auto& e : t.idx) m = std::max(m, e.var);
  if (t.exponent) m = std::max(m, t.exponent->var);
  return m;
}

std::vector<int> values_of(const RelationSchema& schema, const Substitution& subst) {
  std::vector<int> values;
  for (const auto& v : schema.vars) {
    auto it = subst.find(v);
    if (it == subst.end())
      throw RelationError(schema.id + ": substitution missing variable '" + v + "'");
    values.push_back(it->second);
  }
  for (const auto& [k, _] : subst)
    if (std::find(schema.vars.begin(), schema.vars.end(), k) == schema.vars.end())
      throw RelationError(schema.id + ": unknown variable '" + k + "'");
  return values;
}

Word build_side(const std::vector<TemplateToken>& side, const std::vector<int>& values) {
  Word w;
  for (const auto& t : side)
    if (present(t, values)) w.push_back(build(t, values));
  return w;
}

}  // namespace

RelationSchema make_schema(std::string id, std::string label, std::string lhs, std::string rhs) {
  RelationSchema s;
  s.id = std::move(id);
  s.label = std::move(label);
  s.lhs_text = std::move(lhs);
  s.rhs_text = std::move(rhs);
  auto l = parse_template(s.lhs_text);
  auto r = parse_template(s.rhs_text);
  for (const auto* side : {&l, &r})
    for (const auto& t : *side) {
      if (t.kind == GenKind::IH) s.scaled = true;
      for (const auto& e : t.idx)
        if (!e.var.empty() && std::find(s.vars.begin(), s.vars.end(), e.var) == s.vars.end())
          s.vars.push_back(e.var);
      if (t.exponent && !t.exponent->var.empty() &&
          std::find(s.vars.begin(), s.vars.end(), t.exponent->var) == s.vars.end())
        s.vars.push_back(t.exponent->var);
    }
  std::sort(s.vars.begin(), s.vars.end(), var_less);
  auto convert = [&](const std::vector<TokenText>& side) {
    std::vector<TemplateToken> out;
    for (const auto& t : side) {
      TemplateToken tt;
      tt.kind = t.kind;
      for (std::size_t i = 0; i < t.idx.size(); ++i) tt.idx[i] = resolve(t.idx[i], s.vars);
      if (t.exponent) tt.exponent = resolve(*t.exponent, s.vars);
      out.push_back(tt);
    }
    return out;
  };
  s.lhs = convert(l);
  s.rhs = convert(r);
  return s;
}

const std::vector<RelationSchema>& primitive_catalog() {
  static const std::vector<RelationSchema> catalog = [] {
    struct Row {
      const char *id, *label, *lhs, *rhs;
    };
    static const Row rows[] = {
        {"R1", "orderx", "X[a,b] X[a,b]", "eps"},
        {"R2", "ordermone", "(-1)[a] (-1)[a]", "eps"},
        {"R3", "orderk", "K[a,b,c,d] K[a,b,c,d]", "eps"},
        {"R4", "disjoint1", "X[a,b] X[c,d]", "X[c,d] X[a,b]"},
        {"R5", "disjoint2", "X[a,b] (-1)[c]", "(-1)[c] X[a,b]"},
        {"R6", "disjoint3", "X[a,b] K[c,d,e,f]", "K[c,d,e,f] X[a,b]"},
        {"R7", "disjoint4", "(-1)[a] (-1)[b]", "(-1)[b] (-1)[a]"},
        {"R8", "disjoint5", "(-1)[a] K[b,c,d,e]", "K[b,c,d,e] (-1)[a]"},
        {"R9", "disjoint6", "K[a,b,c,d] K[e,f,g,h]", "K[e,f,g,h] K[a,b,c,d]"},
        {"R10", "rename1", "X[a,a'] X[a,b]", "X[a',b] X[a,a']"},
        {"R11", "rename2", "X[b,b'] X[a,b]", "X[a,b'] X[b,b']"},
        {"R12", "rename3", "X[a,b] (-1)[b]", "(-1)[a] X[a,b]"},
        {"R13", "rename4", "X[a,a'] K[a,b,c,d]", "K[a',b,c,d] X[a,a']"},
        {"R14", "rename5", "X[b,b'] K[a,b,c,d]", "K[a,b',c,d] X[b,b']"},
        {"R15", "rename6", "X[c,c'] K[a,b,c,d]", "K[a,b,c',d] X[c,c']"},
        {"R16", "rename7", "X[d,d'] K[a,b,c,d]", "K[a,b,c,d'] X[d,d']"},
        {"R17", "ksym1", "X[a,b] K[a,b,c,d]", "K[a,b,c,d] X[b,d] (-1)[b] (-1)[d]"},
        {"R18", "swap1", "X[b,c] K[a,b,c,d]",
         "(-1)[a] K[a,b,c,d] (-1)[a] K[a,b,c,d] (-1)[a]"},
        {"R19", "ksym3", "X[c,d] K[a,b,c,d]", "K[a,b,c,d] X[b,d]"},
        {"R20", "kcom1", "K[a,b,c,d] K[b,d,e,f]", "K[c,d,e,f] K[a,b,c,e]"},
        {"R21", "x",
         "(-1)[a] (-1)[e] X[a,e] K[e,f,g,h] K[a,b,c,d] X[d,e] K[a,b,c,d] K[e,f,g,h] X[a,e] "
         "(-1)[a] (-1)[e]",
         "K[e,f,g,h] K[a,b,c,d] X[d,e] K[a,b,c,d] K[e,f,g,h]"},
    };
    std::vector<RelationSchema> out;
    for (const auto& r : rows) out.push_back(make_schema(r.id, r.label, r.lhs, r.rhs));
    return out;
  }();
  return catalog;
}

const std::vector<RelationSchema>& scaled_catalog() {
  // S4 carries its parity split as exponents: odd a keeps (-1)[a+1], even a keeps X and K.
  static const std::vector<RelationSchema> catalog = {
      make_schema("S1", "relh0", "IH IH", "eps"),
      make_schema("S2", "relh5", "IH K[1,2,3,4] IH", "K[1,2,3,4]"),
      make_schema("S3", "relh1", "IH (-1)[1] IH", "(-1)[1] X[1,2] (-1)[1]"),
      make_schema("S4", "relh3", "IH X[a,a+1] IH",
                  "(-1)[a+1]^{a} X[a,a+1]^{a+1} K[a-1,a,a+1,a+2]^{a+1}"),
  };
  return catalog;
}

bool is_primitive(std::string_view id) {
  for (const auto* cat : {&primitive_catalog(), &scaled_catalog()})
    for (const auto& s : *cat)
      if (s.id == id || s.label == id) return true;
  return false;
}

const RelationSchema& find_schema(std::string_view id_or_label) {
  for (const auto* cat : {&primitive_catalog(), &scaled_catalog()})
    for (const auto& s : *cat)
      if (s.id == id_or_label || s.label == id_or_label) return s;
  for (const auto& d : derived_catalog())
    if (!d.is_schematic() && (d.schema.id == id_or_label || d.schema.label == id_or_label))
      return d.schema;
  throw RelationError("unknown relation '" + std::string(id_or_label) + "'");
}

std::pair<Word, Word> instantiate(const RelationSchema& schema, const Substitution& subst, int n) {
  std::vector<int> values = values_of(schema, subst);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j])
        throw RelationError(schema.id + ": side condition violated, " + schema.vars[i] + " and " +
                            schema.vars[j] + " must be distinct");
  for (const auto* side : {&schema.lhs, &schema.rhs})
    for (const auto& t : *side) {
      if (!present(t, values)) continue;
      std::string problem = token_problem(t, values, n);
      if (!problem.empty())
        throw RelationError(schema.id + ": side condition violated, " + problem);
    }
  return {build_side(schema.lhs, values), build_side(schema.rhs, values)};
}

std::pair<Word, Word> instantiate(std::string_view id, const Substitution& subst, int n) {
  return instantiate(find_schema(id), subst, n);
}

std::pair<Word, Word> instantiate(const RelationInstance& inst) {
  return instantiate(inst.id, inst.subst, inst.n);
}

std::vector<RelationInstance> enumerate_instances(const RelationSchema& schema, int n) {
  std::vector<RelationInstance> out;
  std::size_t m = schema.vars.size();
  // Tokens become checkable once their highest variable is assigned.
  std::vector<std::vector<const TemplateToken*>> ready(m + 1);
  for (const auto* side : {&schema.lhs, &schema.rhs})
    for (const auto& t : *side) ready[static_cast<std::size_t>(max_var(t) + 1)].push_back(&t);
  std::vector<int> values(m, 0);
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  auto ok_at = [&](std::size_t level) {
    for (const auto* t : ready[level])
      if (present(*t, values) && !token_problem(*t, values, n).empty()) return false;
    return true;
  };
  if (!ok_at(0)) return out;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      RelationInstance inst{schema.id, {}, n};
      for (std::size_t v = 0; v < m; ++v) inst.subst[schema.vars[v]] = values[v];
      out.push_back(std::move(inst));
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      values[i] = x;
      if (ok_at(i + 1)) {
        used[static_cast<std::size_t>(x)] = true;
        self(self, i + 1);
        used[static_cast<std::size_t>(x)] = false;
      }
    }
    values[i] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<RelationInstance> enumerate_instances(std::string_view id, int n) {
  return enumerate_instances(find_schema(id), n);
}

Word apply_step(const Word& w, const RewriteStep& step) {
  auto [lhs, rhs] = instantiate(step.instance);
  const Word& source = step.dir == Direction::LhsToRhs ? lhs : rhs;
  const Word& target = step.dir == Direction::LhsToRhs ? rhs : lhs;
  if (step.position > w.size() || step.position + source.size() > w.size()) {
    throw RelationError("step " + to_string(step) + ": expected '" + to_string(source) +
                        "' at position " + std::to_string(step.position) + " but word has length " +
                        std::to_string(w.size()));
  }
  Word found = w.slice(step.position, source.size());
  if (found != source)
    throw RelationError("step " + to_string(step) + ": expected '" + to_string(source) +
                        "' at position " + std::to_string(step.position) + ", found '" +
                        to_string(found) + "'");
  return w.slice(0, step.position) + target +
         w.slice(step.position + source.size(), w.size() - step.position - source.size());
}

Word replay(const RewriteTrace& trace) {
  Word w = trace.start;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    try {
      w = apply_step(w, trace.steps[i]);
    } catch (const Error& e) {
      throw RelationError("trace step " + std::to_string(i) + " failed: " + e.what());
    }
  }
  if (trace.target && w != *trace.target)
    throw RelationError("trace ends at '" + to_string(w) + "', expected '" +
                        to_string(*trace.target) + "'");
  return w;
}

SoundnessReport verify_soundness(const RelationSchema& schema, int n) {
  SoundnessReport report;
  for (const auto& inst : enumerate_instances(schema, n)) {
    ++report.instances;
    auto [lhs, rhs] = instantiate(schema, inst.subst, n);
    bool equal = schema.scaled ? interp_scaled(lhs, n) == interp_scaled(rhs, n)
                               : interp(lhs, n) == interp(rhs, n);
    if (!equal && report.ok) {
      report.ok = false;
      report.first_failure = inst;
    }
  }
  return report;
}

SoundnessReport verify_soundness(std::string_view id, int n) {
  return verify_soundness(find_schema(id), n);
}

std::string to_string(const RelationInstance& inst) {
  std::string s = inst.id + " {";
  bool first = true;
  for (const auto& v : find_schema(inst.id).vars) {
    auto it = inst.subst.find(v);
    if (it == inst.subst.end()) continue;
    if (!first) s += ',';
    s += v + "=" + std::to_string(it->second);
    first = false;
  }
  return s + "}";
}

std::string to_string(const RewriteStep& step) {
  std::string inst = to_string(step.instance);
  auto space = inst.find(' ');
  return std::to_string(step.position) + " " + inst.substr(0, space) + " " +
         (step.dir == Direction::LhsToRhs ? "lr" : "rl") + inst.substr(space);
}

std::string render_trace(const RewriteTrace& trace) {
  std::string out = "# positions are 0-based; lr rewrites lhs to rhs, rl the reverse\n";
  out += "n: " + std::to_string(trace.n) + "\n";
  out += "word: " + to_string(trace.start) + "\n";
  for (const auto& step : trace.steps) out += "step: " + to_string(step) + "\n";
  if (trace.target) out += "target: " + to_string(*trace.target) + "\n";
  return out;
}

RewriteTrace parse_trace(std::string_view text) {
  RewriteTrace trace;
  bool have_word = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("trace line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (key == "n") {
      trace.n = std::stoi(value);
    } else if (key == "word") {
      trace.start = parse_word(value);
      have_word = true;
    } else if (key == "target") {
      trace.target = parse_word(value);
    } else if (key == "step") {
      std::istringstream fields(value);
      long pos = -1;
      std::string id, dir;
      if (!(fields >> pos >> id >> dir) || pos < 0) fail("expected 'step: <pos> <relation-id> <dir> {...}'");
      RewriteStep step;
      step.position = static_cast<std::size_t>(pos);
      if (dir == "lr") step.dir = Direction::LhsToRhs;
      else if (dir == "rl") step.dir = Direction::RhsToLhs;
      else fail("direction must be 'lr' or 'rl', got '" + dir + "'");
      std::string rest;
      std::getline(fields, rest);
      auto open = rest.find('{'), close = rest.rfind('}');
      if (open == std::string::npos || close == std::string::npos || close < open)
        fail("missing {var=idx,...}");
      std::string body = rest.substr(open + 1, close - open - 1);
      std::istringstream parts(body);
      std::string part;
      while (std::getline(parts, part, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) fail("bad binding '" + part + "'");
        auto strip = [](std::string s) {
          s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
          return s;
        };
        step.instance.subst[strip(part.substr(0, eq))] = std::stoi(part.substr(eq + 1));
      }
      step.instance.id = find_schema(id).id;
      trace.steps.push_back(std::move(step));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_word) throw ParseError("trace has no 'word:' header");
  if (trace.n <= 0) trace.n = std::max(1, extent(trace.start));
  for (auto& step : trace.steps) step.instance.n = trace.n;
  return trace;
}

}  // namespace odz
