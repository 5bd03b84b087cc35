// Connects the words of hand-written derivation chains with primitive rewrite steps and
// writes the resulting traces as an include file for the derived catalog.
//
// Chain file:
//   derive <id>          starts a chain; the first and last words must be the canonical
//                        lhs and rhs of the derived relation
//   slack <k>            optional: search words may grow k letters past the longer end
//   <word>               one word per line
//   end
// Each link is found by bidirectional breadth-first search. Previously derived relations
// act as single steps during the search and are expanded afterwards.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "odz/derived.hpp"
#include "odz/error.hpp"
#include "odz/matrix.hpp"
#include "odz/relations.hpp"
#include "odz/words.hpp"

using namespace odz;

namespace {

struct Chain {
  std::string id;
  int slack = 4;
  std::vector<Word> words;
};

std::vector<Chain> read_chains(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Chain> out;
  std::string line;
  bool open = false;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.rfind("derive ", 0) == 0) {
      out.push_back({line.substr(7), 4, {}});
      open = true;
    } else if (line == "end") {
      open = false;
    } else if (!open) {
      throw std::runtime_error("word outside a chain: " + line);
    } else if (line.rfind("slack ", 0) == 0) {
      out.back().slack = std::stoi(line.substr(6));
    } else {
      out.back().words.push_back(parse_word(line));
    }
  }
  return out;
}

std::string key_of(const Word& w) {
  std::string k;
  k.reserve(w.size() * 5);
  for (const auto& g : w) {
    k.push_back(static_cast<char>(g.kind));
    for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>(g[i]));
  }
  return k;
}

// One direction of one relation instance.
struct Move {
  Word source, target;
  RewriteStep step;  // position filled on use
};

class MoveTable {
 public:
  void add(const RelationInstance& inst) {
    auto [lhs, rhs] = instantiate(inst);
    add_dir(inst, lhs, rhs, Direction::LhsToRhs);
    add_dir(inst, rhs, lhs, Direction::RhsToLhs);
  }

  // Every word one move away from w, within the length cap. Insertions only use
  // generators from the alphabet.
  template <class F>
  void expand(const Word& w, std::size_t cap, const std::set<Generator>& alphabet, F&& visit) const {
    for (std::size_t p = 0; p < w.size(); ++p) {
      auto it = by_first_.find(w[p]);
      if (it == by_first_.end()) continue;
      for (const auto& m : it->second) {
        if (p + m.source.size() > w.size()) continue;
        if (w.size() - m.source.size() + m.target.size() > cap) continue;
        bool hit = true;
        for (std::size_t i = 1; i < m.source.size() && hit; ++i) hit = w[p + i] == m.source[i];
        if (!hit) continue;
        RewriteStep s = m.step;
        s.position = p;
        visit(w.slice(0, p) + m.target + w.slice(p + m.source.size(), w.size() - p - m.source.size()), s);
      }
    }
    if (w.size() + 2 > cap) return;
    for (const auto& m : insertions_) {
      if (!alphabet.count(m.target[0])) continue;
      for (std::size_t p = 0; p <= w.size(); ++p) {
        RewriteStep s = m.step;
        s.position = p;
        visit(w.slice(0, p) + m.target + w.slice(p, w.size() - p), s);
      }
    }
  }

 private:
  void add_dir(const RelationInstance& inst, const Word& from, const Word& to, Direction dir) {
    Move m{from, to, RewriteStep{0, inst, dir}};
    if (from.empty())
      insertions_.push_back(std::move(m));
    else
      by_first_[from[0]].push_back(std::move(m));
  }

  std::map<Generator, std::vector<Move>> by_first_;
  std::vector<Move> insertions_;
};

struct Visit {
  std::string parent;
  RewriteStep step;  // moves parent to this word
};

Direction flip(Direction d) {
  return d == Direction::LhsToRhs ? Direction::RhsToLhs : Direction::LhsToRhs;
}

std::vector<RewriteStep> connect(const Word& u, const Word& v, const MoveTable& moves, int slack,
                                 std::size_t max_states) {
  if (u == v) return {};
  std::set<Generator> alphabet(u.begin(), u.end());
  alphabet.insert(v.begin(), v.end());
  const std::size_t cap = std::max(u.size(), v.size()) + static_cast<std::size_t>(slack);
  std::unordered_map<std::string, Visit> seen[2];
  std::unordered_map<std::string, Word> words;
  std::vector<Word> frontier[2] = {{u}, {v}};
  seen[0][key_of(u)] = {};
  seen[1][key_of(v)] = {};
  words[key_of(u)] = u;
  words[key_of(v)] = v;

  auto path_to = [&](int side, std::string k) {
    std::vector<RewriteStep> steps;
    while (k != key_of(side == 0 ? u : v)) {
      const Visit& vis = seen[side].at(k);
      steps.push_back(vis.step);
      k = vis.parent;
    }
    return steps;
  };

  while (!frontier[0].empty() && !frontier[1].empty()) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<Word> next;
    std::string meet;
    for (const auto& w : frontier[side]) {
      std::string wk = key_of(w);
      moves.expand(w, cap, alphabet, [&](Word nw, const RewriteStep& s) {
        if (!meet.empty()) return;
        std::string nk = key_of(nw);
        if (seen[side].count(nk)) return;
        seen[side][nk] = {wk, s};
        if (seen[1 - side].count(nk)) {
          meet = nk;
          return;
        }
        next.push_back(std::move(nw));
      });
      if (!meet.empty()) break;
    }
    if (!meet.empty()) {
      std::vector<RewriteStep> fwd = path_to(0, meet);
      std::reverse(fwd.begin(), fwd.end());
      // Steps recorded from v's side run toward the meeting word; undo them in reverse.
      for (auto s : path_to(1, meet)) {
        s.dir = flip(s.dir);
        fwd.push_back(s);
      }
      return fwd;
    }
    if (seen[0].size() + seen[1].size() > max_states) break;
    frontier[side] = std::move(next);
  }
  throw std::runtime_error("no connection found between '" + to_string(u) + "' and '" +
                           to_string(v) + "'");
}

// Expands derived steps with the traces found so far.
std::vector<RewriteStep> expand(const std::vector<RewriteStep>& steps, int n,
                                const std::map<std::string, std::string>& found) {
  std::vector<RewriteStep> out;
  for (const auto& step : steps) {
    if (is_primitive(step.instance.id)) {
      out.push_back(step);
      continue;
    }
    DerivedRelation d = find_derived(step.instance.id);
    d.trace_text = found.at(step.instance.id);
    std::vector<RewriteStep> inner = instance_trace(d, step.instance.subst, n).steps;
    if (step.dir == Direction::RhsToLhs) {
      std::reverse(inner.begin(), inner.end());
      for (auto& s : inner) s.dir = flip(s.dir);
    }
    for (auto& s : inner) {
      s.position += step.position;
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string escape_raw(const std::string& text) {
  if (text.find(")\"") != std::string::npos) throw std::runtime_error("trace text breaks raw string");
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivation trace search"};
  std::string chains_path, out_path;
  std::size_t max_states = 4'000'000;
  app.add_option("chains", chains_path, "chain file")->required();
  app.add_option("output", out_path, "include file to write")->required();
  app.add_option("--max-states", max_states, "search budget per link");
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<Chain> chains = read_chains(chains_path);
    std::map<std::string, std::string> found;
    std::map<int, MoveTable> tables;
    std::set<std::string> in_table;  // "id@n"
    std::string inc = "// Generated by derive_traces from tools/derivation_chains.txt.\n";
    for (const auto& chain : chains) {
      const DerivedRelation& entry = find_derived(chain.id);
      const int n = entry.canonical_n;
      auto [lhs, rhs] = instantiate(entry.schema, canonical_substitution(entry.schema), n);
      if (chain.words.size() < 2 || chain.words.front() != lhs || chain.words.back() != rhs)
        throw std::runtime_error(chain.id + ": chain must run from '" + to_string(lhs) + "' to '" +
                                 to_string(rhs) + "'");
      MoveTable& table = tables[n];
      auto add_schema = [&](const RelationSchema& schema) {
        std::string tag = schema.id + "@" + std::to_string(n);
        if (!in_table.insert(tag).second) return;
        for (const auto& inst : enumerate_instances(schema, n)) table.add(inst);
      };
      for (const auto& schema : primitive_catalog()) add_schema(schema);
      for (const auto& [id, text] : found) add_schema(find_derived(id).schema);

      RewriteTrace trace;
      trace.n = n;
      trace.start = lhs;
      trace.target = rhs;
      const auto t0 = std::chrono::steady_clock::now();
      for (std::size_t i = 0; i + 1 < chain.words.size(); ++i) {
        const Word& u = chain.words[i];
        const Word& v = chain.words[i + 1];
        if (interp(u, n) != interp(v, n))
          throw std::runtime_error(chain.id + ": link " + std::to_string(i) +
                                   " joins words with different interpretations");
        auto steps = expand(connect(u, v, table, chain.slack, max_states), n, found);
        trace.steps.insert(trace.steps.end(), steps.begin(), steps.end());
      }
      replay(trace);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cerr << chain.id << ": " << trace.steps.size() << " steps (" << secs << " s)\n";
      found[chain.id] = render_trace(trace);
      inc += "{\"" + chain.id + "\", R\"(" + escape_raw(found[chain.id]) + ")\"},\n";
    }
    std::ofstream out(out_path);
    out << inc;
    if (!out) throw std::runtime_error("cannot write " + out_path);
  } catch (const std::exception& e) {
    std::cerr << "derive_traces: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
