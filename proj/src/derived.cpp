#include "odz/derived.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "odz/error.hpp"
#include "odz/matrix.hpp"
#include "odz/synthesis.hpp"

namespace odz {

namespace {

struct TraceText {
  const char* id;
  const char* text;
};

const TraceText kTraces[] = {
#include "derived_traces.inc"
    {nullptr, nullptr},
};

std::string lookup_trace(const std::string& id) {
  for (const auto* t = kTraces; t->id != nullptr; ++t)
    if (id == t->id) return t->text;
  return "";
}

DerivedRelation traced(const char* id, const char* label, const char* lhs, const char* rhs) {
  DerivedRelation d;
  d.schema = make_schema(id, label, lhs, rhs);
  d.canonical_n = static_cast<int>(d.schema.vars.size());
  d.trace_text = lookup_trace(id);
  return d;
}

DerivedRelation schematic(const char* id, const char* label, const char* lhs, const char* rhs,
                          std::function<std::vector<std::pair<Word, Word>>()> pairs) {
  DerivedRelation d;
  d.schema.id = id;
  d.schema.label = label;
  d.schema.lhs_text = lhs;
  d.schema.rhs_text = rhs;
  d.schematic = std::move(pairs);
  return d;
}

Word signs(const std::array<int, 4>& idx, const std::array<int, 4>& tau) {
  Word w;
  for (std::size_t i = 0; i < 4; ++i) w += sign_pow(idx[i], tau[i]);
  return w;
}

Word k_of(const std::array<int, 4>& abcd) {
  return Word{Generator::k(abcd[0], abcd[1], abcd[2], abcd[3])};
}

std::array<int, 4> bits4(int mask) {
  return {(mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
}

int odd_count(const std::array<int, 4>& tau) {
  return std::accumulate(tau.begin(), tau.end(), 0, [](int acc, int t) { return acc + (t & 1); });
}

}  // namespace

Word k_sign_k(const std::array<int, 4>& abcd, const std::array<int, 4>& tau) {
  if (odd_count(tau) % 2 != 0)
    throw PreconditionError("k_sign_k: needs an even number of odd exponents");
  auto [a, b, c, d] = abcd;
  auto X = [](int p, int q) { return Generator::x(p, q); };
  Word all = signs(abcd, {1, 1, 1, 1});
  int mask = (tau[0] & 1) << 3 | (tau[1] & 1) << 2 | (tau[2] & 1) << 1 | (tau[3] & 1);
  // D K = K Q for each pair D of sign flips, so K D K = Q.
  switch (mask) {
    case 0b0000: return {};
    case 0b1111: return all;
    case 0b1100: return Word{X(a, c), X(b, d)} + all;
    case 0b1010: return Word{X(a, b), X(c, d)} + all;
    case 0b1001: return Word{X(a, d), X(b, c)} + all;
    case 0b0110: return Word{X(a, d), X(b, c)};
    case 0b0101: return Word{X(a, b), X(c, d)};
    case 0b0011: return Word{X(a, c), X(b, d)};
  }
  throw std::logic_error("k_sign_k: unreachable");
}

Word k_sign_k_sign_k(const std::array<int, 4>& abcd, const std::array<int, 4>& tau,
                     const std::array<int, 4>& tau2) {
  if (odd_count(tau) % 2 != 1 || odd_count(tau2) % 2 != 1)
    throw PreconditionError("k_sign_k_sign_k: needs an odd number of odd exponents in each tuple");
  Word w = k_of(abcd) + signs(abcd, tau) + k_of(abcd) + signs(abcd, tau2) + k_of(abcd);
  DyadicMatrix m = interp(w, abcd[3]);
  if (!is_signed_permutation(m))
    throw std::logic_error("k_sign_k_sign_k: product is not a signed permutation");
  return synthesize(m);
}

const std::array<PushForm, 12>& push_forms() {
  static const std::array<PushForm, 12> forms = {{
      {{1, 3}, {1, 2}, 0}, {{2, 4}, {1, 2}, 1}, {{1, 2}, {1, 3}, 0}, {{3, 4}, {1, 3}, 1},
      {{1, 4}, {1, 4}, 0}, {{2, 3}, {1, 4}, 1}, {{1, 4}, {2, 3}, 1}, {{2, 3}, {2, 3}, 0},
      {{1, 2}, {2, 4}, 1}, {{3, 4}, {2, 4}, 0}, {{1, 3}, {3, 4}, 1}, {{2, 4}, {3, 4}, 0},
  }};
  return forms;
}

Word push_form_word(const PushForm& f, int c, int d, const std::array<int, 6>& tau) {
  if (c <= 4 || d <= c) throw IndexError("push form needs 4 < c < d");
  Word w{Generator::k(f.left[0], f.left[1], c, d)};
  w += sign_pow(f.left[0], tau[0]) + sign_pow(f.left[1], tau[1]) + sign_pow(c, tau[2]) +
       sign_pow(d, tau[3]);
  w.push_back(Generator::k(1, 2, 3, 4));
  w += sign_pow(d, tau[3]) + sign_pow(c, tau[2]) + sign_pow(f.right[1], tau[5]) +
       sign_pow(f.right[0], tau[4]);
  w.push_back(Generator::k(f.right[0], f.right[1], c, d));
  return w;
}

std::pair<Word, Word> factor_through_k(const Word& g, int n) {
  if (n < 4) throw IndexError("factor_through_k needs n >= 4");
  DyadicMatrix m = interp(g, n);
  std::vector<int> rows, cols;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_integer()) {
        if (std::find(rows.begin(), rows.end(), i + 1) == rows.end()) rows.push_back(i + 1);
        if (std::find(cols.begin(), cols.end(), j + 1) == cols.end()) cols.push_back(j + 1);
      }
  if (rows.size() != 4 || cols.size() != 4)
    throw PreconditionError("factor_through_k: word is not a signed permutation around one K");
  std::sort(cols.begin(), cols.end());
  // Columns outside the block: indices above 4 stay put, the freed slots of 1..4 go to the
  // block columns above 4, in increasing order.
  std::vector<int> free_low, high_cols;
  for (int i = 1; i <= 4; ++i)
    if (std::find(cols.begin(), cols.end(), i) == cols.end()) free_low.push_back(i);
  for (int c : cols)
    if (c > 4) high_cols.push_back(c);
  const DyadicMatrix k = embed_generator(Generator::k(1, 2, 3, 4), n);
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    for (int sign_mask = 0; sign_mask < 16; ++sign_mask) {
      DyadicMatrix q(n);
      for (int i = 0; i < 4; ++i) {
        int from = cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        q(i, from - 1) = (sign_mask >> i) & 1 ? -1 : 1;
      }
      for (std::size_t i = 0; i < free_low.size(); ++i) q(high_cols[i] - 1, free_low[i] - 1) = 1;
      for (int x = 5; x <= n; ++x)
        if (std::find(cols.begin(), cols.end(), x) == cols.end()) q(x - 1, x - 1) = 1;
      DyadicMatrix p = m * transpose(q) * k;
      if (is_signed_permutation(p)) return {synthesize(p), synthesize(q)};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw PreconditionError("factor_through_k: no signed permutations P, Q with G = P K Q");
}

const std::vector<DerivedRelation>& derived_catalog() {
  static const std::vector<DerivedRelation> catalog = [] {
    std::vector<DerivedRelation> out;
    // X generators passing a K on two of its indices.
    out.push_back(traced("D-ksym2", "ksym2", "X[b,c] K[a,b,c,d]", "K[a,b,c,d] X[b,c]"));
    out.push_back(traced("D-ksym4", "ksym4", "X[a,c] K[a,b,c,d]",
                         "K[a,b,c,d] X[c,d] (-1)[c] (-1)[d]"));
    out.push_back(traced("D-ksym5", "ksym5", "X[a,d] K[a,b,c,d]",
                         "K[a,b,c,d] X[b,d] X[c,d] X[b,d] (-1)[b] (-1)[c]"));
    out.push_back(traced("D-ksym6", "ksym6", "X[b,d] K[a,b,c,d]", "K[a,b,c,d] X[c,d]"));
    // Pairs of sign flips passing a K.
    out.push_back(traced("D-k21", "k21", "(-1)[b] (-1)[d] K[a,b,c,d]", "K[a,b,c,d] X[a,b] X[c,d]"));
    out.push_back(traced("D-k11", "k11", "(-1)[c] (-1)[d] K[a,b,c,d]", "K[a,b,c,d] X[a,c] X[b,d]"));
    out.push_back(traced("D-k31", "k31", "(-1)[b] (-1)[c] K[a,b,c,d]", "K[a,b,c,d] X[a,d] X[b,c]"));
    out.push_back(traced("D-relk4", "relk4", "(-1)[a] (-1)[b] (-1)[c] (-1)[d] K[a,b,c,d]",
                         "K[a,b,c,d] (-1)[a] (-1)[b] (-1)[c] (-1)[d]"));
    out.push_back(traced("D-k22", "k22", "(-1)[a] (-1)[c] K[a,b,c,d]",
                         "K[a,b,c,d] X[a,b] X[c,d] (-1)[a] (-1)[b] (-1)[c] (-1)[d]"));
    out.push_back(traced("D-k12", "k12", "(-1)[a] (-1)[b] K[a,b,c,d]",
                         "K[a,b,c,d] X[a,c] X[b,d] (-1)[a] (-1)[b] (-1)[c] (-1)[d]"));
    out.push_back(traced("D-k32", "k32", "(-1)[a] (-1)[d] K[a,b,c,d]",
                         "K[a,b,c,d] X[a,d] X[b,c] (-1)[a] (-1)[b] (-1)[c] (-1)[d]"));
    // The long relation with h in place of e in the outer conjugator.
    out.push_back(traced(
        "D-derivedrels1alt", "derivedrels1alt",
        "K[e,f,g,h] K[a,b,c,d] X[d,e] K[a,b,c,d] K[e,f,g,h]",
        "(-1)[a] (-1)[h] X[a,h] K[e,f,g,h] K[a,b,c,d] X[d,e] K[a,b,c,d] K[e,f,g,h] X[a,h] "
        "(-1)[a] (-1)[h]"));

    out.push_back(schematic(
        "D-kevenk", "kevenk", "K[a,b,c,d] (-1)^tau K[a,b,c,d], evenly many tau odd",
        "V over (-1) and X", [] {
          std::vector<std::pair<Word, Word>> pairs;
          const std::array<int, 4> abcd{1, 2, 3, 4};
          for (int mask = 0; mask < 16; ++mask) {
            auto tau = bits4(mask);
            if (odd_count(tau) % 2 != 0) continue;
            pairs.emplace_back(k_of(abcd) + signs(abcd, tau) + k_of(abcd), k_sign_k(abcd, tau));
          }
          return pairs;
        }));
    out.push_back(schematic(
        "D-koddkoddk", "koddkoddk",
        "K (-1)^tau K (-1)^tau' K on a,b,c,d, oddly many odd in each", "V over (-1) and X", [] {
          std::vector<std::pair<Word, Word>> pairs;
          const std::array<int, 4> abcd{1, 2, 3, 4};
          for (int m1 = 0; m1 < 16; ++m1)
            for (int m2 = 0; m2 < 16; ++m2) {
              auto t1 = bits4(m1), t2 = bits4(m2);
              if (odd_count(t1) % 2 != 1 || odd_count(t2) % 2 != 1) continue;
              Word w = k_of(abcd) + signs(abcd, t1) + k_of(abcd) + signs(abcd, t2) + k_of(abcd);
              pairs.emplace_back(w, k_sign_k_sign_k(abcd, t1, t2));
            }
          return pairs;
        }));
    const auto& forms = push_forms();
    for (std::size_t f = 0; f < forms.size(); ++f) {
      std::string id = "D-push" + std::to_string(f + 1);
      std::string lhs = "K[" + std::to_string(forms[f].left[0]) + "," +
                        std::to_string(forms[f].left[1]) + ",c,d] ... K[1,2,3,4] ... K[" +
                        std::to_string(forms[f].right[0]) + "," +
                        std::to_string(forms[f].right[1]) + ",c,d]";
      auto form = forms[f];
      DerivedRelation d = schematic("", "", "", "V K[1,2,3,4] W", [form] {
        std::vector<std::pair<Word, Word>> pairs;
        for (int mask = 0; mask < 64; ++mask) {
          std::array<int, 6> tau{};
          for (int i = 0; i < 6; ++i) tau[static_cast<std::size_t>(i)] = (mask >> (5 - i)) & 1;
          if ((tau[0] + tau[1] + tau[4] + tau[5]) % 2 != form.parity) continue;
          Word g = push_form_word(form, 5, 6, tau);
          auto [v, w] = factor_through_k(g, 6);
          pairs.emplace_back(g, v + Word{Generator::k(1, 2, 3, 4)} + w);
        }
        return pairs;
      });
      d.schema.id = id;
      d.schema.label = "push" + std::to_string(f + 1);
      d.schema.lhs_text = lhs;
      d.canonical_n = 6;
      out.push_back(std::move(d));
    }
    return out;
  }();
  return catalog;
}

const DerivedRelation& find_derived(std::string_view id_or_label) {
  for (const auto& d : derived_catalog())
    if (d.schema.id == id_or_label || d.schema.label == id_or_label) return d;
  throw RelationError("unknown derived relation '" + std::string(id_or_label) + "'");
}

Substitution canonical_substitution(const RelationSchema& schema) {
  Substitution s;
  for (std::size_t i = 0; i < schema.vars.size(); ++i) s[schema.vars[i]] = static_cast<int>(i) + 1;
  return s;
}

RewriteTrace canonical_trace(const DerivedRelation& entry) {
  if (entry.trace_text.empty()) throw RelationError(entry.schema.id + " has no derivation trace");
  return parse_trace(entry.trace_text);
}

namespace {

Generator relabel(const Generator& g, const std::vector<int>& map) {
  auto at = [&](int i) { return map[static_cast<std::size_t>(g[i])]; };
  switch (g.kind) {
    case GenKind::MinusOne: return Generator::minus_one(at(0));
    case GenKind::X: return Generator::x(at(0), at(1));
    case GenKind::K: return Generator::k(at(0), at(1), at(2), at(3));
    case GenKind::IH: return g;
  }
  return g;
}

Word relabel(const Word& w, const std::vector<int>& map) {
  Word out;
  for (const auto& g : w) out.push_back(relabel(g, map));
  return out;
}

}  // namespace

RewriteTrace instance_trace(const DerivedRelation& entry, const Substitution& subst, int n) {
  RewriteTrace canon = flatten(canonical_trace(entry));
  const auto& vars = entry.schema.vars;
  std::vector<int> map(static_cast<std::size_t>(canon.n + 1), 0);
  int prev = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = subst.find(vars[i]);
    if (it == subst.end()) throw RelationError(entry.schema.id + ": missing variable " + vars[i]);
    if (it->second <= prev)
      throw RelationError(entry.schema.id + ": substitution must increase in variable order");
    prev = it->second;
    map[i + 1] = it->second;
  }
  if (prev > n) throw IndexError(entry.schema.id + ": instance does not fit n=" + std::to_string(n));
  RewriteTrace out;
  out.n = n;
  out.start = relabel(canon.start, map);
  if (canon.target) out.target = relabel(*canon.target, map);
  for (const auto& step : canon.steps) {
    RewriteStep s = step;
    s.instance.n = n;
    for (auto& [var, value] : s.instance.subst) value = map[static_cast<std::size_t>(value)];
    out.steps.push_back(std::move(s));
  }
  return out;
}

RewriteTrace flatten(const RewriteTrace& trace) {
  RewriteTrace out;
  out.n = trace.n;
  out.start = trace.start;
  out.target = trace.target;
  for (const auto& step : trace.steps) {
    if (is_primitive(step.instance.id)) {
      out.steps.push_back(step);
      continue;
    }
    const DerivedRelation& d = find_derived(step.instance.id);
    RewriteTrace inner = instance_trace(d, step.instance.subst, trace.n);
    std::vector<RewriteStep> steps = inner.steps;
    if (step.dir == Direction::RhsToLhs) {
      std::reverse(steps.begin(), steps.end());
      for (auto& s : steps)
        s.dir = s.dir == Direction::LhsToRhs ? Direction::RhsToLhs : Direction::LhsToRhs;
    }
    for (auto& s : steps) {
      s.position += step.position;
      out.steps.push_back(std::move(s));
    }
  }
  return out;
}

bool verify_derivation(const DerivedRelation& entry) {
  RewriteTrace trace = canonical_trace(entry);
  for (const auto& step : trace.steps)
    if (!is_primitive(step.instance.id)) return false;
  auto [lhs, rhs] = instantiate(entry.schema, canonical_substitution(entry.schema), trace.n);
  if (trace.start != lhs) return false;
  return replay(trace) == rhs;
}

bool verify_derived_soundness(const DerivedRelation& entry) {
  if (entry.is_schematic()) {
    for (const auto& [lhs, rhs] : entry.schematic()) {
      int n = std::max({entry.canonical_n, extent(lhs), extent(rhs)});
      if (interp(lhs, n) != interp(rhs, n)) return false;
    }
    return true;
  }
  auto [lhs, rhs] = instantiate(entry.schema, canonical_substitution(entry.schema), entry.canonical_n);
  return interp(lhs, entry.canonical_n) == interp(rhs, entry.canonical_n);
}

}  // namespace odz
