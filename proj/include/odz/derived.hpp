#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odz/relations.hpp"
#include "odz/words.hpp"

namespace odz {

struct DerivedRelation {
  RelationSchema schema;
  // Dimension of the canonical instance, which maps the i-th variable to i.
  int canonical_n = 4;
  // Primitive trace from lhs to rhs at the canonical instance; empty for schematic entries.
  std::string trace_text;
  // Schematic entries: every tau-instance as a pair claimed equal.
  std::function<std::vector<std::pair<Word, Word>>()> schematic;

  bool is_schematic() const { return static_cast<bool>(schematic); }
};

const std::vector<DerivedRelation>& derived_catalog();
const DerivedRelation& find_derived(std::string_view id_or_label);

Substitution canonical_substitution(const RelationSchema& schema);
RewriteTrace canonical_trace(const DerivedRelation& entry);

// Trace for any instance whose substitution is increasing in variable order.
RewriteTrace instance_trace(const DerivedRelation& entry, const Substitution& subst, int n);

// Expands steps that cite derived relations into primitive steps.
RewriteTrace flatten(const RewriteTrace& trace);

// True iff the trace is primitive and replays from lhs to rhs. A failing step throws
// RelationError naming the step index.
bool verify_derivation(const DerivedRelation& entry);

// Exact semantic check of the canonical instance, or of every schematic instance.
bool verify_derived_soundness(const DerivedRelation& entry);

// K (-1)^tau K as a word over (-1) and X on abcd. Needs an even number of odd taus.
Word k_sign_k(const std::array<int, 4>& abcd, const std::array<int, 4>& tau);

// K (-1)^tau K (-1)^tau2 K as a word over (-1) and X on abcd. Needs an odd number of
// odd taus in each tuple.
Word k_sign_k_sign_k(const std::array<int, 4>& abcd, const std::array<int, 4>& tau,
                     const std::array<int, 4>& tau2);

// K[alpha,beta,c,d] ... K[1,2,3,4] ... K[gamma,delta,c,d] with alpha<beta, gamma<delta in 1..4.
// Only tau with tau_alpha + tau_beta + tau_gamma + tau_delta = parity (mod 2) factor
// through a single K; the other half give no V K W.
struct PushForm {
  std::array<int, 2> left;
  std::array<int, 2> right;
  int parity;
};
const std::array<PushForm, 12>& push_forms();

// tau = (tau_alpha, tau_beta, tau_c, tau_d, tau_gamma, tau_delta).
Word push_form_word(const PushForm& form, int c, int d, const std::array<int, 6>& tau);

// V, W over (-1) and X with interp(g) = interp(V K[1,2,3,4] W). Throws if no such factoring exists.
std::pair<Word, Word> factor_through_k(const Word& g, int n);

}  // namespace odz
