#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "odz/relations.hpp"
#include "odz/words.hpp"

namespace odz {

using Rng = std::mt19937_64;

// Uniform over generator kinds that fit in dimension n, then uniform over their indices.
// IH is offered only when with_ih is set and n is even.
Generator random_generator(Rng& rng, int n, bool with_ih = false);
Word random_word(Rng& rng, int n, std::size_t length, bool with_ih = false);

// A random step of the named relations that applies somewhere in w, or nothing after
// `attempts` misses. Sides equal to eps may be inserted at any position.
std::optional<RewriteStep> random_step(Rng& rng, const Word& w, int n,
                                       const std::vector<std::string_view>& relation_ids,
                                       int attempts = 200);
// Same, over R1..R21.
std::optional<RewriteStep> random_step(Rng& rng, const Word& w, int n, int attempts = 200);

}  // namespace odz
