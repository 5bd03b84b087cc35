#include "odz/residue.hpp"

#include <algorithm>

#include "odz/error.hpp"

namespace odz {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

std::string parity(const Int4& u) {
  return residue_word(std::vector<long>(u.begin(), u.end()), 2);
}

int count_odd(const Int4& u) {
  return static_cast<int>(std::count_if(u.begin(), u.end(), [](long x) { return mod(x, 2) == 1; }));
}

// All mod-4 words over {1,3} whose count of 1s has the given parity.
std::vector<std::string> odd_words_with_ones(int ones_parity) {
  std::vector<std::string> out;
  for (int mask = 0; mask < 16; ++mask) {
    std::string s;
    int ones = 0;
    for (int i = 0; i < 4; ++i) {
      bool one = (mask >> (3 - i)) & 1;
      s += one ? '1' : '3';
      ones += one;
    }
    if (ones % 2 == ones_parity) out.push_back(s);
  }
  return out;
}

Int4 k4_times_v(const Int4& u) {
  return {u[0] + u[1] + u[2] + u[3], u[0] - u[1] + u[2] - u[3], u[0] + u[1] - u[2] - u[3],
          u[0] - u[1] - u[2] + u[3]};
}

}  // namespace

std::string residue_word(const std::vector<long>& v, int modulus) {
  std::string s;
  for (long x : v) s += std::to_string(mod(x, modulus));
  return s;
}

std::vector<Residue4Prediction> k4_predictions(const Int4& u) {
  std::vector<Residue4Prediction> out;
  long sum = u[0] + u[1] + u[2] + u[3];
  long norm = 0;
  for (long x : u) norm += x * x;
  std::string p = parity(u);
  int odd = count_odd(u);

  if (mod(sum, 2) == 0) out.push_back({"honemod4", "", K4Target::W, 1, {"0000"}});

  if (odd == 4) {
    int ones = static_cast<int>(std::count_if(u.begin(), u.end(), [](long x) { return mod(x, 4) == 1; }));
    if (ones % 2 == 0)
      out.push_back({"evenoddsOddodds", "even count of 1 mod 4", K4Target::W, 2, {"0000"}});
    else
      out.push_back({"evenoddsOddodds", "odd count of 1 mod 4", K4Target::W, 4, odd_words_with_ones(1)});
    if (ones == 4) out.push_back({"twohsone", "", K4Target::WPrime, 2, {"1000", "0111"}});
  }

  if (mod(norm, 4) == 2) {
    static const std::array<std::pair<const char*, std::array<const char*, 2>>, 6> table = {{
        {"1100", {"1010", "0101"}},
        {"1010", {"1100", "0011"}},
        {"1001", {"1001", "0110"}},
        {"0110", {"1001", "0110"}},
        {"0101", {"1100", "0011"}},
        {"0011", {"1010", "0101"}},
    }};
    for (const auto& [from, to] : table)
      if (p == from) out.push_back({"kevenodds", std::string("u=") + from, K4Target::W, 2, {to[0], to[1]}});
  }

  if (mod(norm, 2) == 1) {
    static const std::array<std::pair<std::array<const char*, 2>, std::array<const char*, 2>>, 4> table = {{
        {{"1000", "0111"}, {"1111", "3333"}},
        {{"0100", "1011"}, {"1313", "3131"}},
        {{"0010", "1101"}, {"1133", "3311"}},
        {{"0001", "1110"}, {"1331", "3113"}},
    }};
    for (const auto& [from, to] : table)
      if (p == from[0] || p == from[1])
        out.push_back({"koddodds", "u=" + p, K4Target::V, 4, {to[0], to[1]}});
  }

  if (odd == 0) {
    if (mod(norm, 8) == 0) out.push_back({"kevens1", "", K4Target::W, 2, {"0000"}});
    if (mod(norm, 8) == 4) out.push_back({"kevens2", "", K4Target::W, 4, odd_words_with_ones(0)});
  }
  return out;
}

Residue4Prediction classify_k4(const Int4& u) {
  static const std::array<const char*, 6> priority = {"twohsone", "evenoddsOddodds", "kevenodds",
                                                      "koddodds", "kevens1", "kevens2"};
  auto all = k4_predictions(u);
  for (const char* name : priority)
    for (const auto& pred : all)
      if (pred.branch == name) return pred;
  // Unreachable: every vector has 0, 1-3 or 4 odd entries and one of the above covers it.
  throw PreconditionError("no residue lemma applies to u=" + parity(u));
}

std::optional<std::string> k4_actual_residue(const Int4& u, K4Target target, int modulus) {
  Int4 v = k4_times_v(u);  // v = 2 K u
  std::vector<long> out;
  long divisor = target == K4Target::V ? 1 : target == K4Target::W ? 2 : 4;
  for (long x : v) {
    if (mod(x, divisor) != 0) return std::nullopt;
    out.push_back(x / divisor);
  }
  return residue_word(out, modulus);
}

int norm_class8(const Int8& u) {
  long norm = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    if (mod(u[i], 2) != 1)
      throw PreconditionError("u_" + std::to_string(i + 1) + " = " + std::to_string(u[i]) +
                              " violates u = 11111111 (mod 2)");
    norm += u[i] * u[i];
  }
  return static_cast<int>(mod(norm, 16));
}

Residue8Prediction classify_k8(const Int8& u) {
  for (std::size_t i = 0; i < 8; ++i)
    if (mod(u[i], 4) != 1)
      throw PreconditionError("u_" + std::to_string(i + 1) + " = " + std::to_string(u[i]) +
                              " violates u = 11111111 (mod 4)");
  int c = norm_class8(u);
  if (c == 0) return {"normresidue1", 0, {"10000111", "01111000"}};
  return {"normresidue2", 8, {"10001000", "01110111"}};
}

std::optional<std::string> k8_actual_parity(const Int8& u) {
  Int4 lo{u[0], u[1], u[2], u[3]}, hi{u[4], u[5], u[6], u[7]};
  Int4 vl = k4_times_v(lo), vh = k4_times_v(hi);  // 2 K u blockwise, so 2w = v/2
  std::vector<long> w;
  for (long x : vl) {
    if (mod(x, 4) != 0) return std::nullopt;
    w.push_back(x / 4);
  }
  for (long x : vh) {
    if (mod(x, 4) != 0) return std::nullopt;
    w.push_back(x / 4);
  }
  return residue_word(w, 2);
}

}  // namespace odz
