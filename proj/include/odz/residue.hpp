#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace odz {

using Int4 = std::array<long, 4>;
using Int8 = std::array<long, 8>;

// Which vector a prediction talks about, for w = K[1,2,3,4] u.
enum class K4Target {
  W,       // w itself (integral)
  V,       // v = 2w
  WPrime,  // w' = w / 2
};

struct Residue4Prediction {
  std::string branch;  // lemma name, e.g. "kevenodds"
  std::string detail;  // sub-case, e.g. "u=1100"
  K4Target target = K4Target::W;
  int modulus = 2;  // 1 asserts integrality only
  std::vector<std::string> patterns;
};

// Every residue lemma whose hypothesis u satisfies.
std::vector<Residue4Prediction> k4_predictions(const Int4& u);
// The most specific applicable lemma. Every u matches at least one.
Residue4Prediction classify_k4(const Int4& u);

// Residue word of the targeted vector, or nullopt when it is not integral.
std::optional<std::string> k4_actual_residue(const Int4& u, K4Target target, int modulus);

struct Residue8Prediction {
  std::string branch;  // "normresidue1" or "normresidue2"
  int norm_mod16 = 0;
  std::vector<std::string> patterns;  // parity of w with K[1..4]K[5..8] u = 2w
};

// Requires every entry odd; returns u^T u mod 16, always 0 or 8.
int norm_class8(const Int8& u);
// Requires u = 11111111 mod 4.
Residue8Prediction classify_k8(const Int8& u);
std::optional<std::string> k8_actual_parity(const Int8& u);

std::string residue_word(const std::vector<long>& v, int modulus);

}  // namespace odz
