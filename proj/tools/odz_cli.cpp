// odz: synthesis, interpretation, normalization and relation checks from the shell.
// Exit codes: 0 success or equal, 1 usage or parse error, 2 membership failure, 3 different.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "odz/derived.hpp"
#include "odz/error.hpp"
#include "odz/matrix.hpp"
#include "odz/matrix_json.hpp"
#include "odz/normalizer.hpp"
#include "odz/random_words.hpp"
#include "odz/relations.hpp"
#include "odz/synthesis.hpp"

using namespace odz;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMembership = 2;
constexpr int kDifferent = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_synth(const std::string& path, bool scaled) {
  std::string text = read_input(path);
  // Scaled JSON carries "integral"; the flag is only needed to force it.
  if (scaled || text.find("\"integral\"") != std::string::npos) {
    std::cout << to_string(synthesize_scaled(scaled_from_json(text))) << "\n";
  } else {
    std::cout << to_string(synthesize(matrix_from_json(text))) << "\n";
  }
  return kOk;
}

int cmd_interp(int n, const std::string& text, bool scaled) {
  Word w = parse_word(text);
  check_dimension(w, n);
  if (scaled || contains_ih(w))
    std::cout << scaled_to_json(interp_scaled(w, n)) << "\n";
  else
    std::cout << matrix_to_json(interp(w, n)) << "\n";
  return kOk;
}

// IH anywhere in the word selects the scaled normal form.
int cmd_normalize(int n, const std::string& text) {
  std::cout << to_string(normalize_scaled(parse_word(text), n)) << "\n";
  return kOk;
}

int cmd_equal(int n, const std::string& v, const std::string& w) {
  bool same = decide_equal(parse_word(v), parse_word(w), n);
  std::cout << (same ? "equal" : "different") << "\n";
  return same ? kOk : kDifferent;
}

bool fits(const RelationSchema& schema, int n) {
  if (schema.scaled && n % 2 != 0) return false;
  return !enumerate_instances(schema, n).empty();
}

int cmd_verify(int n, const std::vector<std::string>& ids) {
  std::vector<const RelationSchema*> schemas;
  std::vector<const DerivedRelation*> derived;
  if (ids.empty()) {
    for (const auto& s : primitive_catalog()) schemas.push_back(&s);
    for (const auto& s : scaled_catalog()) schemas.push_back(&s);
    for (const auto& d : derived_catalog()) derived.push_back(&d);
  } else {
    for (const auto& id : ids) {
      try {
        derived.push_back(&find_derived(id));
      } catch (const RelationError&) {
        schemas.push_back(&find_schema(id));
      }
    }
  }
  bool all = true;
  for (const auto* s : schemas) {
    if (!fits(*s, n)) {
      std::cout << "SKIP " << s->id << " " << s->label << ": no instance in n=" << n << "\n";
      continue;
    }
    SoundnessReport r = verify_soundness(*s, n);
    all = all && r.ok;
    std::cout << (r.ok ? "PASS " : "FAIL ") << s->id << " " << s->label << " (" << r.instances
              << " instances)";
    if (r.first_failure) std::cout << " first failure " << to_string(*r.first_failure);
    std::cout << "\n";
  }
  for (const auto* d : derived) {
    bool sound = verify_derived_soundness(*d);
    bool replays = true;
    std::string why;
    if (!d->is_schematic()) {
      try {
        replays = verify_derivation(*d);
      } catch (const Error& e) {
        replays = false;
        why = e.what();
      }
    }
    bool ok = sound && replays;
    all = all && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << d->schema.id << " " << d->schema.label
              << (d->is_schematic() ? " (schematic)" : " (trace replayed)");
    if (!sound) std::cout << " unsound";
    if (!replays) std::cout << " replay failed" << (why.empty() ? "" : ": " + why);
    std::cout << "\n";
  }
  return all ? kOk : kDifferent;
}

int cmd_random(int n, std::size_t len, std::uint64_t seed, bool scaled) {
  Rng rng(seed);
  std::cout << to_string(random_word(rng, n, len, scaled)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact synthesis and word problem for orthogonal dyadic matrices"};
  app.require_subcommand(1);
  int n = 0;
  bool scaled = false;
  std::uint64_t seed = 0;
  std::size_t len = 20;
  std::vector<std::string> relations;
  std::string path, word, other;

  auto* synth = app.add_subcommand("synth", "synthesize a word from a matrix JSON file");
  synth->add_option("file", path, "matrix JSON, or - for stdin")->required();
  synth->add_flag("--scaled", scaled, "read scaled JSON (L_n)");

  auto* interp_cmd = app.add_subcommand("interp", "print the matrix of a word");
  interp_cmd->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  interp_cmd->add_option("word", word, "word")->required();
  interp_cmd->add_flag("--scaled", scaled, "print scaled JSON");

  auto* norm = app.add_subcommand("normalize", "print the normal form of a word");
  norm->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  norm->add_option("word", word, "word")->required();
  norm->add_flag("--scaled", scaled, "accepted for symmetry; IH is always allowed");

  auto* equal = app.add_subcommand("equal", "decide whether two words are equal");
  equal->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  equal->add_option("v", word, "first word")->required();
  equal->add_option("w", other, "second word")->required();
  equal->add_flag("--scaled", scaled, "accepted for symmetry; IH is always allowed");

  auto* verify = app.add_subcommand("verify", "soundness sweeps and derivation replays");
  verify->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  verify->add_option("--relations", relations, "ids or labels, comma separated")->delimiter(',');

  auto* random = app.add_subcommand("random", "print a seeded random word");
  random->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  random->add_option("--len", len, "length");
  random->add_option("--seed", seed, "seed");
  random->add_flag("--scaled", scaled, "include IH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*synth) return cmd_synth(path, scaled);
    if (*interp_cmd) return cmd_interp(n, word, scaled);
    if (*norm) return cmd_normalize(n, word);
    if (*equal) return cmd_equal(n, word, other);
    if (*verify) return cmd_verify(n, relations);
    if (*random) return cmd_random(n, len, seed, scaled);
  } catch (const MembershipError& e) {
    std::cerr << "odz: " << e.what() << "\n";
    return kMembership;
  } catch (const Error& e) {
    std::cerr << "odz: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
