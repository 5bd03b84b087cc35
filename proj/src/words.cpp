#include "odz/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "odz/error.hpp"

namespace odz {

Generator Generator::minus_one(int a) {
  if (a < 1) throw IndexError("(-1)[" + std::to_string(a) + "]: index must be positive");
  return Generator{GenKind::MinusOne, {a, 0, 0, 0}};
}

Generator Generator::x(int a, int b) {
  if (a < 1 || a >= b)
    throw IndexError("X[" + std::to_string(a) + "," + std::to_string(b) +
                     "]: requires 1 <= a < b");
  return Generator{GenKind::X, {a, b, 0, 0}};
}

Generator Generator::k(int a, int b, int c, int d) {
  if (a < 1 || a >= b || b >= c || c >= d)
    throw IndexError("K[" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + "," + std::to_string(d) +
                     "]: requires 1 <= a < b < c < d");
  return Generator{GenKind::K, {a, b, c, d}};
}

Generator Generator::ih() { return Generator{GenKind::IH, {0, 0, 0, 0}}; }

int Generator::arity() const {
  switch (kind) {
    case GenKind::MinusOne: return 1;
    case GenKind::X: return 2;
    case GenKind::K: return 4;
    case GenKind::IH: return 0;
  }
  return 0;
}

bool Generator::touches(int index) const {
  for (int i = 0; i < arity(); ++i)
    if (idx[static_cast<std::size_t>(i)] == index) return true;
  return false;
}

Word& Word::operator+=(const Word& other) {
  gens_.insert(gens_.end(), other.gens_.begin(), other.gens_.end());
  return *this;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Generator>(gens_.begin() + static_cast<std::ptrdiff_t>(pos),
                                     gens_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

namespace {

std::vector<int> parse_index_list(std::string_view body, std::string_view token) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view part = body.substr(start, comma == std::string_view::npos ? body.npos
                                                                                : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw ParseError("bad token '" + std::string(token) + "': index '" + std::string(part) +
                       "' is not an integer");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Generator parse_generator(std::string_view token) {
  if (token == "IH") return Generator::ih();
  std::string_view head;
  if (token.starts_with("(-1)[")) head = "(-1)";
  else if (token.starts_with("X[")) head = "X";
  else if (token.starts_with("K[")) head = "K";
  else throw ParseError("bad token '" + std::string(token) + "'");
  if (!token.ends_with("]")) throw ParseError("bad token '" + std::string(token) + "': missing ']'");
  std::string_view body = token.substr(head.size() + 1, token.size() - head.size() - 2);
  std::vector<int> ix = parse_index_list(body, token);
  try {
    if (head == "(-1)" && ix.size() == 1) return Generator::minus_one(ix[0]);
    if (head == "X" && ix.size() == 2) return Generator::x(ix[0], ix[1]);
    if (head == "K" && ix.size() == 4) return Generator::k(ix[0], ix[1], ix[2], ix[3]);
  } catch (const IndexError& e) {
    throw ParseError("bad token '" + std::string(token) + "': " + e.what());
  }
  throw ParseError("bad token '" + std::string(token) + "': wrong number of indices");
}

Word parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  Word w;
  bool saw_eps = false;
  while (in >> token) {
    if (token == "eps") {
      saw_eps = true;
      continue;
    }
    w.push_back(parse_generator(token));
  }
  if (saw_eps && !w.empty()) throw ParseError("'eps' cannot be mixed with generators");
  return w;
}

std::string to_string(const Generator& g) {
  auto s = [](int v) { return std::to_string(v); };
  switch (g.kind) {
    case GenKind::MinusOne: return "(-1)[" + s(g[0]) + "]";
    case GenKind::X: return "X[" + s(g[0]) + "," + s(g[1]) + "]";
    case GenKind::K: return "K[" + s(g[0]) + "," + s(g[1]) + "," + s(g[2]) + "," + s(g[3]) + "]";
    case GenKind::IH: return "IH";
  }
  return "?";
}

std::string to_string(const Word& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

Word inverse_word(const Word& w) {
  std::vector<Generator> gens(w.gens().rbegin(), w.gens().rend());
  return Word(std::move(gens));
}

int extent(const Generator& g) {
  if (g.kind == GenKind::IH) throw IndexError("IH has no extent");
  return g[g.arity() - 1];
}

int extent(const Word& w) {
  int e = 0;
  for (const auto& g : w) e = std::max(e, extent(g));
  return e;
}

bool is_basic(const Generator& g) {
  switch (g.kind) {
    case GenKind::MinusOne: return g[0] == 1;
    case GenKind::X: return g[1] == g[0] + 1;
    case GenKind::K: return g[0] == 1 && g[1] == 2 && g[2] == 3 && g[3] == 4;
    case GenKind::IH: return false;
  }
  return false;
}

bool contains_ih(const Word& w) {
  return std::any_of(w.begin(), w.end(), [](const Generator& g) { return g.kind == GenKind::IH; });
}

void check_dimension(const Generator& g, int n) {
  if (g.kind == GenKind::IH) {
    if (n % 2 != 0) throw IndexError("I(x)H undefined for odd n=" + std::to_string(n));
    return;
  }
  if (extent(g) > n)
    throw IndexError(to_string(g) + " does not fit dimension n=" + std::to_string(n));
}

void check_dimension(const Word& w, int n) {
  for (const auto& g : w) check_dimension(g, n);
}

Word sign_pow(int a, int e) {
  if (e % 2 == 0) return {};
  return Word{Generator::minus_one(a)};
}

}  // namespace odz
