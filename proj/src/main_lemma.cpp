#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "odz/derived.hpp"
#include "odz/error.hpp"
#include "odz/normalizer.hpp"

namespace odz {
namespace {

Generator X(int a, int b) { return Generator::x(a, b); }
Generator M(int a) { return Generator::minus_one(a); }
Generator K(int a, int b, int c, int d) { return Generator::k(a, b, c, d); }

Word signs(std::initializer_list<int> idx, int e) {
  Word w;
  for (int i : idx) w += sign_pow(i, e);
  return w;
}

bool has_sign(const Word& syllable, int index) {
  return std::find(syllable.begin(), syllable.end(), M(index)) != syllable.end();
}

std::array<int, 4> taus(const Word& syllable, const std::array<int, 4>& idx) {
  std::array<int, 4> t{};
  for (std::size_t i = 0; i < 4; ++i) t[i] = has_sign(syllable, idx[i]) ? 1 : 0;
  return t;
}

// The pivot column of s, described the way the case analysis reads it.
struct Pivot {
  int j = 0;
  unsigned long k = 0;
  std::vector<mpz_class> u;  // 1-based: u[i] for row i; u[0] unused
  std::vector<int> odd;      // rows with odd u, increasing
  int a = 0;                 // k = 0: the row holding +-1
  int tau_a = 0;
};

Pivot read_pivot(const DyadicMatrix& s) {
  Pivot p;
  p.j = s.last_moved_column();
  DyadicVector v = s.column(p.j - 1);
  p.k = vec_lde(v);
  p.u.assign(v.size() + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    mpz_class x = v[i].num();
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), p.k - v[i].exp());
    p.u[i + 1] = x;
    if (mpz_odd_p(x.get_mpz_t())) p.odd.push_back(static_cast<int>(i) + 1);
  }
  if (p.k == 0) {
    p.a = p.odd.front();
    p.tau_a = p.u[static_cast<std::size_t>(p.a)] < 0 ? 1 : 0;
  }
  return p;
}

class Builder {
 public:
  Builder(const DyadicMatrix& s, const Generator& g) {
    sq_.s = s;
    sq_.top = g;
    sq_.r = s;
    apply_left(g, sq_.r);
    sq_.left = normal_syllable(s);
    sq_.t = s;
    apply_left(sq_.left, sq_.t);
  }

  // Takes the first `count` normal syllables from r.
  void right(int count) {
    sq_.right.clear();
    sq_.q = sq_.r;
    for (int i = 0; i < count; ++i) {
      if (sq_.q.is_identity())
        throw std::logic_error("square case expects more normal syllables than r has");
      Word syl = normal_syllable(sq_.q);
      apply_left(syl, sq_.q);
      sq_.right.push_back(std::move(syl));
    }
  }

  const Word& right_syllable(std::size_t i) const { return sq_.right.at(i); }
  const Square& partial() const { return sq_; }

  Square finish(Word bottom, std::string name) {
    sq_.bottom = std::move(bottom);
    sq_.case_name = std::move(name);
    DyadicMatrix end = sq_.t;
    apply_left(sq_.bottom, end);
    if (end != sq_.q)
      throw std::logic_error("square for case '" + sq_.case_name + "' does not commute");
    return sq_;
  }

 private:
  Square sq_;
};

Square x_case(const DyadicMatrix& s, const Generator& g, const Pivot& p) {
  const int x = g[0];
  Builder b(s, g);
  const Word swap{X(x, x + 1)};
  if (x + 1 > p.j) throw RetrogradeError("X[" + std::to_string(x) + "," + std::to_string(x + 1) +
                                         "] moves a fixed column (pivot column " +
                                         std::to_string(p.j) + ")");
  if (p.k == 0) {
    // With a = x = j-1 and tau_a = 0, r already fixes column j: its syllable (-1)[j]^0 is empty.
    b.right(p.a == x && p.j == x + 1 ? p.tau_a : 1);
    if (p.a != x && p.a != x + 1) {
      if (x + 1 == p.j) return b.finish(Word{X(p.a, x)}, "X k=0 a outside, x+1=j");
      return b.finish(swap, "X k=0 a outside, x+1<j");
    }
    if (p.j == x + 1) return b.finish({}, "X k=0 a inside, x+1=j");
    return b.finish(swap, "X k=0 a inside, x+1<j");
  }
  const int a = p.odd[0], bb = p.odd[1], c = p.odd[2], d = p.odd[3];
  auto in = [&](int i) { return i == x || i == x + 1; };
  int hits = in(a) + in(bb) + in(c) + in(d);
  if (hits == 0) {
    b.right(1);
    return b.finish(swap, "X k>0 disjoint");
  }
  if (hits == 1) {
    if (in(a) || in(bb) || in(c)) {
      b.right(1);
      return b.finish(swap, "X k>0 one shared index among abc");
    }
    if (d == x + 1) {
      b.right(1);
      return b.finish(swap, "X k>0 d=x+1");
    }
    const int e = d + 1;
    if (!mpz_odd_p(p.u[static_cast<std::size_t>(e)].get_mpz_t())) {
      b.right(1);
      return b.finish(swap, "X k>0 d=x, u_e even");
    }
    if (p.odd.size() < 8)
      throw std::logic_error("X k>0 d=x, u_e odd: pivot column has fewer than eight odd entries");
    const int f = p.odd[5], gg = p.odd[6], h = p.odd[7];
    mpz_class norm = 0;
    for (std::size_t i = 0; i < 8; ++i) norm += p.u[static_cast<std::size_t>(p.odd[i])] *
                                               p.u[static_cast<std::size_t>(p.odd[i])];
    mpz_class m16 = norm % 16;
    if (m16 != 0 && m16 != 8)
      throw std::logic_error("X k>0 d=x, u_e odd: eight odd entries with square sum not 0 or 8 mod 16");
    const int z = m16 == 0 ? e : h;
    b.right(2);
    Word rs{K(e, f, gg, h), K(a, bb, c, d), M(a), M(z), X(a, z)};
    Word nt = normal_syllable(b.partial().t);
    if (nt.empty() || nt[0] != K(e, f, gg, h))
      throw std::logic_error("X k>0 d=x, u_e odd: t does not reduce on the second quadruple");
    Word bottom = inverse_word(rs) + Word{X(d, e)} + rs + nt;
    return b.finish(std::move(bottom),
                    m16 == 0 ? "X k>0 d=x, u_e odd, 0 mod 16" : "X k>0 d=x, u_e odd, 8 mod 16");
  }
  b.right(1);
  if (x == a) return b.finish(Word{M(d), M(bb), X(bb, d)}, "X k>0 {x,x+1}={a,b}");
  if (x == bb) return b.finish(Word{X(bb, c)}, "X k>0 {x,x+1}={b,c}");
  return b.finish(Word{X(bb, d)}, "X k>0 {x,x+1}={c,d}");
}

Square sign_case(const DyadicMatrix& s, const Generator& g, const Pivot& p) {
  Builder b(s, g);
  const int first = p.k == 0 ? p.a : p.odd[0];
  if (p.k == 0 && p.a == 1 && p.j == 1) {
    b.right(0);
    return b.finish({}, "(-1) k=0 a=1 j=1");
  }
  b.right(1);
  if (first == 1) return b.finish({}, p.k == 0 ? "(-1) k=0 a=1 j>1" : "(-1) k>0 a=1");
  return b.finish(Word{M(1)}, p.k == 0 ? "(-1) k=0 a>1" : "(-1) k>0 a>1");
}

Square k_zero_case(const DyadicMatrix& s, const Generator& g, const Pivot& p) {
  Builder b(s, g);
  const int a = p.a, j = p.j, t = p.tau_a;
  const std::string name = "K k=0 a=" + std::to_string(a) + " j" +
                           (j == a ? "=a" : j > 4 ? ">4" : "=" + std::to_string(j));
  if (a > 4) {
    b.right(1);
    return b.finish(Word{K(1, 2, 3, 4)}, "K k=0 a>4");
  }
  int count = j <= 2 ? 4 : j == 3 ? 3 : 2;
  // The last syllable (-1)[3]^tau is empty when tau = 0.
  if (a == 2 && j == 3) count = 2 + t;
  b.right(count);
  switch (a) {
    case 1:
      if (j <= 2) return b.finish({}, name);
      if (j == 3) return b.finish(Word{X(1, 2)}, name);
      if (j == 4) return b.finish(signs({1, 2, 3}, t), name);
      return b.finish(signs({2, 3, 4}, t), name);
    case 2:
      if (j <= 3) return b.finish({}, name);
      if (j == 4) return b.finish(signs({1, 2, 3}, t) + Word{X(1, 2), X(2, 3)}, name);
      return b.finish(signs({2, 3, 4}, t) + Word{X(1, 2), X(3, 4)}, name);
    case 3:
      if (j == 3) return b.finish({}, name);
      if (j == 4) return b.finish(Word{X(1, 3), X(2, 3)} + signs({1, 2, 3}, t), name);
      return b.finish(Word{X(1, 3), X(2, 4)} + signs({1, 2, 4}, t), name);
    default:
      if (j == 4) return b.finish(Word{X(2, 3)} + signs({1, 2, 3}, 1), name);
      // The signs carry tau_4 here; without it the tau_4=0 square does not commute.
      return b.finish(Word{X(2, 3), X(1, 4)} + signs({1, 2, 3}, t), name);
  }
}

Square k_positive_case(const DyadicMatrix& s, const Generator& g, const Pivot& p) {
  Builder b(s, g);
  const std::array<int, 4> abcd{p.odd[0], p.odd[1], p.odd[2], p.odd[3]};
  const std::array<int, 4> low{1, 2, 3, 4};
  int hits = 0;
  for (int i : abcd) hits += i <= 4;
  const std::string name = "K k>0 |shared|=" + std::to_string(hits);

  if (hits == 0) {
    mpz_class sum = 0;
    for (std::size_t i = 1; i <= 4; ++i) sum += p.u[i] * p.u[i];
    if (sum % 8 == 0) {
      b.right(1);
      return b.finish(Word{K(1, 2, 3, 4)}, name + ", 0 mod 8");
    }
    b.right(2);
    return b.finish(k_sign_k(low, taus(b.right_syllable(0), low)), name + ", 4 mod 8");
  }
  if (hits == 1) {
    b.right(2);
    const int t = has_sign(b.right_syllable(0), 1) ? 1 : 0;
    switch (abcd[0]) {
      case 1: return b.finish(signs({2, 3, 4}, t), name + ", a=1");
      case 2: return b.finish(Word{X(1, 2), X(3, 4)} + signs({1, 3, 4}, t), name + ", a=2");
      case 3: return b.finish(Word{X(1, 3), X(2, 4)} + signs({1, 2, 4}, t), name + ", a=3");
      default: return b.finish(Word{X(1, 4), X(2, 3)} + signs({1, 2, 3}, t), name + ", a=4");
    }
  }
  if (hits == 2) {
    b.right(1);
    Word g_star = b.right_syllable(0) + Word{K(1, 2, 3, 4)} + inverse_word(b.partial().left);
    auto [v, w] = factor_through_k(g_star, s.n());
    return b.finish(v + Word{K(1, 2, 3, 4)} + w,
                    name + ", {a,b}={" + std::to_string(abcd[0]) + "," + std::to_string(abcd[1]) + "}");
  }
  if (hits == 3) {
    b.right(2);
    const int t = has_sign(b.right_syllable(0), 1) ? 1 : 0;
    const int d = abcd[3];
    const std::string abc = "{" + std::to_string(abcd[0]) + "," + std::to_string(abcd[1]) + "," +
                            std::to_string(abcd[2]) + "}";
    Word head = sign_pow(1, t);
    if (abcd[0] == 2) return b.finish(head, name + ", abc=" + abc);
    if (abcd[1] == 3) return b.finish(head + Word{X(1, 2), X(3, 4)}, name + ", abc=" + abc);
    if (abcd[2] == 3)
      return b.finish(head + Word{M(4), M(d), X(4, d), X(1, 2), X(2, 3), X(3, 4)}, name + ", abc=" + abc);
    return b.finish(head + Word{M(3), M(d), X(3, d), X(3, 4), X(1, 3), X(1, 2)}, name + ", abc=" + abc);
  }
  const std::array<int, 4> ts = taus(b.partial().left, low);
  if ((ts[0] + ts[1] + ts[2] + ts[3]) % 2 == 0) {
    b.right(0);
    return b.finish(k_sign_k(low, ts), name + ", even signs");
  }
  b.right(1);
  return b.finish(k_sign_k_sign_k(low, taus(b.right_syllable(0), low), ts), name + ", odd signs");
}

}  // namespace

Square complete_square_basic(const DyadicMatrix& s, const Generator& g) {
  if (g.kind == GenKind::IH) throw PreconditionError("complete_square_basic: IH is not a basic generator");
  if (!is_basic(g)) throw PreconditionError("complete_square_basic: " + to_string(g) + " is not basic");
  check_dimension(g, s.n());
  if (!is_member_od(s)) throw MembershipError("complete_square_basic: state is not orthogonal dyadic");
  if (s.is_identity()) throw PreconditionError("complete_square_basic: state is the identity");
  Pivot p = read_pivot(s);
  switch (g.kind) {
    case GenKind::X: return x_case(s, g, p);
    case GenKind::MinusOne: return sign_case(s, g, p);
    default: return p.k == 0 ? k_zero_case(s, g, p) : k_positive_case(s, g, p);
  }
}

}  // namespace odz
