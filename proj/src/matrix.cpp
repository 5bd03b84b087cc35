#include "odz/matrix.hpp"

#include <algorithm>

#include "odz/error.hpp"

namespace odz {

DyadicMatrix::DyadicMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {
  if (n < 1) throw DimensionError("dimension must be positive, got " + std::to_string(n));
}

DyadicMatrix DyadicMatrix::identity(int n) {
  DyadicMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DyadicVector DyadicMatrix::column(int j) const {
  DyadicVector v(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

int DyadicMatrix::last_moved_column() const {
  for (int j = n_ - 1; j >= 0; --j)
    for (int i = 0; i < n_; ++i)
      if ((*this)(i, j) != Dyadic(i == j ? 1 : 0)) return j + 1;
  return 0;
}

bool DyadicMatrix::is_identity() const { return last_moved_column() == 0; }

DyadicMatrix mat_mul(const DyadicMatrix& a, const DyadicMatrix& b) {
  if (a.n() != b.n())
    throw DimensionError("mat_mul: " + std::to_string(a.n()) + "x" + std::to_string(a.n()) +
                         " times " + std::to_string(b.n()) + "x" + std::to_string(b.n()));
  int n = a.n();
  DyadicMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const Dyadic& x = a(i, l);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b(l, j).is_zero()) c(i, j) += x * b(l, j);
    }
  return c;
}

DyadicMatrix transpose(const DyadicMatrix& m) {
  DyadicMatrix t(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) t(j, i) = m(i, j);
  return t;
}

unsigned long vec_lde(const DyadicVector& v) {
  unsigned long k = 0;
  for (const auto& x : v) k = std::max(k, lde(x));
  return k;
}

unsigned long mat_lde(const DyadicMatrix& m) {
  unsigned long k = 0;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) k = std::max(k, lde(m(i, j)));
  return k;
}

bool is_member_od(const DyadicMatrix& m) {
  return (transpose(m) * m).is_identity();
}

bool is_signed_permutation(const DyadicMatrix& m) {
  for (int j = 0; j < m.n(); ++j) {
    int nonzero = 0;
    for (int i = 0; i < m.n(); ++i) {
      const Dyadic& x = m(i, j);
      if (x.is_zero()) continue;
      if (x != Dyadic(1) && x != Dyadic(-1)) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return is_member_od(m);
}

DyadicMatrix embed_generator(const Generator& g, int n) {
  if (g.kind == GenKind::IH) throw IndexError("IH has no dyadic embedding; use interp_scaled");
  check_dimension(g, n);
  DyadicMatrix m = DyadicMatrix::identity(n);
  apply_left(g, m);
  return m;
}

DyadicMatrix interp(const Word& w, int n) {
  check_dimension(w, n);
  DyadicMatrix m = DyadicMatrix::identity(n);
  apply_left(w, m);
  return m;
}

namespace {

// Row-level kernel shared by matrices (stride n) and vectors (one column).
template <typename Get>
void kernel(const Generator& g, int cols, Get&& at) {
  switch (g.kind) {
    case GenKind::MinusOne: {
      int a = g[0] - 1;
      for (int j = 0; j < cols; ++j) at(a, j) = -at(a, j);
      break;
    }
    case GenKind::X: {
      int a = g[0] - 1, b = g[1] - 1;
      for (int j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
      break;
    }
    case GenKind::K: {
      int a = g[0] - 1, b = g[1] - 1, c = g[2] - 1, d = g[3] - 1;
      for (int j = 0; j < cols; ++j) {
        Dyadic p = at(a, j), q = at(b, j), r = at(c, j), s = at(d, j);
        Dyadic pq = p + q, pmq = p - q, rs = r + s, rms = r - s;
        at(a, j) = (pq + rs).scaled(-1);
        at(b, j) = (pmq + rms).scaled(-1);
        at(c, j) = (pq - rs).scaled(-1);
        at(d, j) = (pmq - rms).scaled(-1);
      }
      break;
    }
    case GenKind::IH:
      throw IndexError("IH has no dyadic action; use the scaled interpretation");
  }
}

}  // namespace

void apply_left(const Generator& g, DyadicMatrix& m) {
  check_dimension(g, m.n());
  kernel(g, m.n(), [&m](int i, int j) -> Dyadic& { return m(i, j); });
}

void apply_left(const Word& w, DyadicMatrix& m) {
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) apply_left(*it, m);
}

void apply_left(const Generator& g, DyadicVector& v) {
  check_dimension(g, static_cast<int>(v.size()));
  kernel(g, 1, [&v](int i, int) -> Dyadic& { return v[static_cast<std::size_t>(i)]; });
}

void apply_left(const Word& w, DyadicVector& v) {
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) apply_left(*it, v);
}

// ---- scaled matrices ----

ScaledMatrix::ScaledMatrix(int n, unsigned long k, std::vector<mpz_class> integral)
    : n_(n), k_(k), a_(std::move(integral)) {
  if (n < 1) throw DimensionError("dimension must be positive, got " + std::to_string(n));
  if (a_.size() != static_cast<std::size_t>(n * n))
    throw DimensionError("scaled matrix: expected " + std::to_string(n * n) + " entries");
  while (k_ >= 2 && std::all_of(a_.begin(), a_.end(), [](const mpz_class& x) {
           return mpz_even_p(x.get_mpz_t()) != 0;
         })) {
    for (auto& x : a_) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 2);
    k_ -= 2;
  }
}

ScaledMatrix ScaledMatrix::identity(int n) {
  std::vector<mpz_class> a(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] = 1;
  return ScaledMatrix(n, 0, std::move(a));
}

ScaledMatrix scaled_canonicalize(int n, unsigned long k, std::vector<mpz_class> integral) {
  return ScaledMatrix(n, k, std::move(integral));
}

ScaledMatrix scaled_mul(const ScaledMatrix& a, const ScaledMatrix& b) {
  if (a.n() != b.n()) throw DimensionError("scaled_mul: dimension mismatch");
  int n = a.n();
  std::vector<mpz_class> c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const mpz_class& x = a.at(i, l);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += x * b.at(l, j);
    }
  return ScaledMatrix(n, a.k() + b.k(), std::move(c));
}

ScaledMatrix scaled_transpose(const ScaledMatrix& s) {
  int n = s.n();
  std::vector<mpz_class> t(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(j * n + i)] = s.at(i, j);
  return ScaledMatrix(n, s.k(), std::move(t));
}

unsigned long sqrt2_lde(const ScaledMatrix& s) { return s.k(); }

bool is_member_ln(const ScaledMatrix& s) {
  int n = s.n();
  mpz_class target = 1;
  mpz_mul_2exp(target.get_mpz_t(), target.get_mpz_t(), s.k());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpz_class dot = 0;
      for (int l = 0; l < n; ++l) dot += s.at(l, i) * s.at(l, j);
      if (dot != (i == j ? target : mpz_class(0))) return false;
    }
  return true;
}

ScaledMatrix embed_scaled(const Generator& g, int n) {
  check_dimension(g, n);
  if (g.kind != GenKind::IH) return to_scaled(embed_generator(g, n));
  std::vector<mpz_class> a(static_cast<std::size_t>(n * n), 0);
  for (int b = 0; b < n; b += 2) {
    a[static_cast<std::size_t>(b * n + b)] = 1;
    a[static_cast<std::size_t>(b * n + b + 1)] = 1;
    a[static_cast<std::size_t>((b + 1) * n + b)] = 1;
    a[static_cast<std::size_t>((b + 1) * n + b + 1)] = -1;
  }
  return ScaledMatrix(n, 1, std::move(a));
}

ScaledMatrix interp_scaled(const Word& w, int n) {
  check_dimension(w, n);
  ScaledMatrix acc = ScaledMatrix::identity(n);
  // Consecutive IH-free runs go through the cheaper dyadic path.
  Word run;
  auto flush = [&]() {
    if (!run.empty()) acc = acc * to_scaled(interp(run, n));
    run = Word();
  };
  for (const auto& g : w) {
    if (g.kind == GenKind::IH) {
      flush();
      acc = acc * embed_scaled(g, n);
    } else {
      run.push_back(g);
    }
  }
  flush();
  return acc;
}

ScaledMatrix to_scaled(const DyadicMatrix& m) {
  int n = m.n();
  unsigned long e = mat_lde(m);
  std::vector<mpz_class> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Dyadic& x = m(i, j);
      mpz_class v = x.num();
      mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), e - x.exp());
      a[static_cast<std::size_t>(i * n + j)] = v;
    }
  return ScaledMatrix(n, 2 * e, std::move(a));
}

DyadicMatrix to_dyadic(const ScaledMatrix& s) {
  if (s.k() % 2 != 0)
    throw MembershipError("scaled matrix with odd sqrt2 exponent is not dyadic");
  DyadicMatrix m(s.n());
  for (int i = 0; i < s.n(); ++i)
    for (int j = 0; j < s.n(); ++j) m(i, j) = Dyadic(s.at(i, j), s.k() / 2);
  return m;
}

}  // namespace odz
