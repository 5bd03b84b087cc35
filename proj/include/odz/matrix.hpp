#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "odz/dyadic.hpp"
#include "odz/words.hpp"

namespace odz {

using DyadicVector = std::vector<Dyadic>;

// Dense n x n matrix, row-major. Accessors are 0-based; generator indices are 1-based.
class DyadicMatrix {
 public:
  DyadicMatrix() = default;
  explicit DyadicMatrix(int n);  // zero matrix
  static DyadicMatrix identity(int n);

  int n() const { return n_; }
  Dyadic& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const Dyadic& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  DyadicVector column(int j) const;
  bool is_identity() const;
  // Largest 1-based j with M e_j != e_j, or 0.
  int last_moved_column() const;

  friend bool operator==(const DyadicMatrix&, const DyadicMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Dyadic> e_;
};

DyadicMatrix mat_mul(const DyadicMatrix& a, const DyadicMatrix& b);
inline DyadicMatrix operator*(const DyadicMatrix& a, const DyadicMatrix& b) { return mat_mul(a, b); }
DyadicMatrix transpose(const DyadicMatrix& m);
unsigned long mat_lde(const DyadicMatrix& m);
unsigned long vec_lde(const DyadicVector& v);
bool is_member_od(const DyadicMatrix& m);
bool is_signed_permutation(const DyadicMatrix& m);

DyadicMatrix embed_generator(const Generator& g, int n);
DyadicMatrix interp(const Word& w, int n);

// In-place left multiplication by a generator or a word, done with row operations.
void apply_left(const Generator& g, DyadicMatrix& m);
void apply_left(const Word& w, DyadicMatrix& m);
void apply_left(const Generator& g, DyadicVector& v);
void apply_left(const Word& w, DyadicVector& v);

// integral / sqrt(2)^k, kept canonical: no k >= 2 with every entry even.
class ScaledMatrix {
 public:
  ScaledMatrix() = default;
  ScaledMatrix(int n, unsigned long k, std::vector<mpz_class> integral);
  static ScaledMatrix identity(int n);

  int n() const { return n_; }
  unsigned long k() const { return k_; }
  const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<mpz_class>& integral() const { return a_; }

  friend bool operator==(const ScaledMatrix&, const ScaledMatrix&) = default;

 private:
  int n_ = 0;
  unsigned long k_ = 0;
  std::vector<mpz_class> a_;
};

ScaledMatrix scaled_canonicalize(int n, unsigned long k, std::vector<mpz_class> integral);
ScaledMatrix scaled_mul(const ScaledMatrix& a, const ScaledMatrix& b);
inline ScaledMatrix operator*(const ScaledMatrix& a, const ScaledMatrix& b) { return scaled_mul(a, b); }
ScaledMatrix scaled_transpose(const ScaledMatrix& s);
unsigned long sqrt2_lde(const ScaledMatrix& s);
bool is_member_ln(const ScaledMatrix& s);
ScaledMatrix embed_scaled(const Generator& g, int n);
ScaledMatrix interp_scaled(const Word& w, int n);
ScaledMatrix to_scaled(const DyadicMatrix& m);
// Requires even k.
DyadicMatrix to_dyadic(const ScaledMatrix& s);

}  // namespace odz
