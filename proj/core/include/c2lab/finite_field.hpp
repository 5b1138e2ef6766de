#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace c2lab {

/// A residue in [0, p). The field it lives in is carried by PrimeField.
using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic context for F_p, p prime and at most 2^31 so that products of
/// two residues fit in 64 bits.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

  explicit PrimeField(std::uint64_t p);

  std::uint32_t prime() const noexcept { return p_; }

  Residue reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  Residue pow(Residue base, std::uint64_t exp) const noexcept;
  /// Multiplicative inverse; a must be non-zero.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  std::uint32_t p_;
  std::vector<Residue> inverse_table_;  // filled for small p only
};

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Entries are reduced modulo the field's prime.
  FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols,
           std::span<const std::int64_t> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Residue> data() noexcept { return data_; }
  std::span<const Residue> data() const noexcept { return data_; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

FpMatrix multiply(const PrimeField& field, const FpMatrix& a, const FpMatrix& b);

/// Determinant by Gaussian elimination with first-non-zero pivoting. The
/// 0x0 determinant is 1. Throws InvalidInput for non-square input.
Residue det_mod_p(const PrimeField& field, FpMatrix m);

/// In-place variant on an n x n row-major buffer; the buffer is destroyed.
/// Zero entries of the pivot row and zero multipliers are skipped, which
/// makes elimination of sparse incidence blocks close to linear.
Residue det_in_place(const PrimeField& field, std::span<Residue> a, std::size_t n);

/// Lexicographic enumeration of F_p^n (last coordinate varies fastest).
/// Index i corresponds to the base-p digits of i, most significant first.
class AssignmentSpace {
 public:
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

  /// Throws BudgetExceeded when p^num_vars exceeds the budget.
  AssignmentSpace(std::size_t num_vars, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::uint32_t prime() const noexcept { return p_; }
  std::uint64_t size() const noexcept { return size_; }

  /// Writes the tuple with lexicographic index `index` into out.
  void decode(std::uint64_t index, std::span<Residue> out) const;

  /// Advances `tuple` to its lexicographic successor; false after the last.
  bool next(std::span<Residue> tuple) const noexcept;

  struct Chunk {
    std::uint64_t begin;
    std::uint64_t end;
  };
  /// Chunk k of `count` contiguous, disjoint, covering chunks.
  Chunk chunk(std::size_t k, std::size_t count) const noexcept;

 private:
  std::size_t num_vars_;
  std::uint32_t p_;
  std::uint64_t size_;
};

}  // namespace c2lab
