#include "c2lab/finite_field.hpp"

#include <algorithm>
#include <string>

#include "c2lab/error.hpp"

namespace c2lab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw InvalidInput(std::to_string(p) + " is not a prime at most 2^31");
  }
  p_ = static_cast<std::uint32_t>(p);
  if (p_ <= (1U << 16)) {
    inverse_table_.assign(p_, 0);
    if (p_ > 1) inverse_table_[1] = 1;
    // inv(i) = -(p / i) * inv(p mod i)
    for (std::uint32_t i = 2; i < p_; ++i) {
      inverse_table_[i] = static_cast<Residue>(
          (p_ - std::uint64_t{p_ / i} * inverse_table_[p_ % i] % p_) % p_);
    }
  }
}

Residue PrimeField::pow(Residue base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % p_;
  std::uint64_t b = base % p_;
  while (exp > 0) {
    if (exp & 1U) result = result * b % p_;
    b = b * b % p_;
    exp >>= 1U;
  }
  return static_cast<Residue>(result);
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InvalidInput("zero has no inverse");
  if (!inverse_table_.empty()) return inverse_table_[a % p_];
  return pow(a, p_ - 2);
}

FpMatrix::FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols,
                   std::span<const std::int64_t> entries)
    : FpMatrix(rows, cols) {
  if (entries.size() != rows * cols) throw InvalidInput("matrix entry count mismatch");
  std::transform(entries.begin(), entries.end(), data_.begin(),
                 [&](std::int64_t x) { return field.reduce(x); });
}

FpMatrix multiply(const PrimeField& field, const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shapes do not compose");
  FpMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = (acc + std::uint64_t{a.at(i, k)} * b.at(k, j)) % field.prime();
      }
      out.at(i, j) = static_cast<Residue>(acc);
    }
  }
  return out;
}

Residue det_mod_p(const PrimeField& field, FpMatrix m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  return det_in_place(field, m.data(), m.rows());
}

Residue det_in_place(const PrimeField& field, std::span<Residue> a, std::size_t n) {
  const std::uint64_t p = field.prime();
  std::uint64_t det = 1 % p;
  bool negate = false;
  // Small scratch for the non-zero column positions of the pivot row.
  std::vector<std::size_t> nz;
  nz.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * n + k),
                       a.begin() + static_cast<std::ptrdiff_t>(pivot * n + n),
                       a.begin() + static_cast<std::ptrdiff_t>(k * n + k));
      negate = !negate;
    }
    const Residue* prow = &a[k * n];
    det = det * prow[k] % p;
    const std::uint64_t inv = field.inv(prow[k]);
    nz.clear();
    for (std::size_t c = k + 1; c < n; ++c) {
      if (prow[c] != 0) nz.push_back(c);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      Residue* row = &a[r * n];
      if (row[k] == 0) continue;
      const std::uint64_t factor = row[k] * inv % p;
      const std::uint64_t neg_factor = p - factor;
      for (std::size_t c : nz) {
        row[c] = static_cast<Residue>((row[c] + neg_factor * prow[c]) % p);
      }
      row[k] = 0;
    }
  }
  return static_cast<Residue>(negate ? (p - det) % p : det);
}

AssignmentSpace::AssignmentSpace(std::size_t num_vars, std::uint32_t p, std::uint64_t budget)
    : num_vars_(num_vars), p_(p), size_(1) {
  if (p < 2) throw InvalidInput("assignment space needs p >= 2");
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (size_ > budget / p) {
      // Report the true requirement where it fits in 64 bits.
      long double need = 1;
      for (std::size_t j = 0; j < num_vars; ++j) need *= p;
      const auto required = need > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(need);
      throw BudgetExceeded(std::to_string(p) + "^" + std::to_string(num_vars) + " evaluations",
                           required, budget);
    }
    size_ *= p;
  }
}

void AssignmentSpace::decode(std::uint64_t index, std::span<Residue> out) const {
  for (std::size_t i = num_vars_; i-- > 0;) {
    out[i] = static_cast<Residue>(index % p_);
    index /= p_;
  }
}

bool AssignmentSpace::next(std::span<Residue> tuple) const noexcept {
  for (std::size_t i = num_vars_; i-- > 0;) {
    if (++tuple[i] < p_) return true;
    tuple[i] = 0;
  }
  return false;
}

AssignmentSpace::Chunk AssignmentSpace::chunk(std::size_t k, std::size_t count) const noexcept {
  const std::uint64_t per = size_ / count;
  const std::uint64_t extra = size_ % count;
  const std::uint64_t begin = k * per + std::min<std::uint64_t>(k, extra);
  const std::uint64_t len = per + (k < extra ? 1 : 0);
  return {begin, begin + len};
}

}  // namespace c2lab
