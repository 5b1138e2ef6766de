#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "c2lab/finite_field.hpp"

namespace c2lab {

/// Small dense multivariate polynomial over F_p, keyed by exponent vector.
/// Only used to cross-check point counts on tiny inputs.
class DensePoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  DensePoly(std::size_t num_vars, std::uint32_t p);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::uint32_t prime() const noexcept { return field_.prime(); }
  const std::map<Exponents, Residue>& terms() const noexcept { return terms_; }

  /// Adds c * x^e (c reduced mod p); zero coefficients are dropped.
  void add_term(const Exponents& e, std::int64_t c);
  Residue coefficient(const Exponents& e) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  DensePoly operator*(const DensePoly& o) const;
  DensePoly pow(std::uint32_t k) const;
  Residue evaluate(std::span<const Residue> x) const;

 private:
  std::size_t num_vars_;
  PrimeField field_;
  std::map<Exponents, Residue> terms_;
};

struct CwCheck {
  Residue coefficient = 0;  // of prod x_i^(p-1) in F^(p-1)
  std::uint64_t zeros = 0;  // [F]_p
  Residue rhs = 0;          // (-1)^(N-1) [F]_p mod p
  bool pass = false;
};

/// Both sides of the Chevalley-Warning coefficient congruence, computed
/// independently. Throws InvalidInput unless deg F = N.
CwCheck cw_coefficient_check(const DensePoly& f);

}  // namespace c2lab
