#include "c2lab/dense_poly.hpp"

#include "c2lab/error.hpp"

namespace c2lab {

DensePoly::DensePoly(std::size_t num_vars, std::uint32_t p) : num_vars_(num_vars), field_(p) {}

void DensePoly::add_term(const Exponents& e, std::int64_t c) {
  if (e.size() != num_vars_) throw InvalidInput("exponent vector has the wrong length");
  const Residue r = field_.add(terms_.count(e) ? terms_.at(e) : 0, field_.reduce(c));
  if (r == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = r;
  }
}

Residue DensePoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

int DensePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    d = std::max(d, s);
  }
  return d;
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  if (o.num_vars_ != num_vars_ || !(o.field_ == field_)) {
    throw InvalidInput("polynomials over different rings");
  }
  DensePoly out(num_vars_, prime());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(num_vars_);
      for (std::size_t i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, field_.mul(ca, cb));
    }
  }
  return out;
}

DensePoly DensePoly::pow(std::uint32_t k) const {
  DensePoly out(num_vars_, prime());
  out.add_term(Exponents(num_vars_, 0), 1);
  for (std::uint32_t i = 0; i < k; ++i) out = out * *this;
  return out;
}

Residue DensePoly::evaluate(std::span<const Residue> x) const {
  if (x.size() != num_vars_) throw InvalidInput("point has the wrong dimension");
  Residue sum = 0;
  for (const auto& [e, c] : terms_) {
    Residue term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) term = field_.mul(term, field_.pow(x[i], e[i]));
    sum = field_.add(sum, term);
  }
  return sum;
}

CwCheck cw_coefficient_check(const DensePoly& f) {
  const std::size_t n = f.num_vars();
  if (f.degree() != static_cast<int>(n)) {
    throw InvalidInput("Chevalley-Warning check needs degree equal to the variable count");
  }
  const std::uint32_t p = f.prime();
  const PrimeField field(p);
  CwCheck out;
  out.coefficient = f.pow(p - 1).coefficient(DensePoly::Exponents(n, p - 1));

  const AssignmentSpace space(n, p);
  std::vector<Residue> x(n, 0);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (f.evaluate(x) == 0) ++out.zeros;
    space.next(x);
  }
  const Residue z = static_cast<Residue>(out.zeros % p);
  out.rhs = (n - 1) % 2 == 0 ? z : field.neg(z);
  out.pass = out.coefficient == out.rhs;
  return out;
}

}  // namespace c2lab
