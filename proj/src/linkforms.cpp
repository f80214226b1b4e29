#include "s3s4/linkforms.hpp"

namespace s3s4 {

LinkingForm::LinkingForm(const Int& n, const Int& lambda)
    : lambda_(Residue::reduce(lambda, n)) {}

bool is_nondegenerate(const LinkingForm& form) {
  return form.order() == 1 || form.lambda().is_unit();
}

std::optional<StandardWitness> is_standard(const LinkingForm& form) {
  if (!is_nondegenerate(form))
    throw std::invalid_argument("is_standard: degenerate form");
  if (auto root = sqrt_mod(form.lambda())) return StandardWitness{*root, +1};
  if (auto root = sqrt_mod(-form.lambda())) return StandardWitness{*root, -1};
  return std::nullopt;
}

bool equivalent(const LinkingForm& a, const LinkingForm& b,
                bool allow_orientation_flip) {
  if (a.order() != b.order())
    throw std::invalid_argument("equivalent: forms live on different groups");
  if (!is_nondegenerate(a) || !is_nondegenerate(b))
    throw std::invalid_argument("equivalent: degenerate form");
  // u^2 * a.lambda = b.lambda  <=>  b.lambda / a.lambda is a unit square
  Residue ratio = b.lambda() * a.lambda().inverse();
  if (sqrt_mod(ratio)) return true;
  if (allow_orientation_flip && sqrt_mod(-ratio)) return true;
  return false;
}

Int square_class_count(const Int& n) {
  if (n < 1) throw std::invalid_argument("square_class_count: n must be >= 1");
  // (Z/n)* splits over the prime powers of n; each odd prime power
  // contributes index 2 to U/U^2, the 2-part contributes 1, 2 or 4.
  // -1 is a square mod n iff it is one mod every prime power.
  Factorization fac = factor(n);
  Int index = 1;
  bool minus_one_is_square = true;
  for (const auto& pp : fac.entries) {
    if (pp.prime == 2) {
      if (pp.exponent == 2) index *= 2;
      if (pp.exponent >= 3) index *= 4;
      if (pp.exponent >= 2) minus_one_is_square = false;
    } else {
      index *= 2;
      if (pp.prime % 4 == 3) minus_one_is_square = false;
    }
  }
  return minus_one_is_square ? index : index / 2;
}

}  // namespace s3s4
