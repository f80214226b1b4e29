#pragma once

// Nondegenerate symmetric bilinear forms b: Z_n x Z_n -> Z_n. Since the
// group is cyclic the form is pinned down by the single residue
// lambda = b(g, g) on a generator g: b(r*g, s*g) = r*s*lambda. A form is
// "standard" when some generator change (and possibly an orientation flip)
// turns lambda into 1, i.e. lambda = +-tau^2 for a unit tau.

#include <optional>

#include "s3s4/modcore.hpp"

namespace s3s4 {

class LinkingForm {
 public:
  // lambda is reduced mod n on construction; n >= 1 required.
  LinkingForm(const Int& n, const Int& lambda);

  const Int& order() const { return lambda_.modulus(); }  // n = |H^4|
  const Residue& lambda() const { return lambda_; }

  bool operator==(const LinkingForm&) const = default;

 private:
  Residue lambda_;
};

// A unit tau with tau^2 = sign * lambda (mod n); sign is the orientation
// choice that makes the form standard.
struct StandardWitness {
  Residue tau;
  int sign = +1;
  bool operator==(const StandardWitness&) const = default;
};

// gcd(lambda, n) = 1, i.e. the form pairs a generator nontrivially with
// every nonzero class. Trivially true for n = 1.
bool is_nondegenerate(const LinkingForm& form);

// Witness (tau, sign) with tau^2 = sign*lambda if the form is standard,
// preferring sign = +1 and then the smallest tau; nullopt otherwise.
// Throws on degenerate forms.
std::optional<StandardWitness> is_standard(const LinkingForm& form);

// True when a generator change u (and, if allowed, an orientation flip)
// carries a.lambda to b.lambda: exists unit u with u^2*a.lambda = +-b.lambda.
// Throws on mismatched moduli or degenerate inputs.
bool equivalent(const LinkingForm& a, const LinkingForm& b,
                bool allow_orientation_flip);

// Number of orbits of the unit group mod n under multiplication by unit
// squares and by -1; counts nondegenerate forms up to oriented equivalence.
Int square_class_count(const Int& n);

}  // namespace s3s4
