#pragma once

// Decision procedures for recognizing S^3-bundle structure. A complex with
// H^0 = H^7 = Z, H^4 = Z_n carries such a structure iff a secondary-operation
// condition holds and its linking form is standard; for manifolds the first
// condition is automatic, and for n odd or twice odd the conclusion upgrades
// to PL-homeomorphism via the Wilkens invariants.

#include <optional>
#include <string>
#include <vector>

#include "s3s4/bundles.hpp"
#include "s3s4/linkforms.hpp"
#include "s3s4/modcore.hpp"

namespace s3s4 {

// Input invariants of a candidate complex. theta_trivial reports whether the
// secondary operation H^4(X,F_2) -> H^7(X,F_2) for Sq2 Sq2 = Sq3 Sq1
// vanishes; it is never computed here (that needs a cell structure), only
// declared. Smooth manifolds satisfy it automatically.
class ComplexData {
 public:
  ComplexData(const Int& n, LinkingForm form,
              std::optional<bool> theta_trivial, bool is_manifold);

  const Int& order() const { return form_.order(); }
  const LinkingForm& form() const { return form_; }
  std::optional<bool> declared_theta() const { return theta_trivial_; }
  bool is_manifold() const { return is_manifold_; }

  // Manifolds force the condition true regardless of the declaration.
  std::optional<bool> effective_theta() const {
    if (is_manifold_) return true;
    return theta_trivial_;
  }

 private:
  LinkingForm form_;
  std::optional<bool> theta_trivial_;
  bool is_manifold_;
};

enum class Status { Yes, No, Indeterminate };

std::string to_string(Status s);

// Certificate that the attaching map's Hopf invariant can be normalized to
// sign * n: postcomposing with a degree-m self map and shifting by k*n^2
// gives m^2*lambda*n + k*n^2 = sign*n exactly over the integers.
struct HopfWitness {
  Int m;
  Int k;
  int sign = +1;
  bool operator==(const HopfWitness&) const = default;
};

struct Verdict {
  Status status = Status::Indeterminate;
  std::string reason;  // stable text code
  std::optional<StandardWitness> standard_witness;
  std::optional<HopfWitness> hopf;
  std::vector<BundleSpec> bundles;  // homotopy reps or Wilkens matches
  std::vector<std::string> notes;
};

// Bundle-structure recognition for a complex: Yes iff the secondary
// operation vanishes and the form is standard, with all witnesses attached;
// Indeterminate when the operation's status is undeclared.
Verdict theorem1_decide(const ComplexData& x);

// Prime-power fast path: when n = p^k with p = 3 (mod 4), -1 is not a
// square mod p^k, so every nondegenerate form is standard and only the
// secondary-operation hypothesis matters. Falls back to theorem1_decide
// with a note otherwise.
Verdict theorem4_decide(const ComplexData& x);

// All m in [0, n) whose bundle M_{m,n} has Wilkens data equivalent to d:
// some unit u and signs make u^2*lambda = +-1 and u*c = +-2m. Empty iff the
// form is not standard. Quantifies over both beta signs and both
// orientations since neither is pinned down by the invariants.
std::vector<BundleSpec> wilkens_match(const WilkensData& d);

// PL recognition: matched bundles exist and n odd => PL-homeomorphic to the
// unique match class; n = 2 (mod 4) => both PL types with the data are
// bundles; n = 0 (mod 4) stays undecided here.
Verdict theorem3_decide(const WilkensData& d);

// Constructive witness behind standardness: from tau^2 = sign*lambda take
// m = tau^{-1} (representative in [1, n]) and the k forced by the exact
// identity m^2*lambda*n + k*n^2 = sign*n. nullopt when the form is not
// standard; throws on non-unit lambda.
std::optional<HopfWitness> hopf_witness(const Int& n, const Residue& lambda);

}  // namespace s3s4
