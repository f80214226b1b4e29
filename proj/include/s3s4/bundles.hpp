#pragma once

// The two-parameter family of S^3-bundles over S^4. With rho, sigma the
// generators of pi_3(SO(4)) acting by quaternion conjugation and left
// multiplication, the pair (m, n) is the bundle with clutching class
// m*rho + n*sigma; its total space M_{m,n} has Euler number n and
// H^4 = Z_n. This module computes the invariants of M_{m,n} and the
// oriented homotopy classification m = +-m' mod gcd(n, 12) due to
// James and Whitehead.

#include <array>
#include <string>
#include <vector>

#include "s3s4/linkforms.hpp"
#include "s3s4/modcore.hpp"

namespace s3s4 {

// Z, Z_k (k >= 2), or 0. Z_1 collapses to the trivial group.
class AbelianGroup {
 public:
  static AbelianGroup integers() { return AbelianGroup(true, 1); }
  static AbelianGroup cyclic(const Int& k);
  static AbelianGroup trivial() { return AbelianGroup(false, 1); }

  bool is_infinite() const { return infinite_; }
  bool is_trivial() const { return !infinite_ && torsion_ == 1; }
  const Int& torsion_order() const { return torsion_; }

  std::string str() const;
  bool operator==(const AbelianGroup&) const = default;

 private:
  AbelianGroup(bool infinite, Int torsion)
      : infinite_(infinite), torsion_(std::move(torsion)) {}
  bool infinite_;
  Int torsion_;
};

// Integral cohomology of a 7-complex, degrees 0..7.
class CohomologyProfile {
 public:
  CohomologyProfile();  // all trivial

  // The profile {H^0 = H^7 = Z, H^4 = Z_n, else 0} shared by every M_{m,n}.
  static CohomologyProfile bundle_total_space(const Int& n);

  const AbelianGroup& at(int degree) const;
  void set(int degree, AbelianGroup group);

  bool operator==(const CohomologyProfile&) const = default;

 private:
  std::array<AbelianGroup, 8> groups_;
};

class BundleSpec {
 public:
  // n = 0 is rejected (H^4 would be infinite); n < 0 is normalized to |n|
  // and flagged as an orientation reversal.
  BundleSpec(Int m, Int n);

  const Int& m() const { return m_; }
  const Int& euler() const { return n_; }  // n = |H^4|
  Int m_canonical() const;                 // m reduced into [0, n)
  bool orientation_reversed() const { return orientation_reversed_; }

  bool operator==(const BundleSpec& other) const {
    return m_ == other.m_ && n_ == other.n_;
  }

 private:
  Int m_;
  Int n_;
  bool orientation_reversed_ = false;
};

// The invariant triple (|H^4|, linking form, spin class beta = c * x_4)
// classifying 2-connected 7-manifolds up to at most two PL types.
class WilkensData {
 public:
  // Requires a nondegenerate form with form.order() == n, and an even
  // beta coefficient when n is even (w_4 = 0 forces beta even).
  WilkensData(const Int& n, LinkingForm form, const Int& beta_coeff);

  const Int& order() const { return form_.order(); }
  const LinkingForm& form() const { return form_; }
  const Residue& beta_coeff() const { return beta_coeff_; }

 private:
  LinkingForm form_;
  Residue beta_coeff_;
};

// {0: Z, 4: Z_n, 7: Z, else 0}; degree 4 is trivial for n = 1 (the
// homotopy-7-sphere case).
CohomologyProfile cohomology(const BundleSpec& b);

// Every bundle total space carries the standard form lambda = 1 in the
// canonical generator and orientation.
LinkingForm linking_form(const BundleSpec& b);

// Spin characteristic class coefficient: beta = 2m x_4, defined up to the
// sign ambiguity +-2m.
Residue beta(const BundleSpec& b);

// Oriented homotopy equivalence: same n and m = +-m' mod gcd(n, 12).
bool homotopy_equivalent(const BundleSpec& a, const BundleSpec& b);

// One representative (smallest m >= 0) per oriented homotopy class;
// the count is floor(gcd(n,12)/2) + 1.
std::vector<BundleSpec> enumerate_homotopy_types(const Int& n);

// (n, standard form, beta = 2m mod n).
WilkensData wilkens_data(const BundleSpec& b);

}  // namespace s3s4
