#pragma once

// The Berger space Sp(2)/Sp(1) for the maximal embedding, and the
// weight-generic computation behind it. The embedding restricts to the
// maximal tori as z -> (z^a, z^b) (Berger: (1, 3)); on classifying spaces
// the symplectic Pontryagin classes pull back by the elementary symmetric
// functions of a^2, b^2, and two spectral-sequence differentials with those
// coefficients produce the quotient's cohomology.

#include <optional>
#include <string>
#include <vector>

#include "s3s4/bundles.hpp"
#include "s3s4/decide.hpp"
#include "s3s4/linkforms.hpp"
#include "s3s4/modcore.hpp"

namespace s3s4 {

// Torus weights (a, b) of a circle mapped into the maximal torus of Sp(2);
// (0, 0) is rejected.
class WeightEmbedding {
 public:
  WeightEmbedding(Int a, Int b);
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }

 private:
  Int a_;
  Int b_;
};

// Pullbacks of the generators of H^*(B_Sp(2)) = Z[p1, p2] along the
// embedding: p1 -> (a^2 + b^2) p1 and p2 -> (a^2 b^2) p1^2.
struct PullbackData {
  Int p1_coeff;
  Int p2_coeff;
  bool operator==(const PullbackData&) const = default;
};

// Outcome of running the two differentials d4 (multiplication by p1_coeff)
// and d8 (multiplication by p2_coeff). The 7-manifold profile requires d8
// to clear the torsion column above degree 7, i.e. gcd(p1, p2) = 1; the
// leftover gcd is reported otherwise.
struct QuotientCohomology {
  PullbackData pullback;
  Int torsion_order;                       // |H^4| = a^2 + b^2
  Int obstruction;                         // gcd(p1_coeff, p2_coeff)
  std::optional<CohomologyProfile> profile;  // present iff obstruction == 1
  bool clean() const { return obstruction == 1; }
};

PullbackData pullback(const WeightEmbedding& w);

QuotientCohomology quotient_cohomology(const WeightEmbedding& w);

// The full (1, 3) pipeline: cohomology, linking form (both orientations,
// since only |lambda| = 1 is pinned down), standardness, the
// bundle-recognition and PL verdicts, and the candidate bundles compatible
// with each admissible spin class. The spin class itself is not computed;
// candidates are reported for every admissible value.
struct BergerReport {
  WeightEmbedding weights;
  PullbackData pullback;
  Int n;  // |H^4| = 10
  CohomologyProfile profile;

  // lambda = +1 and lambda = -1, with their standardness witnesses.
  std::vector<LinkingForm> linking_forms;
  std::vector<StandardWitness> witnesses;
  bool linking_standard = false;

  Verdict theorem1;  // homotopy equivalent to a bundle
  Verdict theorem3;  // PL-homeomorphic to a bundle

  std::vector<BundleSpec> homotopy_types;

  struct BetaCandidate {
    Residue beta_coeff;
    std::vector<BundleSpec> matches;
  };
  std::vector<BetaCandidate> beta_candidates;  // one per admissible even c
  std::vector<Int> candidate_classes;  // homotopy reps hit by some candidate
  bool beta_known = false;             // the spin class is not computed
  std::string note;
};

BergerReport berger_report();

}  // namespace s3s4
