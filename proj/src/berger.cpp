#include "s3s4/berger.hpp"

#include <algorithm>

namespace s3s4 {

WeightEmbedding::WeightEmbedding(Int a, Int b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == 0 && b_ == 0)
    throw std::invalid_argument("WeightEmbedding: weights (0, 0) are degenerate");
}

PullbackData pullback(const WeightEmbedding& w) {
  Int a2 = w.a() * w.a();
  Int b2 = w.b() * w.b();
  return PullbackData{a2 + b2, a2 * b2};
}

QuotientCohomology quotient_cohomology(const WeightEmbedding& w) {
  PullbackData coeffs = pullback(w);
  QuotientCohomology result{coeffs, coeffs.p1_coeff,
                            gcd(coeffs.p1_coeff, coeffs.p2_coeff),
                            std::nullopt};
  // d4 kills degree 3 and leaves Z_{p1} towers in degrees 4, 8, ...; d8
  // multiplies those towers by p2, so they vanish above degree 7 exactly
  // when gcd(p1, p2) = 1. gcd(p1, 0) = p1, which correctly keeps the
  // n = 1 sphere case clean and flags repeated weights.
  if (result.obstruction == 1)
    result.profile = CohomologyProfile::bundle_total_space(coeffs.p1_coeff);
  return result;
}

BergerReport berger_report() {
  WeightEmbedding weights(1, 3);
  QuotientCohomology cohom = quotient_cohomology(weights);
  const Int n = cohom.torsion_order;  // 10

  BergerReport report{.weights = weights,
                      .pullback = cohom.pullback,
                      .n = n,
                      .profile = *cohom.profile};

  // Only lambda = +-1 is determined; report both orientation choices.
  report.linking_forms = {LinkingForm(n, 1), LinkingForm(n, -1)};
  report.linking_standard = true;
  for (const LinkingForm& form : report.linking_forms) {
    auto witness = is_standard(form);
    if (!witness) {
      report.linking_standard = false;
      continue;
    }
    report.witnesses.push_back(*witness);
  }

  // A homogeneous space is a manifold, so the secondary operation vanishes.
  ComplexData berger_complex(n, report.linking_forms.front(), std::nullopt,
                             /*is_manifold=*/true);
  report.theorem1 = theorem1_decide(berger_complex);

  report.homotopy_types = enumerate_homotopy_types(n);

  // The spin class is untouched above; w_4 = 0 only forces it even. Run the
  // Wilkens match for every admissible coefficient and keep each list.
  std::vector<Int> candidate_classes;
  for (Int c = 0; c < n; c += 2) {
    WilkensData data(n, report.linking_forms.front(), c);
    BergerReport::BetaCandidate candidate{Residue(c, n), wilkens_match(data)};
    for (const BundleSpec& match : candidate.matches) {
      Int rep = match.m_canonical() % gcd(n, Int(12));
      if (rep > gcd(n, Int(12)) / 2) rep = gcd(n, Int(12)) - rep;
      candidate_classes.push_back(rep);
    }
    report.beta_candidates.push_back(std::move(candidate));
  }
  std::sort(candidate_classes.begin(), candidate_classes.end());
  candidate_classes.erase(
      std::unique(candidate_classes.begin(), candidate_classes.end()),
      candidate_classes.end());
  report.candidate_classes = std::move(candidate_classes);

  // n/2 = 5 is odd, so the PL verdict is independent of which admissible
  // spin class the space carries; confirm on every candidate.
  Verdict theorem3;
  bool first = true;
  for (const auto& candidate : report.beta_candidates) {
    WilkensData data(n, report.linking_forms.front(),
                     candidate.beta_coeff.value());
    Verdict verdict = theorem3_decide(data);
    if (first) {
      theorem3 = verdict;
      first = false;
    }
    if (verdict.status != Status::Yes)
      throw std::logic_error("berger_report: PL verdict must not depend on the spin class");
    for (const BundleSpec& match : verdict.bundles)
      if (std::find(theorem3.bundles.begin(), theorem3.bundles.end(), match) ==
          theorem3.bundles.end())
        theorem3.bundles.push_back(match);
  }
  std::sort(theorem3.bundles.begin(), theorem3.bundles.end(),
            [](const BundleSpec& x, const BundleSpec& y) { return x.m() < y.m(); });
  report.theorem3 = std::move(theorem3);

  report.beta_known = false;
  report.note =
      "spin class not computed; bundle candidates are listed per admissible "
      "value";
  return report;
}

}  // namespace s3s4
