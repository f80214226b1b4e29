#include "s3s4/decide.hpp"

#include <algorithm>

namespace s3s4 {

namespace {

const char* kReasonConditionsHold = "conditions-hold";
const char* kReasonFormNotStandard = "form-not-standard";
const char* kReasonThetaNontrivial = "theta-nontrivial";
const char* kReasonThetaUnknown = "theta-unknown";

void attach_yes_witnesses(Verdict& verdict, const ComplexData& x,
                          const StandardWitness& witness) {
  verdict.standard_witness = witness;
  verdict.hopf = hopf_witness(x.order(), x.form().lambda());
  verdict.bundles = enumerate_homotopy_types(x.order());
}

}  // namespace

ComplexData::ComplexData(const Int& n, LinkingForm form,
                         std::optional<bool> theta_trivial, bool is_manifold)
    : form_(std::move(form)),
      theta_trivial_(theta_trivial),
      is_manifold_(is_manifold) {
  if (form_.order() != n)
    throw std::invalid_argument("ComplexData: form order does not match n");
  if (!is_nondegenerate(form_))
    throw std::invalid_argument("ComplexData: degenerate linking form");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Yes: return "yes";
    case Status::No: return "no";
    case Status::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Verdict theorem1_decide(const ComplexData& x) {
  Verdict verdict;
  auto witness = is_standard(x.form());
  if (!witness) {
    verdict.status = Status::No;
    verdict.reason = kReasonFormNotStandard;
    return verdict;
  }
  std::optional<bool> theta = x.effective_theta();
  if (theta.has_value() && !*theta) {
    verdict.status = Status::No;
    verdict.reason = kReasonThetaNontrivial;
    return verdict;
  }
  if (!theta.has_value()) {
    verdict.status = Status::Indeterminate;
    verdict.reason = kReasonThetaUnknown;
    verdict.standard_witness = witness;
    return verdict;
  }
  verdict.status = Status::Yes;
  verdict.reason = kReasonConditionsHold;
  attach_yes_witnesses(verdict, x, *witness);
  return verdict;
}

Verdict theorem4_decide(const ComplexData& x) {
  Factorization fac = factor(x.order());
  if (!fac.is_prime_power()) {
    Verdict verdict = theorem1_decide(x);
    verdict.notes.push_back("n is not a prime power; general criterion applied");
    return verdict;
  }
  const Int& p = fac.entries.front().prime;
  if (p % 4 != 3) {
    Verdict verdict = theorem1_decide(x);
    verdict.notes.push_back(p == 2
                                ? "p = 2; general criterion applied"
                                : "p = 1 (mod 4); general criterion applied");
    return verdict;
  }
  // p = 3 (mod 4): -1 is a non-square mod p^k, so the unit group splits as
  // squares and minus-squares and every nondegenerate form is standard.
  auto witness = is_standard(x.form());
  if (!witness)
    throw std::logic_error("theorem4_decide: standardness must hold for p = 3 (mod 4)");
  Verdict verdict;
  std::optional<bool> theta = x.effective_theta();
  if (theta.has_value() && !*theta) {
    verdict.status = Status::No;
    verdict.reason = kReasonThetaNontrivial;
    return verdict;
  }
  if (!theta.has_value()) {
    verdict.status = Status::Indeterminate;
    verdict.reason = kReasonThetaUnknown;
    verdict.standard_witness = witness;
    return verdict;
  }
  verdict.status = Status::Yes;
  verdict.reason = "prime-power-3-mod-4";
  attach_yes_witnesses(verdict, x, *witness);
  return verdict;
}

std::vector<BundleSpec> wilkens_match(const WilkensData& d) {
  const Int& n = d.order();
  const Residue& lambda = d.form().lambda();
  const Residue& c = d.beta_coeff();

  std::vector<Int> matches;
  for (const Residue& u : unit_group(n)) {
    Residue scaled = u * u * lambda;
    bool standardizes = scaled == Residue::reduce(1, n) ||
                        scaled == Residue::reduce(-1, n);
    if (!standardizes) continue;
    for (int beta_sign : {+1, -1}) {
      // solve 2m = beta_sign * u * c (mod n) for m in [0, n)
      Residue target = beta_sign == +1 ? u * c : -(u * c);
      if (n % 2 != 0) {
        Residue m = target * Residue::reduce(2, n).inverse();
        matches.push_back(m.value());
      } else if (target.value() % 2 == 0) {
        // two halves mod even n
        Int half = target.value() / 2;
        matches.push_back(half);
        matches.push_back(half + n / 2);
      }
    }
  }
  std::sort(matches.begin(), matches.end());
  matches.erase(std::unique(matches.begin(), matches.end()), matches.end());

  std::vector<BundleSpec> result;
  result.reserve(matches.size());
  for (const Int& m : matches) result.emplace_back(m, n);
  return result;
}

Verdict theorem3_decide(const WilkensData& d) {
  Verdict verdict;
  verdict.bundles = wilkens_match(d);
  if (verdict.bundles.empty()) {
    verdict.status = Status::No;
    verdict.reason = kReasonFormNotStandard;
    return verdict;
  }
  const Int& n = d.order();
  if (n % 2 == 1) {
    verdict.status = Status::Yes;
    verdict.reason = "n-odd-unique";
    verdict.notes.push_back(
        "odd order: the invariants classify uniquely, so the manifold is "
        "PL-homeomorphic to a matched bundle");
  } else if (n % 4 == 2) {
    verdict.status = Status::Yes;
    verdict.reason = "n-twice-odd-both-bundle-types";
    verdict.notes.push_back(
        "n = 2 (mod 4): the two PL types sharing the invariants are both "
        "realized by bundles");
  } else {
    verdict.status = Status::Indeterminate;
    verdict.reason = "n-0-mod-4-undecided";
    verdict.notes.push_back(
        "n = 0 (mod 4): the invariants leave two PL candidates and this "
        "procedure does not separate them");
  }
  return verdict;
}

std::optional<HopfWitness> hopf_witness(const Int& n, const Residue& lambda) {
  if (lambda.modulus() != n)
    throw std::invalid_argument("hopf_witness: lambda has the wrong modulus");
  if (!lambda.is_unit())
    throw std::invalid_argument("hopf_witness: lambda must be a unit");
  auto witness = is_standard(LinkingForm(n, lambda.value()));
  if (!witness) return std::nullopt;

  // m = tau^{-1}, representative in [1, n]
  Int m = n == 1 ? Int(1) : witness->tau.inverse().value();
  const Int& lambda_lift = lambda.value();
  Int sign_n = witness->sign > 0 ? n : -n;
  Int k = (sign_n - m * m * lambda_lift * n) / (n * n);
  HopfWitness result{m, k, witness->sign};
  if (result.m * result.m * lambda_lift * n + result.k * n * n != sign_n)
    throw std::logic_error("hopf_witness: exact identity violated");
  return result;
}

}  // namespace s3s4
