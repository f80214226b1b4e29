#include "s3s4/bundles.hpp"

namespace s3s4 {

AbelianGroup AbelianGroup::cyclic(const Int& k) {
  if (k < 1) throw std::invalid_argument("AbelianGroup: order must be >= 1");
  return AbelianGroup(false, k);
}

std::string AbelianGroup::str() const {
  if (infinite_) return "Z";
  if (torsion_ == 1) return "0";
  return "Z_" + torsion_.str();
}

CohomologyProfile::CohomologyProfile()
    : groups_{AbelianGroup::trivial(), AbelianGroup::trivial(),
              AbelianGroup::trivial(), AbelianGroup::trivial(),
              AbelianGroup::trivial(), AbelianGroup::trivial(),
              AbelianGroup::trivial(), AbelianGroup::trivial()} {}

CohomologyProfile CohomologyProfile::bundle_total_space(const Int& n) {
  if (n < 1) throw std::invalid_argument("CohomologyProfile: n must be >= 1");
  CohomologyProfile profile;
  profile.set(0, AbelianGroup::integers());
  profile.set(4, AbelianGroup::cyclic(n));
  profile.set(7, AbelianGroup::integers());
  return profile;
}

const AbelianGroup& CohomologyProfile::at(int degree) const {
  if (degree < 0 || degree > 7)
    throw std::out_of_range("CohomologyProfile: degree out of range");
  return groups_[static_cast<size_t>(degree)];
}

void CohomologyProfile::set(int degree, AbelianGroup group) {
  if (degree < 0 || degree > 7)
    throw std::out_of_range("CohomologyProfile: degree out of range");
  groups_[static_cast<size_t>(degree)] = std::move(group);
}

BundleSpec::BundleSpec(Int m, Int n) : m_(std::move(m)), n_(std::move(n)) {
  if (n_ == 0)
    throw std::invalid_argument("BundleSpec: Euler number 0 makes H^4 infinite");
  if (n_ < 0) {
    n_ = -n_;
    orientation_reversed_ = true;
  }
}

Int BundleSpec::m_canonical() const {
  Int r = m_ % n_;
  if (r < 0) r += n_;
  return r;
}

CohomologyProfile cohomology(const BundleSpec& b) {
  return CohomologyProfile::bundle_total_space(b.euler());
}

LinkingForm linking_form(const BundleSpec& b) {
  return LinkingForm(b.euler(), 1);
}

Residue beta(const BundleSpec& b) {
  return Residue::reduce(2 * b.m(), b.euler());
}

bool homotopy_equivalent(const BundleSpec& a, const BundleSpec& b) {
  if (a.euler() != b.euler()) return false;
  Int g = gcd(a.euler(), Int(12));
  Int diff = (a.m() - b.m()) % g;
  Int sum = (a.m() + b.m()) % g;
  return diff == 0 || sum == 0;
}

std::vector<BundleSpec> enumerate_homotopy_types(const Int& n) {
  if (n < 1)
    throw std::invalid_argument("enumerate_homotopy_types: n must be >= 1");
  Int g = gcd(n, Int(12));
  std::vector<BundleSpec> reps;
  // negation orbits of Z_g: {0}, {1,-1}, ..., picking the smallest member
  for (Int m = 0; m <= g / 2; ++m) reps.emplace_back(m, n);
  return reps;
}

WilkensData::WilkensData(const Int& n, LinkingForm form, const Int& beta_coeff)
    : form_(std::move(form)), beta_coeff_(Residue::reduce(beta_coeff, n)) {
  if (form_.order() != n)
    throw std::invalid_argument("WilkensData: form order does not match n");
  if (!is_nondegenerate(form_))
    throw std::invalid_argument("WilkensData: degenerate linking form");
  if (n % 2 == 0 && beta_coeff_.value() % 2 != 0)
    throw std::invalid_argument(
        "WilkensData: odd spin class with even n contradicts w_4 = 0");
}

WilkensData wilkens_data(const BundleSpec& b) {
  return WilkensData(b.euler(), linking_form(b), 2 * b.m());
}

}  // namespace s3s4
