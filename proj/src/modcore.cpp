#include "s3s4/modcore.hpp"

#include <algorithm>
#include <limits>

#include <boost/multiprecision/integer.hpp>

namespace s3s4 {

namespace {

Int normalize_mod(const Int& value, const Int& modulus) {
  Int r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

}  // namespace

Residue::Residue(Int value, Int modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
  if (modulus_ < 1) throw std::invalid_argument("Residue: modulus must be >= 1");
  if (value_ < 0 || value_ >= modulus_)
    throw std::invalid_argument("Residue: value out of range [0, modulus)");
}

Residue Residue::reduce(const Int& value, const Int& modulus) {
  if (modulus < 1) throw std::invalid_argument("Residue: modulus must be >= 1");
  return Residue(normalize_mod(value, modulus), modulus);
}

bool Residue::is_unit() const { return gcd(value_, modulus_) == 1; }

Residue Residue::operator+(const Residue& other) const {
  if (modulus_ != other.modulus_)
    throw std::invalid_argument("Residue: modulus mismatch");
  return reduce(value_ + other.value_, modulus_);
}

Residue Residue::operator-(const Residue& other) const {
  if (modulus_ != other.modulus_)
    throw std::invalid_argument("Residue: modulus mismatch");
  return reduce(value_ - other.value_, modulus_);
}

Residue Residue::operator*(const Residue& other) const {
  if (modulus_ != other.modulus_)
    throw std::invalid_argument("Residue: modulus mismatch");
  return reduce(value_ * other.value_, modulus_);
}

Residue Residue::operator-() const { return reduce(-value_, modulus_); }

Residue Residue::pow(const Int& exponent) const {
  return Residue(pow_mod(value_, exponent, modulus_), modulus_);
}

Residue Residue::inverse() const {
  auto inv = mod_inverse(value_, modulus_);
  if (!inv) throw std::invalid_argument("Residue: not a unit, no inverse");
  return Residue(*inv, modulus_);
}

std::string Residue::str() const {
  return value_.str() + " mod " + modulus_.str();
}

Int PrimePower::power() const {
  Int result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= prime;
  return result;
}

Int Factorization::reconstruct() const {
  Int result = 1;
  for (const auto& pp : entries) result *= pp.power();
  return result;
}

Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

Int pow_mod(Int base, Int exponent, const Int& modulus) {
  if (modulus < 1) throw std::invalid_argument("pow_mod: modulus must be >= 1");
  if (exponent < 0) throw std::invalid_argument("pow_mod: negative exponent");
  if (modulus == 1) return 0;
  base = normalize_mod(base, modulus);
  Int result = 1;
  while (exponent > 0) {
    if (boost::multiprecision::bit_test(exponent, 0)) result = result * base % modulus;
    base = base * base % modulus;
    exponent >>= 1;
  }
  return result;
}

std::optional<Int> mod_inverse(const Int& a, const Int& n) {
  if (n < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (n == 1) return Int(0);
  // extended Euclid on (a mod n, n)
  Int r0 = normalize_mod(a, n), r1 = n;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return std::nullopt;
  return normalize_mod(s0, n);
}

std::vector<Residue> unit_group(const Int& n) {
  if (n < 1) throw std::invalid_argument("unit_group: n must be >= 1");
  std::vector<Residue> units;
  if (n == 1) {
    units.emplace_back(Int(0), Int(1));
    return units;
  }
  for (Int r = 1; r < n; ++r)
    if (gcd(r, n) == 1) units.emplace_back(r, n);
  return units;
}

int jacobi(const Int& a, const Int& n) {
  if (n < 1 || boost::multiprecision::bit_test(n, 0) == false)
    throw std::invalid_argument("jacobi: n must be odd and positive");
  Int num = normalize_mod(a, n);
  Int den = n;
  int result = 1;
  while (num != 0) {
    while (!boost::multiprecision::bit_test(num, 0)) {
      num >>= 1;
      Int r = den % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(num, den);
    if (num % 4 == 3 && den % 4 == 3) result = -result;
    num %= den;
  }
  return den == 1 ? result : 0;
}

namespace {

// Square root of a mod odd prime p; requires (a/p) = 1, 0 < a < p.
Int sqrt_mod_odd_prime(const Int& a, const Int& p) {
  if (p % 4 == 3) {
    Int candidate = pow_mod(a, (p + 1) / 4, p);
    return candidate;
  }
  // Tonelli-Shanks: p - 1 = q * 2^s with q odd
  Int q = p - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(q, 0)) {
    q >>= 1;
    ++s;
  }
  Int z = 2;
  while (jacobi(z, p) != -1) ++z;
  Int m = s;
  Int c = pow_mod(z, q, p);
  Int t = pow_mod(a, q, p);
  Int r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    Int t2 = t;
    Int i = 0;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Int b = c;
    for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

// Lift r with r^2 = a (mod p^j) to mod p^e, p odd.
Int hensel_lift_odd(Int r, const Int& a, const Int& p, unsigned e) {
  Int pe = p;
  for (unsigned j = 1; j < e; ++j) {
    Int pe_next = pe * p;
    Int diff = (r * r - a) % pe_next;
    if (diff < 0) diff += pe_next;
    Int inv = *mod_inverse(2 * r, pe_next);
    r = (r - diff * inv) % pe_next;
    if (r < 0) r += pe_next;
    pe = pe_next;
  }
  return r;
}

// All square roots of the unit a mod 2^e, ascending; empty when none exist.
std::vector<Int> sqrt_mod_two_power(const Int& a, unsigned e) {
  Int pe = Int(1) << e;
  Int ai = a % pe;
  if (e == 1) return {Int(1)};
  if (e == 2) {
    if (ai % 4 != 1) return {};
    return {Int(1), Int(3)};
  }
  if (ai % 8 != 1) return {};
  // lift 1 from mod 8 upward one bit at a time
  Int r = 1;
  for (unsigned j = 3; j < e; ++j) {
    Int mod_next = Int(1) << (j + 1);
    if ((r * r - ai) % mod_next != 0) r += Int(1) << (j - 1);
  }
  Int half = pe >> 1;
  std::vector<Int> roots = {r % pe, (pe - r) % pe, (r + half) % pe,
                            (pe - ((r + half) % pe)) % pe};
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// u64 path keeps factor() fast for table export scale.
Factorization factor_u64(unsigned long long n) {
  Factorization result;
  auto strip = [&](unsigned long long p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) result.entries.push_back({Int(p), e});
  };
  strip(2);
  strip(3);
  for (unsigned long long d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) result.entries.push_back({Int(n), 1});
  return result;
}

}  // namespace

std::optional<Residue> sqrt_mod(const Residue& a) {
  const Int& n = a.modulus();
  if (!a.is_unit())
    throw std::invalid_argument("sqrt_mod: input must be a unit mod n");
  if (n == 1) return Residue(Int(0), Int(1));

  Factorization fac = factor(n);
  std::vector<std::vector<Int>> roots_per_factor;
  std::vector<Int> moduli;
  for (const auto& pp : fac.entries) {
    Int pe = pp.power();
    Int ai = a.value() % pe;
    std::vector<Int> roots;
    if (pp.prime == 2) {
      roots = sqrt_mod_two_power(ai, pp.exponent);
    } else {
      if (jacobi(ai, pp.prime) != 1) return std::nullopt;
      Int r = sqrt_mod_odd_prime(ai % pp.prime, pp.prime);
      r = hensel_lift_odd(r, ai, pp.prime, pp.exponent);
      roots = {r, pe - r};
      std::sort(roots.begin(), roots.end());
    }
    if (roots.empty()) return std::nullopt;
    roots_per_factor.push_back(std::move(roots));
    moduli.push_back(std::move(pe));
  }

  // Deterministic output: the smallest CRT combination over all root choices.
  std::optional<Int> best;
  std::vector<size_t> pick(roots_per_factor.size(), 0);
  while (true) {
    std::vector<Residue> parts;
    parts.reserve(pick.size());
    for (size_t i = 0; i < pick.size(); ++i)
      parts.emplace_back(roots_per_factor[i][pick[i]] % moduli[i], moduli[i]);
    Int combined = crt(parts).value();
    if (!best || combined < *best) best = combined;
    size_t carry = 0;
    while (carry < pick.size()) {
      if (++pick[carry] < roots_per_factor[carry].size()) break;
      pick[carry] = 0;
      ++carry;
    }
    if (carry == pick.size()) break;
  }
  return Residue(*best, n);
}

Residue crt(const std::vector<Residue>& parts) {
  Int modulus = 1;
  Int value = 0;
  for (const Residue& part : parts) {
    const Int& m = part.modulus();
    if (gcd(modulus, m) != 1)
      throw std::invalid_argument("crt: moduli must be pairwise coprime");
    // combine value mod modulus with part
    Int combined_mod = modulus * m;
    auto inv = mod_inverse(modulus, m);
    Int t = ((part.value() - value) % m * *inv) % m;
    if (t < 0) t += m;
    value += modulus * t;
    modulus = combined_mod;
  }
  return Residue(value % modulus, modulus);
}

Factorization factor(const Int& n) {
  if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
  if (n <= std::numeric_limits<unsigned long long>::max())
    return factor_u64(n.convert_to<unsigned long long>());

  Factorization result;
  Int rem = n;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    if (e > 0) result.entries.push_back({p, e});
  };
  strip(Int(2));
  strip(Int(3));
  for (Int d = 5; d * d <= rem; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (rem > 1) result.entries.push_back({rem, 1});
  return result;
}

Int euler_phi(const Int& n) {
  Factorization fac = factor(n);
  Int phi = 1;
  for (const auto& pp : fac.entries) {
    Int p_to_em1 = 1;
    for (unsigned i = 1; i < pp.exponent; ++i) p_to_em1 *= pp.prime;
    phi *= p_to_em1 * (pp.prime - 1);
  }
  return phi;
}

}  // namespace s3s4
