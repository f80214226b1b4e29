#pragma once

// Exact integer and modular arithmetic: unit groups, factorization, residue
// symbols, modular square roots, CRT. Everything downstream reduces its
// residue questions to the functions in this header.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace s3s4 {

using Int = boost::multiprecision::cpp_int;

// An integer class mod n, kept reduced to [0, n). modulus 1 is the trivial
// ring (single class 0).
class Residue {
 public:
  Residue() : value_(0), modulus_(1) {}

  // Requires 0 <= value < modulus. Use reduce() for arbitrary integers.
  Residue(Int value, Int modulus);

  // Reduces an arbitrary integer (negative allowed) into [0, n).
  static Residue reduce(const Int& value, const Int& modulus);

  const Int& value() const { return value_; }
  const Int& modulus() const { return modulus_; }

  bool is_unit() const;
  bool is_zero() const { return value_ == 0; }

  Residue operator+(const Residue& other) const;
  Residue operator-(const Residue& other) const;
  Residue operator*(const Residue& other) const;
  Residue operator-() const;
  bool operator==(const Residue& other) const = default;

  Residue pow(const Int& exponent) const;

  // Multiplicative inverse; requires is_unit().
  Residue inverse() const;

  std::string str() const;

 private:
  Int value_;
  Int modulus_;
};

struct PrimePower {
  Int prime;
  unsigned exponent = 0;
  Int power() const;  // prime^exponent
  bool operator==(const PrimePower&) const = default;
};

// Complete prime factorization, primes strictly increasing. factor(1) is the
// empty product.
struct Factorization {
  std::vector<PrimePower> entries;
  Int reconstruct() const;
  bool is_prime_power() const { return entries.size() == 1; }
  bool operator==(const Factorization&) const = default;
};

// --- elementary helpers -----------------------------------------------------

Int gcd(const Int& a, const Int& b);

// base^exponent mod modulus; modulus >= 1, exponent >= 0.
Int pow_mod(Int base, Int exponent, const Int& modulus);

// Inverse of a mod n, or nullopt when gcd(a, n) != 1.
std::optional<Int> mod_inverse(const Int& a, const Int& n);

// --- module operations -------------------------------------------------------

// All residues coprime to n, ascending. unit_group(1) = {0} (trivial group).
std::vector<Residue> unit_group(const Int& n);

// Jacobi symbol (a/n) for odd n >= 1; equals the Legendre symbol for prime n.
// Throws on even or nonpositive n.
int jacobi(const Int& a, const Int& n);

// Smallest r with r^2 = a (mod n), or nullopt when no unit square root
// exists. Only unit inputs are accepted (gcd(a, n) must be 1). Factors n,
// solves per prime power (Tonelli-Shanks + Hensel for odd p, 2-adic case
// analysis for p = 2), recombines with CRT.
std::optional<Residue> sqrt_mod(const Residue& a);

// Simultaneous congruence solution for pairwise coprime moduli; result is
// the unique class mod the product. Empty input gives 0 mod 1.
Residue crt(const std::vector<Residue>& parts);

// Trial division up to sqrt(n); the cofactor left standing is certified
// prime by exhaustion of smaller divisors. n >= 1.
Factorization factor(const Int& n);

// Euler phi via the factorization.
Int euler_phi(const Int& n);

}  // namespace s3s4
