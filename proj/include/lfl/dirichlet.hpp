#pragma once

// Dirichlet characters as explicit value tables, Gauss sums, and L(s, chi).

#include <cstdint>
#include <utility>
#include <vector>

#include "lfl/core.hpp"

namespace lfl {

/// A character of (Z/NZ)^*, extended by zero to residues sharing a factor
/// with N. Values are stored as exponents k with chi(n) = exp(2 pi i k / order),
/// so multiplicativity holds exactly in integer arithmetic.
class DirichletCharacter {
 public:
  /// Build from an exponent table indexed by residue (-1 marks non-units).
  DirichletCharacter(std::uint32_t modulus, std::uint32_t order, std::vector<int> exponents);

  std::uint32_t modulus() const { return modulus_; }
  /// Group exponent the stored exponents are taken against.
  std::uint32_t order() const { return order_; }
  std::uint32_t conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus_; }
  bool is_even() const;
  bool is_principal() const;

  /// Exponent of chi(n), or -1 when gcd(n, N) > 1. Accepts any integer n.
  int exponent(std::int64_t n) const;
  ComplexPoint operator()(std::int64_t n) const;

  DirichletCharacter conjugate() const;
  /// The character mod `new_modulus` (a multiple of N) induced from this one.
  DirichletCharacter induce(std::uint32_t new_modulus) const;

  bool operator==(const DirichletCharacter& other) const;

 private:
  std::uint32_t modulus_;
  std::uint32_t order_;
  std::vector<int> exponents_;
  std::uint32_t conductor_ = 0;
};

/// All phi(N) characters mod N, built from the prime-power decomposition of
/// (Z/NZ)^* and one generator per cyclic factor. The principal character is
/// first; the rest follow in lexicographic order of generator exponents.
std::vector<DirichletCharacter> characters_mod(std::uint32_t N);

/// (primitive, conductor).
std::pair<bool, std::uint32_t> is_primitive(const DirichletCharacter& chi);

/// g(chi) = sum_{n mod r} chi(n) e^{2 pi i n / r}.
ComplexPoint gauss_sum(const DirichletCharacter& chi);

/// L(s, chi) = sum chi(n) n^{-s}: whole periods summed up to N_terms, then
/// the remaining periods by Euler-Maclaurin per residue class. Needs Re s > 0
/// (and s != 1 for principal characters). The trivial character mod 1 defers
/// to zeta. Throws BudgetExceeded if the remainder estimate exceeds abs_tol.
ComplexPoint dirichlet_l(ComplexPoint s, const DirichletCharacter& chi, std::uint32_t N_terms,
                         double abs_tol = 1e-10);

}  // namespace lfl
