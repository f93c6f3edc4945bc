#include "lfl/dirichlet.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lfl/primes.hpp"
#include "lfl/zeta.hpp"

namespace lfl {
namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// A cyclic factor of (Z/p^e)^*: generator residue mod p^e and its order.
struct CyclicFactor {
  std::uint64_t generator;
  std::uint32_t order;
};

// One prime-power component: its cyclic factors and, for every residue mod
// q = p^e, the discrete logs with respect to those factors.
struct Component {
  std::uint64_t q = 1;
  std::vector<CyclicFactor> factors;
  std::vector<std::vector<std::uint32_t>> dlog;  // indexed by residue mod q
};

std::uint64_t primitive_root_odd(std::uint64_t p, int e) {
  const auto phi_factors = factorize(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool primitive = true;
    for (const auto& [q, _] : phi_factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    // A primitive root mod p lifts to p^e unless g^{p-1} = 1 mod p^2.
    if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) return g + p;
    return g;
  }
}

Component make_component(std::uint64_t p, int e) {
  Component c;
  c.q = ipow(p, e);
  c.dlog.assign(c.q, {});
  if (p != 2) {
    const std::uint64_t g = primitive_root_odd(p, e);
    const auto order = static_cast<std::uint32_t>(c.q / p * (p - 1));
    c.factors.push_back({g, order});
    std::uint64_t x = 1;
    for (std::uint32_t a = 0; a < order; ++a) {
      c.dlog[x] = {a};
      x = x * g % c.q;
    }
  } else if (e == 1) {
    c.dlog[1] = {};
  } else if (e == 2) {
    c.factors.push_back({3, 2});
    c.dlog[1] = {0};
    c.dlog[3] = {1};
  } else {
    // (Z/2^e)^* = <-1> x <5>
    const auto order5 = static_cast<std::uint32_t>(c.q / 4);
    c.factors.push_back({c.q - 1, 2});
    c.factors.push_back({5, order5});
    std::uint64_t x = 1;
    for (std::uint32_t b = 0; b < order5; ++b) {
      c.dlog[x] = {0, b};
      c.dlog[c.q - x] = {1, b};
      x = x * 5 % c.q;
    }
  }
  return c;
}

ComplexPoint unit_root(std::int64_t k, std::uint32_t order) {
  if (k == 0) return {1.0, 0.0};
  const double turn = static_cast<double>(k) / order;
  // Exact values at quarter turns keep real characters real.
  if (order % 4 == 0) {
    const std::int64_t q = order / 4;
    if (k % q == 0) {
      switch ((k / q) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
      }
    }
  }
  if (order % 2 == 0 && 2 * k == static_cast<std::int64_t>(order)) return {-1.0, 0.0};
  return std::polar(1.0, kTwoPi * turn);
}

// (e^{u} - 1)/u, stable for small u.
ComplexPoint expm1_over(ComplexPoint u) {
  if (std::abs(u) < 1e-5) return 1.0 + u * (0.5 + u / 6.0);
  return (std::exp(u) - 1.0) / u;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint32_t modulus, std::uint32_t order,
                                       std::vector<int> exponents)
    : modulus_(modulus), order_(order), exponents_(std::move(exponents)) {
  if (modulus_ == 0 || order_ == 0 || exponents_.size() != modulus_) {
    throw DomainError("DirichletCharacter: malformed table");
  }
  for (std::uint32_t r = 0; r < modulus_; ++r) {
    const bool unit = std::gcd(r, modulus_) == 1;
    if (unit != (exponents_[r] >= 0)) {
      throw DomainError("DirichletCharacter: table must vanish exactly off the units");
    }
  }
  if (exponents_[1 % modulus_] != 0) throw DomainError("DirichletCharacter: chi(1) must be 1");
  // Smallest d | N such that chi is trivial on units congruent to 1 mod d.
  for (std::uint32_t d = 1; d <= modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool trivial = true;
    for (std::uint32_t r = 1 % modulus_; r < modulus_ + (modulus_ == 1); r += d) {
      const std::uint32_t rr = r % modulus_;
      if (exponents_[rr] > 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) {
      conductor_ = d;
      break;
    }
  }
}

int DirichletCharacter::exponent(std::int64_t n) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  return exponents_[static_cast<std::size_t>(((n % m) + m) % m)];
}

ComplexPoint DirichletCharacter::operator()(std::int64_t n) const {
  const int k = exponent(n);
  if (k < 0) return {0.0, 0.0};
  return unit_root(k, order_);
}

bool DirichletCharacter::is_even() const { return exponent(-1) == 0; }

bool DirichletCharacter::is_principal() const {
  for (const int k : exponents_) {
    if (k > 0) return false;
  }
  return true;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<int> conj(exponents_.size());
  for (std::size_t r = 0; r < exponents_.size(); ++r) {
    const int k = exponents_[r];
    conj[r] = k < 0 ? -1 : static_cast<int>((order_ - static_cast<std::uint32_t>(k)) % order_);
  }
  return {modulus_, order_, std::move(conj)};
}

DirichletCharacter DirichletCharacter::induce(std::uint32_t new_modulus) const {
  if (new_modulus == 0 || new_modulus % modulus_ != 0) {
    throw DomainError("induce: new modulus must be a multiple of the modulus");
  }
  std::vector<int> table(new_modulus);
  for (std::uint32_t r = 0; r < new_modulus; ++r) {
    table[r] = std::gcd(r, new_modulus) == 1 ? exponent(r) : -1;
  }
  return {new_modulus, order_, std::move(table)};
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
  if (modulus_ != other.modulus_) return false;
  for (std::uint32_t r = 0; r < modulus_; ++r) {
    const int a = exponents_[r];
    const int b = other.exponents_[r];
    if ((a < 0) != (b < 0)) return false;
    if (a >= 0 && static_cast<std::uint64_t>(a) * other.order_ != static_cast<std::uint64_t>(b) * order_) {
      return false;
    }
  }
  return true;
}

std::vector<DirichletCharacter> characters_mod(std::uint32_t N) {
  if (N == 0) throw DomainError("characters_mod: N must be positive");
  if (N > 10'000) throw DomainError("characters_mod: value tables are limited to N <= 10^4");
  std::vector<Component> components;
  for (const auto& [p, e] : factorize(N)) components.push_back(make_component(p, e));

  std::vector<std::uint32_t> orders;
  for (const auto& c : components) {
    for (const auto& f : c.factors) orders.push_back(f.order);
  }
  std::uint32_t L = 1;
  for (const auto o : orders) L = std::lcm(L, o);

  // Discrete-log vector of every unit mod N.
  std::vector<std::vector<std::uint32_t>> logs(N);
  for (std::uint32_t r = 0; r < N; ++r) {
    if (std::gcd(r, N) != 1) continue;
    for (const auto& c : components) {
      const auto& d = c.dlog[r % c.q];
      logs[r].insert(logs[r].end(), d.begin(), d.end());
    }
  }

  std::vector<DirichletCharacter> out;
  std::vector<std::uint32_t> j(orders.size(), 0);
  while (true) {
    std::vector<int> table(N, -1);
    for (std::uint32_t r = 0; r < N; ++r) {
      if (std::gcd(r, N) != 1) continue;
      std::uint64_t k = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        k += static_cast<std::uint64_t>(j[i]) * logs[r][i] * (L / orders[i]);
      }
      table[r] = static_cast<int>(k % L);
    }
    out.emplace_back(N, L, std::move(table));
    // Mixed-radix increment, last index fastest.
    std::size_t i = orders.size();
    while (i > 0) {
      --i;
      if (++j[i] < orders[i]) break;
      j[i] = 0;
      if (i == 0) return out;
    }
    if (orders.empty()) return out;
  }
}

std::pair<bool, std::uint32_t> is_primitive(const DirichletCharacter& chi) {
  return {chi.is_primitive(), chi.conductor()};
}

ComplexPoint gauss_sum(const DirichletCharacter& chi) {
  const std::uint32_t r = chi.modulus();
  ComplexPoint sum{0.0, 0.0};
  for (std::uint32_t n = 0; n < r; ++n) {
    const int k = chi.exponent(n);
    if (k < 0) continue;
    // Combine both angles into one rotation: k/order + n/r turns.
    const double turn = std::fmod(static_cast<double>(k) / chi.order() + static_cast<double>(n) / r, 1.0);
    sum += std::polar(1.0, kTwoPi * turn);
  }
  return sum;
}

ComplexPoint dirichlet_l(ComplexPoint s, const DirichletCharacter& chi, std::uint32_t N_terms,
                         double abs_tol) {
  require_finite(s, "dirichlet_l");
  const std::uint32_t N = chi.modulus();
  if (N == 1) return zeta(s);
  if (!(s.real() > 0.0)) throw DomainError("dirichlet_l: requires Re s > 0");
  const bool principal = chi.is_principal();
  if (principal && s == ComplexPoint(1.0, 0.0)) throw PoleError("dirichlet_l: pole at s = 1");

  // Whole periods up to K.
  const std::uint64_t periods = std::max<std::uint64_t>(1, (N_terms + N - 1) / N);
  const std::uint64_t K = periods * N;
  ComplexPoint partial{0.0, 0.0};
  for (std::uint64_t n = K; n >= 1; --n) {
    const int k = chi.exponent(static_cast<std::int64_t>(n));
    if (k < 0) continue;
    partial += chi(static_cast<std::int64_t>(n)) * std::exp(-s * std::log(static_cast<double>(n)));
  }

  // sum_{n>K} chi(n) n^{-s} = N^{-s} sum_a chi(a) sum_{j>=0} (w_a + j)^{-s},
  // w_a = (K + a)/N. The leading w^{1-s}/(s-1) terms are written as
  // (w^{1-s} - 1)/(s-1) + 1/(s-1); the constant cancels for non-principal chi.
  ComplexPoint tail{0.0, 0.0};
  double err = 0.0;
  ComplexPoint chi_sum{0.0, 0.0};
  for (std::uint32_t a = 1; a <= N; ++a) {
    const ComplexPoint c = chi(a);
    if (c == ComplexPoint(0.0, 0.0)) continue;
    const double w = static_cast<double>(K + a) / N;
    double e = 0.0;
    const ComplexPoint u = (1.0 - s) * std::log(w);
    const ComplexPoint lead = -std::log(w) * expm1_over(u);  // (w^{1-s} - 1)/(s-1)
    tail += c * (lead + detail::euler_maclaurin_tail(s, w, &e));
    chi_sum += c;
    err += e;
  }
  if (principal) tail += chi_sum / (s - 1.0);
  const ComplexPoint scale = std::exp(-s * std::log(static_cast<double>(N)));
  err *= std::abs(scale);
  if (err > abs_tol) throw BudgetExceeded("dirichlet_l: N_terms too small for tolerance", err);
  return partial + scale * tail;
}

}  // namespace lfl
