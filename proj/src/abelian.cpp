#include "grajac/abelian.hpp"

#include <algorithm>

namespace grajac {

AbelianGroup cokernel(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::NotSquare, "cokernel needs a square matrix");
  SnfResult s = smith_normal_form(m);
  AbelianGroup g;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int& d = s.d.at(i, i);
    if (d == 0) {
      ++g.free_rank;
    } else if (d > 1) {
      g.invariant_factors.push_back(d);
    }
  }
  return g;
}

AbelianGroup from_elementary_divisors(long long rank, std::vector<Int> divisors) {
  for (const Int& d : divisors) {
    if (d < 2) fail(Errc::DivisorBelowTwo, "elementary divisor below 2");
  }
  // Pairwise gcd/lcm folding until the divisibility chain holds.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(divisors.begin(), divisors.end());
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      for (std::size_t j = i + 1; j < divisors.size(); ++j) {
        if (divisors[j] % divisors[i] == 0) continue;
        Int g, l;
        mpz_gcd(g.get_mpz_t(), divisors[i].get_mpz_t(), divisors[j].get_mpz_t());
        l = divisors[i] / g * divisors[j];
        divisors[i] = g;
        divisors[j] = l;
        changed = true;
      }
    }
  }
  std::erase(divisors, Int(1));
  std::sort(divisors.begin(), divisors.end());
  return {rank, std::move(divisors)};
}

AbelianGroup torsion(const AbelianGroup& g) { return {0, g.invariant_factors}; }

std::optional<Int> order(const AbelianGroup& g) {
  if (g.free_rank > 0) return std::nullopt;
  Int n = 1;
  for (const Int& f : g.invariant_factors) n *= f;
  return n;
}

std::string render(const AbelianGroup& g) {
  if (g.free_rank == 0 && g.invariant_factors.empty()) return "0";
  std::string out;
  if (g.free_rank == 1) {
    out = "Z";
  } else if (g.free_rank > 1) {
    out = "Z^" + std::to_string(g.free_rank);
  }
  for (const Int& f : g.invariant_factors) {
    if (!out.empty()) out += " x ";
    out += "Z_" + f.get_str();
  }
  return out;
}

}  // namespace grajac
