#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grajac/matrix.hpp"

namespace grajac {

/// Canonical finitely generated abelian group: free rank plus the
/// invariant-factor chain (each factor >= 2, f_i | f_{i+1}). Two values are
/// equal iff the groups are isomorphic.
struct AbelianGroup {
  long long free_rank = 0;
  std::vector<Int> invariant_factors;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of a square integer matrix viewed as a map Z^n -> Z^n.
AbelianGroup cokernel(const IntegerMatrix& m);

/// Z^rank + sum of Z_d over the divisor multiset, folded pairwise by gcd/lcm
/// into the invariant-factor chain. Each divisor must be >= 2.
AbelianGroup from_elementary_divisors(long long rank, std::vector<Int> divisors);

AbelianGroup torsion(const AbelianGroup& g);

/// Product of the invariant factors when free_rank = 0, nullopt (infinite)
/// otherwise.
std::optional<Int> order(const AbelianGroup& g);

/// "Z^2 x Z_3 x Z_12" style text; the trivial group renders as "0".
std::string render(const AbelianGroup& g);

}  // namespace grajac
