#pragma once

#include <vector>

#include "grajac/analysis.hpp"
#include "grajac/graph.hpp"
#include "grajac/matrix.hpp"

namespace grajac {

/// Integer chip configuration indexed by vertices (1-based graph vertices map
/// to 0-based entries).
using Divisor = std::vector<Int>;

enum class FireDirection { Lend, Borrow };

/// Lend subtracts row v of L_G (= column v of L_G^T) from d; Borrow adds it.
Divisor fire(const DirectedMultigraph& g, const Divisor& d, int v, FireDirection dir);

struct EquivalenceResult {
  bool equivalent = false;
  std::vector<Int> witness;  // firing multiplicities x with L^T x = d1 - d2
};

/// Lattice membership of d1 - d2 in the column span of L_G^T, decided via the
/// Smith normal form.
EquivalenceResult equivalent(const DirectedMultigraph& g, const Divisor& d1, const Divisor& d2);

/// Canonical representative of a divisor in coker(L^T): integer coordinates on
/// the free part plus residues modulo the invariant factors. Labels are equal
/// iff the divisors are equivalent.
struct PicardClass {
  std::vector<Int> free_coords;
  std::vector<Int> residues;
  std::vector<Int> moduli;

  friend bool operator==(const PicardClass&, const PicardClass&) = default;
};

PicardClass picard_class(const DirectedMultigraph& g, const Divisor& d);

/// Precomputed SNF of L_G^T for repeated chip-firing queries on one graph.
class ChipContext {
 public:
  explicit ChipContext(const DirectedMultigraph& g);
  EquivalenceResult equivalent(const Divisor& d1, const Divisor& d2) const;
  PicardClass picard_class(const Divisor& d) const;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  SnfResult snf_;
};

}  // namespace grajac
