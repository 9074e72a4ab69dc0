#include "grajac/chipfiring.hpp"

namespace grajac {

Divisor fire(const DirectedMultigraph& g, const Divisor& d, int v, FireDirection dir) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  if (v < 1 || static_cast<std::size_t>(v) > n) {
    fail(Errc::VertexOutOfRange, "fire vertex out of range");
  }
  if (d.size() != n) fail(Errc::LengthMismatch, "divisor length mismatch");
  IntegerMatrix l = laplacian(g);
  Divisor out = d;
  for (std::size_t j = 0; j < n; ++j) {
    if (dir == FireDirection::Lend) {
      out[j] -= l.at(v - 1, j);
    } else {
      out[j] += l.at(v - 1, j);
    }
  }
  return out;
}

ChipContext::ChipContext(const DirectedMultigraph& g)
    : n_(static_cast<std::size_t>(g.vertex_count())),
      snf_(smith_normal_form(transpose(laplacian(g)))) {}

EquivalenceResult ChipContext::equivalent(const Divisor& d1, const Divisor& d2) const {
  if (d1.size() != n_ || d2.size() != n_) {
    fail(Errc::LengthMismatch, "divisor length mismatch");
  }
  // With D = P L^T Q, L^T x = b iff D y = P b has an integer solution y = Q^-1 x.
  std::vector<Int> c(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) c[i] += snf_.p.at(i, j) * (d1[j] - d2[j]);
  }
  std::vector<Int> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const Int& di = snf_.d.at(i, i);
    if (di == 0) {
      if (c[i] != 0) return {};
    } else {
      if (c[i] % di != 0) return {};
      y[i] = c[i] / di;
    }
  }
  EquivalenceResult r;
  r.equivalent = true;
  r.witness.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) r.witness[i] += snf_.q.at(i, j) * y[j];
  }
  return r;
}

PicardClass ChipContext::picard_class(const Divisor& d) const {
  if (d.size() != n_) fail(Errc::LengthMismatch, "divisor length mismatch");
  std::vector<Int> c(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) c[i] += snf_.p.at(i, j) * d[j];
  }
  PicardClass out;
  for (std::size_t i = 0; i < n_; ++i) {
    const Int& di = snf_.d.at(i, i);
    if (di == 0) {
      out.free_coords.push_back(c[i]);
    } else if (di > 1) {
      Int r;
      mpz_mod(r.get_mpz_t(), c[i].get_mpz_t(), di.get_mpz_t());  // in [0, di)
      out.residues.push_back(r);
      out.moduli.push_back(di);
    }
  }
  return out;
}

EquivalenceResult equivalent(const DirectedMultigraph& g, const Divisor& d1, const Divisor& d2) {
  return ChipContext(g).equivalent(d1, d2);
}

PicardClass picard_class(const DirectedMultigraph& g, const Divisor& d) {
  return ChipContext(g).picard_class(d);
}

}  // namespace grajac
