#pragma once

// Inverse-semigroup structure of IP_n: idempotents, the natural partial
// order, Green's relations via the rho/lambda/rank characterisations, and
// the trace and imprint partial products.

#include <optional>

#include "dualsym/partition.hpp"

namespace dualsym {

/// Structural test: every block is E ∪ E' for the same index set E.
/// Equivalent to a*a == a inside IP_n.
inline bool is_idempotent(const Partition& a) {
  const int n = a.degree();
  for (int i = 0; i < n; ++i) {
    if (a.labels()[static_cast<std::size_t>(i)] !=
        a.labels()[static_cast<std::size_t>(n + i)])
      return false;
  }
  return true;
}

/// Meet of two idempotents: e*f, which equals f*e and the join of the two
/// underlying set partitions.
inline Partition idempotent_meet(const Partition& e, const Partition& f) {
  if (!is_idempotent(e) || !is_idempotent(f))
    throw std::invalid_argument("idempotent_meet: inputs must be idempotent");
  return e * f;
}

/// Natural order: a <= b iff the block relation of a contains that of b
/// (every block of b lies inside a block of a).
inline bool natural_leq(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("natural_leq: degree mismatch");
  std::vector<int> image(static_cast<std::size_t>(b.block_count()), -1);
  for (std::size_t slot = 0; slot < b.labels().size(); ++slot) {
    int lb = b.labels()[slot];
    int la = a.labels()[slot];
    if (image[static_cast<std::size_t>(lb)] == -1)
      image[static_cast<std::size_t>(lb)] = la;
    else if (image[static_cast<std::size_t>(lb)] != la)
      return false;
  }
  return true;
}

inline bool green_R(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("green_R: degree mismatch");
  return a.rho() == b.rho();
}

inline bool green_L(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("green_L: degree mismatch");
  return a.lambda() == b.lambda();
}

inline bool green_H(const Partition& a, const Partition& b) {
  return green_R(a, b) && green_L(a, b);
}

inline bool green_D(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("green_D: degree mismatch");
  return rank(a) == rank(b);
}

inline bool green_J(const Partition& a, const Partition& b) {
  return green_D(a, b);
}

/// Trace product: defined iff lambda(a) == rho(b); then a*b lies in
/// R_a ∩ L_b.  Undefined pairs yield an empty optional.
inline std::optional<Partition> trace_product(const Partition& a,
                                              const Partition& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("trace_product: degree mismatch");
  if (a.lambda() != b.rho()) return std::nullopt;
  return a * b;
}

/// Imprint product: e must be idempotent; defined iff rho(a) refines rho(e),
/// in which case the value is e*a.
inline std::optional<Partition> imprint_product(const Partition& e,
                                                const Partition& a) {
  if (e.degree() != a.degree())
    throw DegreeMismatch("imprint_product: degree mismatch");
  if (!is_idempotent(e))
    throw std::invalid_argument("imprint_product: first argument must be idempotent");
  if (!a.rho().refines(e.rho())) return std::nullopt;
  return e * a;
}

}  // namespace dualsym
