#pragma once

// Biequivalences on {1..n}: full bifunctional binary relations, the elements
// of the dual symmetric inverse monoid.  IP_n maps onto them by
// x related-to y iff x and y' share a block.

#include <vector>

#include "dualsym/partition.hpp"

namespace dualsym {

class Biequivalence {
 public:
  Biequivalence() = default;

  explicit Biequivalence(int degree)
      : degree_(degree),
        rel_(static_cast<std::size_t>(degree) * static_cast<std::size_t>(degree),
             0) {
    if (degree < 1)
      throw std::invalid_argument("Biequivalence: degree must be >= 1");
  }

  static Biequivalence diagonal(int degree) {
    Biequivalence b(degree);
    for (int x = 1; x <= degree; ++x) b.set(x, x, true);
    return b;
  }

  int degree() const { return degree_; }

  bool related(int x, int y) const {
    return rel_[idx(x, y)] != 0;
  }
  void set(int x, int y, bool v) { rel_[idx(x, y)] = v ? 1 : 0; }

  Biequivalence inverse() const {
    Biequivalence out(degree_);
    for (int x = 1; x <= degree_; ++x)
      for (int y = 1; y <= degree_; ++y)
        if (related(x, y)) out.set(y, x, true);
    return out;
  }

  /// Relational composition, left to right: (R∘S)(x,z) iff R(x,y) and S(y,z)
  /// for some y.
  static Biequivalence compose(const Biequivalence& r, const Biequivalence& s) {
    if (r.degree_ != s.degree_)
      throw DegreeMismatch("Biequivalence::compose: degree mismatch");
    Biequivalence out(r.degree_);
    for (int x = 1; x <= r.degree_; ++x)
      for (int y = 1; y <= r.degree_; ++y) {
        if (!r.related(x, y)) continue;
        for (int z = 1; z <= r.degree_; ++z)
          if (s.related(y, z)) out.set(x, z, true);
      }
    return out;
  }

  bool is_full() const {
    for (int x = 1; x <= degree_; ++x) {
      bool row = false, col = false;
      for (int y = 1; y <= degree_; ++y) {
        row = row || related(x, y);
        col = col || related(y, x);
      }
      if (!row || !col) return false;
    }
    return true;
  }

  bool is_bifunctional() const {
    return compose(compose(*this, inverse()), *this) == *this;
  }

  bool valid() const { return is_full() && is_bifunctional(); }

  /// The equivalence "shares an image point": this ∘ this⁻¹.
  Equivalence kernel() const {
    detail::UnionFind uf(degree_);
    for (int y = 1; y <= degree_; ++y) {
      int first = -1;
      for (int x = 1; x <= degree_; ++x) {
        if (!related(x, y)) continue;
        if (first == -1)
          first = x;
        else
          uf.unite(first - 1, x - 1);
      }
    }
    std::vector<int> labels(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i)
      labels[static_cast<std::size_t>(i)] = uf.find(i);
    return Equivalence::from_labels(degree_, std::move(labels));
  }

  /// The equivalence "shares a preimage point": this⁻¹ ∘ this.
  Equivalence cokernel() const { return inverse().kernel(); }

  friend bool operator==(const Biequivalence& a, const Biequivalence& b) {
    return a.degree_ == b.degree_ && a.rel_ == b.rel_;
  }
  friend bool operator!=(const Biequivalence& a, const Biequivalence& b) {
    return !(a == b);
  }
  friend bool operator<(const Biequivalence& a, const Biequivalence& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.rel_ < b.rel_;
  }

 private:
  std::size_t idx(int x, int y) const {
    if (x < 1 || x > degree_ || y < 1 || y > degree_)
      throw std::invalid_argument("Biequivalence: index out of range");
    return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(degree_) +
           static_cast<std::size_t>(y - 1);
  }

  int degree_ = 0;
  std::vector<char> rel_;
};

inline Biequivalence to_biequivalence(const Partition& a) {
  if (!a.is_ip())
    throw std::invalid_argument("to_biequivalence: element must lie in IP_n");
  Biequivalence b(a.degree());
  for (int x = 1; x <= a.degree(); ++x)
    for (int y = 1; y <= a.degree(); ++y)
      if (a.same_class(Point{x, false}, Point{y, true})) b.set(x, y, true);
  return b;
}

inline Partition from_biequivalence(const Biequivalence& b) {
  if (!b.valid())
    throw std::invalid_argument(
        "from_biequivalence: relation is not full and bifunctional");
  const int n = b.degree();
  Equivalence kernel = b.kernel();
  std::vector<int> labels(static_cast<std::size_t>(2 * n), -1);
  for (int x = 1; x <= n; ++x)
    labels[static_cast<std::size_t>(x - 1)] = kernel.class_of(x);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (b.related(x, y))
        labels[static_cast<std::size_t>(n + y - 1)] = kernel.class_of(x);
  return Partition::from_labels(n, std::move(labels));
}

/// Product by the join formula: alpha ∘ (alpha⁻¹∘alpha ∨ beta∘beta⁻¹) ∘ beta,
/// the join being the transitive closure of the union, computed blockwise.
inline Biequivalence biequiv_multiply(const Biequivalence& alpha,
                                      const Biequivalence& beta) {
  if (alpha.degree() != beta.degree())
    throw DegreeMismatch("biequiv_multiply: degree mismatch");
  const int n = alpha.degree();
  Equivalence join = Equivalence::join(alpha.cokernel(), beta.kernel());
  Biequivalence out(n);
  for (int x = 1; x <= n; ++x) {
    std::vector<char> mid(static_cast<std::size_t>(n + 1), 0);
    for (int u = 1; u <= n; ++u) {
      if (!alpha.related(x, u)) continue;
      for (int v = 1; v <= n; ++v)
        if (join.same(u, v)) mid[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 1; v <= n; ++v) {
      if (!mid[static_cast<std::size_t>(v)]) continue;
      for (int y = 1; y <= n; ++y)
        if (beta.related(v, y)) out.set(x, y, true);
    }
  }
  return out;
}

}  // namespace dualsym
