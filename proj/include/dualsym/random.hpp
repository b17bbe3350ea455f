#pragma once

// Seeded pseudo-random elements for the large-degree property checks.  The
// draws are deterministic for a fixed seed; no uniformity over the element
// set is promised.

#include <random>

#include "dualsym/partition.hpp"

namespace dualsym {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline Equivalence random_equivalence(int n, std::mt19937_64& rng) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  int max_label = 0;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> dist(0, max_label + 1);
    labels[static_cast<std::size_t>(i)] = dist(rng);
    max_label = std::max(max_label, labels[static_cast<std::size_t>(i)]);
  }
  return Equivalence::from_labels(n, std::move(labels));
}

inline Partition random_cs(int n, std::mt19937_64& rng) {
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  int max_label = 0;
  for (int i = 1; i < 2 * n; ++i) {
    std::uniform_int_distribution<int> dist(0, max_label + 1);
    labels[static_cast<std::size_t>(i)] = dist(rng);
    max_label = std::max(max_label, labels[static_cast<std::size_t>(i)]);
  }
  return Partition::from_labels(n, std::move(labels));
}

/// Random IP element: a random domain partition, a codomain partition with
/// the same class count, and a random pairing of classes.
inline Partition random_ip(int n, std::mt19937_64& rng) {
  Equivalence dom = random_equivalence(n, rng);
  Equivalence cod = random_equivalence(n, rng);
  for (int tries = 0; cod.class_count() != dom.class_count() && tries < 10000;
       ++tries)
    cod = random_equivalence(n, rng);
  if (cod.class_count() != dom.class_count()) cod = dom;
  const int k = dom.class_count();
  std::vector<int> pairing(static_cast<std::size_t>(k));
  std::iota(pairing.begin(), pairing.end(), 0);
  std::shuffle(pairing.begin(), pairing.end(), rng);
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int x = 1; x <= n; ++x) {
    labels[static_cast<std::size_t>(x - 1)] = dom.class_of(x);
    labels[static_cast<std::size_t>(n + x - 1)] =
        pairing[static_cast<std::size_t>(cod.class_of(x))];
  }
  return Partition::from_labels(n, std::move(labels));
}

inline Partition random_idempotent(int n, std::mt19937_64& rng) {
  Equivalence e = random_equivalence(n, rng);
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int x = 1; x <= n; ++x) {
    labels[static_cast<std::size_t>(x - 1)] = e.class_of(x);
    labels[static_cast<std::size_t>(n + x - 1)] = e.class_of(x);
  }
  return Partition::from_labels(n, std::move(labels));
}

/// The unique element of IOP_n in the H-class of a: keep rho and lambda,
/// re-pair blocks so both least-element sequences increase together.
inline Partition iop_normal_form(const Partition& a) {
  if (!a.is_ip())
    throw std::invalid_argument("iop_normal_form: element must lie in IP_n");
  const int n = a.degree();
  // canonical labels already order blocks by least unprimed element
  std::vector<int> primed_labels;  // block labels in order of least primed point
  {
    std::vector<char> seen(static_cast<std::size_t>(a.block_count()), 0);
    for (int i = n; i < 2 * n; ++i) {
      int l = a.labels()[static_cast<std::size_t>(i)];
      if (!seen[static_cast<std::size_t>(l)]) {
        seen[static_cast<std::size_t>(l)] = 1;
        primed_labels.push_back(l);
      }
    }
  }
  std::vector<int> new_primed_label(static_cast<std::size_t>(a.block_count()));
  for (std::size_t pos = 0; pos < primed_labels.size(); ++pos)
    new_primed_label[static_cast<std::size_t>(primed_labels[pos])] =
        static_cast<int>(pos);
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i)
    labels[static_cast<std::size_t>(i)] = a.labels()[static_cast<std::size_t>(i)];
  for (int i = n; i < 2 * n; ++i)
    labels[static_cast<std::size_t>(i)] = new_primed_label[static_cast<std::size_t>(
        a.labels()[static_cast<std::size_t>(i)])];
  return Partition::from_labels(n, std::move(labels));
}

inline Partition random_iop(int n, std::mt19937_64& rng) {
  return iop_normal_form(random_ip(n, rng));
}

}  // namespace dualsym
