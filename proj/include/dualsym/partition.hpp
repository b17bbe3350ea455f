#pragma once

// Elements of the composition semigroup CS_n: set partitions of the 2n-point
// ground set {1..n} ∪ {1'..n'}, kept in canonical form.  Slot encoding:
// unprimed i -> slot i-1, primed i' -> slot n+i-1.  Canonical form stores one
// block label per slot as a restricted growth string (labels appear in order
// of first use when scanning slots ascending), so two partitions are equal
// exactly when their label vectors are.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dualsym {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : std::invalid_argument {
  explicit DegreeMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ArithmeticOverflow : std::runtime_error {
  explicit ArithmeticOverflow(const std::string& what)
      : std::runtime_error(what) {}
};

/// A point of the ground set: index in [1, n], primed marks the X' copy.
struct Point {
  int index = 0;
  bool primed = false;

  friend bool operator==(const Point& a, const Point& b) {
    return a.index == b.index && a.primed == b.primed;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

// Relabels arbitrary class labels into restricted-growth form: label k is the
// k-th distinct value met when scanning left to right.  Returns class count.
inline int canonize_labels(std::vector<int>& labels) {
  std::vector<int> seen;
  for (int& l : labels) {
    auto it = std::find(seen.begin(), seen.end(), l);
    if (it == seen.end()) {
      seen.push_back(l);
      l = static_cast<int>(seen.size()) - 1;
    } else {
      l = static_cast<int>(it - seen.begin());
    }
  }
  return static_cast<int>(seen.size());
}

inline std::size_t hash_labels(int degree, const std::vector<int>& labels) {
  std::size_t h = static_cast<std::size_t>(degree);
  for (int l : labels) h = h * 1000003u + static_cast<std::size_t>(l + 1);
  return h;
}

}  // namespace detail

/// An equivalence relation on {1..n}, canonical restricted-growth labels.
class Equivalence {
 public:
  Equivalence() = default;

  static Equivalence from_labels(int degree, std::vector<int> labels) {
    if (degree < 1 || static_cast<int>(labels.size()) != degree)
      throw std::invalid_argument("Equivalence: bad label vector");
    Equivalence e;
    e.degree_ = degree;
    e.labels_ = std::move(labels);
    e.classes_ = detail::canonize_labels(e.labels_);
    return e;
  }

  static Equivalence from_classes(int degree,
                                  const std::vector<std::vector<int>>& cls) {
    std::vector<int> labels(static_cast<std::size_t>(degree), -1);
    int next = 0;
    for (const auto& c : cls) {
      if (c.empty()) throw std::invalid_argument("Equivalence: empty class");
      for (int x : c) {
        if (x < 1 || x > degree)
          throw std::invalid_argument("Equivalence: index out of range");
        if (labels[x - 1] != -1)
          throw std::invalid_argument("Equivalence: duplicate index");
        labels[x - 1] = next;
      }
      ++next;
    }
    for (int l : labels)
      if (l == -1) throw std::invalid_argument("Equivalence: not a cover");
    return from_labels(degree, std::move(labels));
  }

  static Equivalence trivial(int degree) {  // all singletons
    std::vector<int> labels(static_cast<std::size_t>(degree));
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(degree, std::move(labels));
  }

  static Equivalence full(int degree) {  // one class
    return from_labels(degree,
                       std::vector<int>(static_cast<std::size_t>(degree), 0));
  }

  int degree() const { return degree_; }
  int class_count() const { return classes_; }
  const std::vector<int>& labels() const { return labels_; }

  int class_of(int x) const { return labels_.at(static_cast<std::size_t>(x - 1)); }
  bool same(int x, int y) const { return class_of(x) == class_of(y); }

  std::vector<std::vector<int>> classes() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(classes_));
    for (int x = 1; x <= degree_; ++x)
      out[static_cast<std::size_t>(class_of(x))].push_back(x);
    return out;
  }

  /// True when this relation is contained in `coarser` (every class of this
  /// lies inside a class of `coarser`).
  bool refines(const Equivalence& coarser) const {
    if (degree_ != coarser.degree_)
      throw DegreeMismatch("Equivalence::refines: degree mismatch");
    std::vector<int> image(static_cast<std::size_t>(classes_), -1);
    for (int i = 0; i < degree_; ++i) {
      int mine = labels_[static_cast<std::size_t>(i)];
      int theirs = coarser.labels_[static_cast<std::size_t>(i)];
      if (image[static_cast<std::size_t>(mine)] == -1)
        image[static_cast<std::size_t>(mine)] = theirs;
      else if (image[static_cast<std::size_t>(mine)] != theirs)
        return false;
    }
    return true;
  }

  static Equivalence join(const Equivalence& a, const Equivalence& b) {
    if (a.degree_ != b.degree_)
      throw DegreeMismatch("Equivalence::join: degree mismatch");
    detail::UnionFind uf(a.degree_);
    for (int i = 1; i < a.degree_; ++i) {
      for (int j = 0; j < i; ++j) {
        if (a.labels_[static_cast<std::size_t>(i)] ==
                a.labels_[static_cast<std::size_t>(j)] ||
            b.labels_[static_cast<std::size_t>(i)] ==
                b.labels_[static_cast<std::size_t>(j)])
          uf.unite(i, j);
      }
    }
    std::vector<int> labels(static_cast<std::size_t>(a.degree_));
    for (int i = 0; i < a.degree_; ++i) labels[static_cast<std::size_t>(i)] = uf.find(i);
    return from_labels(a.degree_, std::move(labels));
  }

  /// Type vector: entry i-1 counts the classes of size i.
  std::vector<int> type() const {
    std::vector<int> size_of(static_cast<std::size_t>(classes_), 0);
    for (int l : labels_) ++size_of[static_cast<std::size_t>(l)];
    std::vector<int> t(static_cast<std::size_t>(degree_), 0);
    for (int s : size_of) ++t[static_cast<std::size_t>(s - 1)];
    return t;
  }

  std::string to_string() const {
    std::string out = "{";
    auto cls = classes();
    for (std::size_t c = 0; c < cls.size(); ++c) {
      if (c) out += '|';
      for (std::size_t i = 0; i < cls[c].size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cls[c][i]);
      }
    }
    out += '}';
    return out;
  }

  friend bool operator==(const Equivalence& a, const Equivalence& b) {
    return a.degree_ == b.degree_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const Equivalence& a, const Equivalence& b) {
    return !(a == b);
  }
  friend bool operator<(const Equivalence& a, const Equivalence& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.labels_ < b.labels_;
  }

  std::size_t hash() const { return detail::hash_labels(degree_, labels_); }

 private:
  int degree_ = 0;
  int classes_ = 0;
  std::vector<int> labels_;
};

struct EquivalenceHash {
  std::size_t operator()(const Equivalence& e) const { return e.hash(); }
};

class Partition;
Partition operator*(const Partition& a, const Partition& b);

/// An element of CS_n.  Immutable after construction; all operations pure.
class Partition {
 public:
  Partition() = default;

  static Partition from_labels(int degree, std::vector<int> labels) {
    if (degree < 1)
      throw std::invalid_argument("Partition: degree must be at least 1");
    if (static_cast<int>(labels.size()) != 2 * degree)
      throw std::invalid_argument("Partition: bad label vector size");
    Partition p;
    p.degree_ = degree;
    p.labels_ = std::move(labels);
    p.nblocks_ = detail::canonize_labels(p.labels_);
    return p;
  }

  static Partition from_blocks(int degree,
                               const std::vector<std::vector<Point>>& blocks) {
    if (degree < 1)
      throw std::invalid_argument("Partition: degree must be at least 1");
    std::vector<int> labels(static_cast<std::size_t>(2 * degree), -1);
    int next = 0;
    for (const auto& block : blocks) {
      if (block.empty())
        throw std::invalid_argument("Partition: empty block");
      for (const Point& pt : block) {
        if (pt.index < 1 || pt.index > degree)
          throw std::invalid_argument("Partition: point out of range");
        int slot = pt.primed ? degree + pt.index - 1 : pt.index - 1;
        if (labels[static_cast<std::size_t>(slot)] != -1)
          throw std::invalid_argument("Partition: duplicate point");
        labels[static_cast<std::size_t>(slot)] = next;
      }
      ++next;
    }
    for (int l : labels)
      if (l == -1) throw std::invalid_argument("Partition: not a cover");
    return from_labels(degree, std::move(labels));
  }

  /// Identity: blocks {i, i'}.
  static Partition identity(int degree) {
    std::vector<int> labels(static_cast<std::size_t>(2 * degree));
    for (int i = 0; i < degree; ++i) {
      labels[static_cast<std::size_t>(i)] = i;
      labels[static_cast<std::size_t>(degree + i)] = i;
    }
    return from_labels(degree, std::move(labels));
  }

  /// Zero: the single block X ∪ X'.
  static Partition zero(int degree) {
    return from_labels(degree,
                       std::vector<int>(static_cast<std::size_t>(2 * degree), 0));
  }

  static Partition parse(std::string_view text);

  int degree() const { return degree_; }
  int block_count() const { return nblocks_; }
  const std::vector<int>& labels() const { return labels_; }

  int slot_of(Point p) const {
    if (p.index < 1 || p.index > degree_)
      throw std::invalid_argument("Partition: point out of range");
    return p.primed ? degree_ + p.index - 1 : p.index - 1;
  }
  int class_of(Point p) const {
    return labels_[static_cast<std::size_t>(slot_of(p))];
  }
  bool same_class(Point p, Point q) const {
    return class_of(p) == class_of(q);
  }

  std::vector<std::vector<Point>> blocks() const {
    std::vector<std::vector<Point>> out(static_cast<std::size_t>(nblocks_));
    for (int slot = 0; slot < 2 * degree_; ++slot) {
      Point pt = slot < degree_ ? Point{slot + 1, false}
                                : Point{slot - degree_ + 1, true};
      out[static_cast<std::size_t>(labels_[static_cast<std::size_t>(slot)])]
          .push_back(pt);
    }
    return out;
  }

  /// True when every block meets both X and X', i.e. the element lies in IP_n.
  bool is_ip() const {
    std::vector<char> has_unprimed(static_cast<std::size_t>(nblocks_), 0);
    std::vector<char> has_primed(static_cast<std::size_t>(nblocks_), 0);
    for (int slot = 0; slot < 2 * degree_; ++slot) {
      auto l = static_cast<std::size_t>(labels_[static_cast<std::size_t>(slot)]);
      (slot < degree_ ? has_unprimed[l] : has_primed[l]) = 1;
    }
    for (int c = 0; c < nblocks_; ++c)
      if (!has_unprimed[static_cast<std::size_t>(c)] ||
          !has_primed[static_cast<std::size_t>(c)])
        return false;
    return true;
  }

  /// Prime-swap involution.  Inside IP_n this is the semigroup inverse; on
  /// the rest of CS_n it is only an involution.
  Partition star() const {
    std::vector<int> labels(static_cast<std::size_t>(2 * degree_));
    for (int i = 0; i < degree_; ++i) {
      labels[static_cast<std::size_t>(i)] =
          labels_[static_cast<std::size_t>(degree_ + i)];
      labels[static_cast<std::size_t>(degree_ + i)] =
          labels_[static_cast<std::size_t>(i)];
    }
    return from_labels(degree_, std::move(labels));
  }

  /// Restriction of the block relation to the unprimed half, on {1..n}.
  Equivalence rho() const {
    return Equivalence::from_labels(
        degree_, std::vector<int>(labels_.begin(), labels_.begin() + degree_));
  }

  /// Restriction to the primed half, returned on the underlying {1..n}.
  Equivalence lambda() const {
    return Equivalence::from_labels(
        degree_, std::vector<int>(labels_.begin() + degree_, labels_.end()));
  }

  std::string to_string() const {
    std::string out = "{";
    bool first_block = true;
    // blocks in canonical order = label order; points ascending by slot
    for (int c = 0; c < nblocks_; ++c) {
      if (!first_block) out += '|';
      first_block = false;
      bool first_pt = true;
      for (int slot = 0; slot < 2 * degree_; ++slot) {
        if (labels_[static_cast<std::size_t>(slot)] != c) continue;
        if (!first_pt) out += ',';
        first_pt = false;
        if (slot < degree_) {
          out += std::to_string(slot + 1);
        } else {
          out += std::to_string(slot - degree_ + 1);
          out += '\'';
        }
      }
    }
    out += '}';
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.degree_ == b.degree_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  /// Canonical element order: degree, then label vector lexicographically
  /// (the restricted-growth-string order used by enumeration).
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.labels_ < b.labels_;
  }

  std::size_t hash() const { return detail::hash_labels(degree_, labels_); }

 private:
  int degree_ = 0;
  int nblocks_ = 0;
  std::vector<int> labels_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const { return p.hash(); }
};

/// Gluing product: identify a's primed row with b's unprimed row, take
/// connected components, keep a's unprimed points and b's primed points.
/// Middle-only components vanish.
inline Partition operator*(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("product: degree mismatch (" +
                         std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()) + ")");
  const int n = a.degree();
  detail::UnionFind uf(3 * n);
  // nodes: 0..n-1 a's unprimed, n..2n-1 shared middle, 2n..3n-1 b's primed
  std::vector<int> rep(static_cast<std::size_t>(2 * n), -1);
  for (int slot = 0; slot < 2 * n; ++slot) {
    int l = a.labels()[static_cast<std::size_t>(slot)];
    if (rep[static_cast<std::size_t>(l)] == -1)
      rep[static_cast<std::size_t>(l)] = slot;
    else
      uf.unite(rep[static_cast<std::size_t>(l)], slot);
  }
  std::fill(rep.begin(), rep.end(), -1);
  for (int slot = 0; slot < 2 * n; ++slot) {
    int l = b.labels()[static_cast<std::size_t>(slot)];
    int node = n + slot;  // b's unprimed -> middle, b's primed -> right
    if (rep[static_cast<std::size_t>(l)] == -1)
      rep[static_cast<std::size_t>(l)] = node;
    else
      uf.unite(rep[static_cast<std::size_t>(l)], node);
  }
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(i)] = uf.find(i);
    labels[static_cast<std::size_t>(n + i)] = uf.find(2 * n + i);
  }
  return Partition::from_labels(n, std::move(labels));
}

/// Block count.  For IP elements this equals the common count of rho- and
/// lambda-classes; rank_counts() exposes all three for general elements.
inline int rank(const Partition& a) { return a.block_count(); }

struct RankCounts {
  int blocks = 0;
  int rho_classes = 0;
  int lambda_classes = 0;
  bool coincide = false;  // false flags that projections differ (non-IP case)
};

inline RankCounts rank_counts(const Partition& a) {
  RankCounts rc;
  rc.blocks = a.block_count();
  rc.rho_classes = a.rho().class_count();
  rc.lambda_classes = a.lambda().class_count();
  rc.coincide = rc.blocks == rc.rho_classes && rc.blocks == rc.lambda_classes;
  return rc;
}

inline Partition Partition::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("parse error at offset " + std::to_string(pos) + ": " +
                     msg);
  };
  auto peek = [&]() -> int {
    return pos < text.size() ? static_cast<unsigned char>(text[pos]) : -1;
  };
  auto read_int = [&]() -> int {
    if (peek() < '0' || peek() > '9') fail("expected digit");
    long v = 0;
    while (peek() >= '0' && peek() <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) fail("index too large");
      ++pos;
    }
    return static_cast<int>(v);
  };

  int declared = -1;
  // optional "n:" degree prefix
  std::size_t mark = pos;
  if (peek() >= '0' && peek() <= '9') {
    int v = read_int();
    if (peek() == ':') {
      ++pos;
      declared = v;
      if (declared < 1) fail("declared degree must be at least 1");
    } else {
      pos = mark;
    }
  }

  if (peek() != '{') fail("expected '{'");
  ++pos;

  std::vector<std::vector<Point>> blocks(1);
  int max_index = 0;
  while (true) {
    int idx = read_int();
    if (idx == 0) fail("index 0 is not a point");
    if (declared != -1 && idx > declared)
      fail("index " + std::to_string(idx) + " exceeds declared degree " +
           std::to_string(declared));
    bool primed = false;
    if (peek() == '\'') {
      primed = true;
      ++pos;
    }
    blocks.back().push_back(Point{idx, primed});
    max_index = std::max(max_index, idx);
    int c = peek();
    if (c == ',') {
      ++pos;
    } else if (c == '|') {
      ++pos;
      blocks.emplace_back();
    } else if (c == '}') {
      ++pos;
      break;
    } else {
      fail("expected ',', '|' or '}'");
    }
  }
  if (pos != text.size()) fail("trailing characters");

  const int degree = declared != -1 ? declared : max_index;
  std::vector<int> labels(static_cast<std::size_t>(2 * degree), -1);
  int next = 0;
  for (const auto& block : blocks) {
    for (const Point& pt : block) {
      int slot = pt.primed ? degree + pt.index - 1 : pt.index - 1;
      if (labels[static_cast<std::size_t>(slot)] != -1) {
        pos = 0;
        fail("duplicate point " + std::to_string(pt.index) +
             (pt.primed ? "'" : ""));
      }
      labels[static_cast<std::size_t>(slot)] = next;
    }
    ++next;
  }
  for (int slot = 0; slot < 2 * degree; ++slot) {
    if (labels[static_cast<std::size_t>(slot)] == -1) {
      pos = 0;
      fail("missing point " +
           std::to_string(slot < degree ? slot + 1 : slot - degree + 1) +
           (slot < degree ? "" : "'") + " (not a cover of degree " +
           std::to_string(degree) + ")");
    }
  }
  return from_labels(degree, std::move(labels));
}

inline std::string serialize(const Partition& a) { return a.to_string(); }

}  // namespace dualsym
