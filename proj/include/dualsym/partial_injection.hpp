#pragma once

// Elements of the symmetric inverse monoid IS_m: injective partial maps on
// {1..m}.  Stored as an image vector with 0 marking undefined points.
// Literal form: "[2,-,1]" means 1 -> 2, 2 undefined, 3 -> 1.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dualsym/partition.hpp"

namespace dualsym {

class PartialInjection {
 public:
  PartialInjection() = default;

  static PartialInjection from_images(std::vector<int> images) {
    const int m = static_cast<int>(images.size());
    if (m < 1) throw std::invalid_argument("PartialInjection: empty image list");
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (int v : images) {
      if (v < 0 || v > m)
        throw std::invalid_argument("PartialInjection: image out of range");
      if (v != 0) {
        if (used[static_cast<std::size_t>(v - 1)])
          throw std::invalid_argument("PartialInjection: not injective");
        used[static_cast<std::size_t>(v - 1)] = 1;
      }
    }
    PartialInjection s;
    s.img_ = std::move(images);
    return s;
  }

  static PartialInjection identity(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    return from_images(std::move(img));
  }

  static PartialInjection empty(int m) {
    return from_images(std::vector<int>(static_cast<std::size_t>(m), 0));
  }

  static PartialInjection parse(std::string_view text);

  int degree() const { return static_cast<int>(img_.size()); }
  /// 0 when undefined at x.
  int operator()(int x) const { return img_.at(static_cast<std::size_t>(x - 1)); }
  bool defined_at(int x) const { return (*this)(x) != 0; }
  const std::vector<int>& images() const { return img_; }

  std::vector<int> dom() const {
    std::vector<int> d;
    for (int x = 1; x <= degree(); ++x)
      if (defined_at(x)) d.push_back(x);
    return d;
  }

  std::vector<int> ran() const {
    std::vector<int> r;
    for (int v : img_)
      if (v != 0) r.push_back(v);
    std::sort(r.begin(), r.end());
    return r;
  }

  int rank() const {
    int k = 0;
    for (int v : img_) k += v != 0;
    return k;
  }

  PartialInjection inverse() const {
    std::vector<int> img(img_.size(), 0);
    for (int x = 1; x <= degree(); ++x)
      if (defined_at(x)) img[static_cast<std::size_t>((*this)(x)-1)] = x;
    return from_images(std::move(img));
  }

  bool is_idempotent() const {
    for (int x = 1; x <= degree(); ++x)
      if (defined_at(x) && (*this)(x) != x) return false;
    return true;
  }

  /// Composition x -> t(s(x)), defined on s^{-1}(ran(s) ∩ dom(t)).
  friend PartialInjection operator*(const PartialInjection& s,
                                    const PartialInjection& t) {
    if (s.degree() != t.degree())
      throw DegreeMismatch("partial injection product: degree mismatch");
    std::vector<int> img(s.img_.size(), 0);
    for (int x = 1; x <= s.degree(); ++x) {
      if (!s.defined_at(x)) continue;
      int y = t(s(x));
      if (y != 0) img[static_cast<std::size_t>(x - 1)] = y;
    }
    return from_images(std::move(img));
  }

  friend bool operator==(const PartialInjection& a, const PartialInjection& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const PartialInjection& a, const PartialInjection& b) {
    return !(a == b);
  }
  friend bool operator<(const PartialInjection& a, const PartialInjection& b) {
    return a.img_ < b.img_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (i) out += ',';
      out += img_[i] == 0 ? "-" : std::to_string(img_[i]);
    }
    out += ']';
    return out;
  }

  std::size_t hash() const {
    return detail::hash_labels(degree(), img_);
  }

 private:
  std::vector<int> img_;
};

struct PartialInjectionHash {
  std::size_t operator()(const PartialInjection& s) const { return s.hash(); }
};

/// Natural order on IS_m: s <= t iff t extends s.
inline bool natural_leq(const PartialInjection& s, const PartialInjection& t) {
  if (s.degree() != t.degree())
    throw DegreeMismatch("natural_leq: degree mismatch");
  for (int x = 1; x <= s.degree(); ++x)
    if (s.defined_at(x) && s(x) != t(x)) return false;
  return true;
}

inline PartialInjection PartialInjection::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("partial injection parse error at offset " +
                     std::to_string(pos) + ": " + msg);
  };
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  std::vector<int> img;
  while (true) {
    if (pos < text.size() && text[pos] == '-') {
      img.push_back(0);
      ++pos;
    } else {
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        fail("expected digit or '-'");
      long v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > 1'000'000) fail("value too large");
        ++pos;
      }
      if (v == 0) fail("0 is not a valid image");
      img.push_back(static_cast<int>(v));
    }
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
    } else if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    } else {
      fail("expected ',' or ']'");
    }
  }
  if (pos != text.size()) fail("trailing characters");
  try {
    return from_images(std::move(img));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// All of IS_m in lexicographic image-vector order (0 sorts first).
inline std::vector<PartialInjection> enumerate_is(int m, int max_m = 4) {
  if (m < 1) throw std::invalid_argument("enumerate_is: degree must be >= 1");
  if (m > max_m)
    throw BoundExceeded("enumerate_is: degree " + std::to_string(m) +
                        " exceeds bound " + std::to_string(max_m));
  std::vector<PartialInjection> out;
  std::vector<int> img(static_cast<std::size_t>(m), 0);
  std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
  auto rec = [&](auto&& self, int x) -> void {
    if (x > m) {
      out.push_back(PartialInjection::from_images(img));
      return;
    }
    img[static_cast<std::size_t>(x - 1)] = 0;
    self(self, x + 1);
    for (int v = 1; v <= m; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      img[static_cast<std::size_t>(x - 1)] = v;
      self(self, x + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
    img[static_cast<std::size_t>(x - 1)] = 0;
  };
  rec(rec, 1);
  return out;
}

}  // namespace dualsym
