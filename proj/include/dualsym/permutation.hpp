#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualsym {

/// A bijection on {1..n}.  Products compose left to right: (a*b)(x) = b(a(x)),
/// matching the diagrammatic partition product.
class Permutation {
 public:
  Permutation() = default;

  static Permutation from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw std::invalid_argument("Permutation: empty image list");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images) {
      if (v < 1 || v > n)
        throw std::invalid_argument("Permutation: image out of range");
      if (seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("Permutation: image list is not a bijection");
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    Permutation g;
    g.img_ = std::move(images);
    return g;
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return from_images(std::move(img));
  }

  static Permutation transposition(int x, int y, int n) {
    if (x == y) throw std::invalid_argument("transposition: equal points");
    auto g = identity(n);
    std::swap(g.img_[static_cast<std::size_t>(x - 1)],
              g.img_[static_cast<std::size_t>(y - 1)]);
    return g;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    std::vector<int> img(img_.size());
    for (int x = 1; x <= degree(); ++x)
      img[static_cast<std::size_t>((*this)(x)-1)] = x;
    return from_images(std::move(img));
  }

  bool is_even() const {
    // parity by cycle count
    std::vector<char> seen(img_.size(), 0);
    int transpositions = 0;
    for (int x = 1; x <= degree(); ++x) {
      if (seen[static_cast<std::size_t>(x - 1)]) continue;
      int len = 0;
      for (int y = x; !seen[static_cast<std::size_t>(y - 1)]; y = (*this)(y)) {
        seen[static_cast<std::size_t>(y - 1)] = 1;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Permutation product: degree mismatch");
    std::vector<int> img(a.img_.size());
    for (int x = 1; x <= a.degree(); ++x)
      img[static_cast<std::size_t>(x - 1)] = b(a(x));
    return from_images(std::move(img));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(img_[i]);
    }
    return out;
  }

 private:
  std::vector<int> img_;
};

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace dualsym
