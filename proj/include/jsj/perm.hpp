#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace jsj {

// Permutation of the vertex labels {0,1,2,3} of a tetrahedron.
class Perm4 {
 public:
  constexpr Perm4() : image_{0, 1, 2, 3} {}
  constexpr Perm4(int a, int b, int c, int d)
      : image_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
               static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

  // Returns nullopt unless `image` lists each label exactly once.
  static std::optional<Perm4> from_image(const std::array<int, 4>& image) {
    int seen = 0;
    for (int x : image) {
      if (x < 0 || x > 3 || (seen & (1 << x))) return std::nullopt;
      seen |= 1 << x;
    }
    return Perm4(image[0], image[1], image[2], image[3]);
  }

  // "p0p1p2p3", the images of 0123.
  static std::optional<Perm4> parse(std::string_view s) {
    if (s.size() != 4) return std::nullopt;
    std::array<int, 4> image{};
    for (int i = 0; i < 4; ++i) image[i] = s[i] - '0';
    return from_image(image);
  }

  constexpr int operator[](int i) const { return image_[i]; }

  constexpr Perm4 inverse() const {
    Perm4 out;
    for (int i = 0; i < 4; ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return out;
  }

  // (a * b)[i] == a[b[i]]
  friend constexpr Perm4 operator*(const Perm4& a, const Perm4& b) {
    Perm4 out;
    for (int i = 0; i < 4; ++i) out.image_[i] = a.image_[b.image_[i]];
    return out;
  }

  // +1 for even, -1 for odd.
  constexpr int sign() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += image_[i] > image_[j];
    return inversions % 2 ? -1 : 1;
  }

  std::string str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + image_[i]);
    return s;
  }

  friend constexpr bool operator==(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> image_;
};

}  // namespace jsj
