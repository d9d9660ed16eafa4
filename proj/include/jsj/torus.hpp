#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jsj {

// Gluing matrices grow exponentially with the requested distance, so all
// torus coordinates are arbitrary precision.
using Int = boost::multiprecision::cpp_int;

struct Vec2 {
  Int x, y;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Primitive vector up to sign: p·(first basis curve) + q·(second). Stored
// with q > 0, or as (1, 0).
class Slope {
 public:
  Slope() : p_(1), q_(0) {}
  // Throws InputError unless gcd(|p|, |q|) == 1.
  Slope(Int p, Int q);
  explicit Slope(const Vec2& v) : Slope(v.x, v.y) {}

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  Vec2 vector() const { return {p_, q_}; }
  std::string str() const;  // "p/q"

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b) {
    return a.p_ < b.p_ || (a.p_ == b.p_ && a.q_ < b.q_);
  }

 private:
  Int p_, q_;
};

// Farey graph distance: slopes are adjacent when |ps - rq| = 1.
std::int64_t farey_distance(const Slope& a, const Slope& b);

// 2x2 integer matrix [[a, b], [c, d]] acting on column vectors.
class TorusMap {
 public:
  TorusMap() : m_{1, 0, 0, 1} {}
  TorusMap(Int a, Int b, Int c, Int d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static TorusMap identity() { return {}; }
  // Columns are the images of (1,0) and (0,1).
  static TorusMap from_columns(const Vec2& c0, const Vec2& c1) { return {c0.x, c1.x, c0.y, c1.y}; }

  const Int& a() const { return m_[0]; }
  const Int& b() const { return m_[1]; }
  const Int& c() const { return m_[2]; }
  const Int& d() const { return m_[3]; }
  Vec2 column(int i) const { return i == 0 ? Vec2{m_[0], m_[2]} : Vec2{m_[1], m_[3]}; }

  Int det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  bool unimodular() const { Int d = det(); return d == 1 || d == -1; }
  // Requires |det| == 1.
  TorusMap inverse() const;

  Vec2 operator()(const Vec2& v) const { return {m_[0] * v.x + m_[1] * v.y, m_[2] * v.x + m_[3] * v.y}; }
  Slope operator()(const Slope& s) const { return Slope((*this)(s.vector())); }
  friend TorusMap operator*(const TorusMap& l, const TorusMap& r);

  std::string str() const;  // "[[a,b],[c,d]]"
  friend bool operator==(const TorusMap&, const TorusMap&) = default;

 private:
  std::array<Int, 4> m_;
};

// Farey distance between the image of the source fiber and the target fiber.
std::int64_t gluing_distance(const TorusMap& map, const Slope& fiber_src, const Slope& fiber_dst);

// A one-vertex torus triangulation is framed by a basis (x, y) whose edges
// are x, y and x+y. Each flip replaces one of them:
//   x   -> x+2y   framing F·[[1,0],[1,1]]
//   y   -> 2x+y   framing F·[[1,1],[0,1]]
//   x+y -> x-y    framing F·[[1,0],[-1,1]]
enum class Flip { x, y, diagonal };
TorusMap flip_matrix(Flip f);
const char* to_string(Flip f);
// The edge a flip removes, for framing F.
Vec2 flipped_edge(const TorusMap& framing, Flip f);

// The 12 matrices carrying the slope set {(1,0), (0,1), (1,1)} to itself,
// in a fixed order.
const std::vector<TorusMap>& triangle_symmetries();

struct LayeredGluing {
  TorusMap map;
  std::vector<Flip> flips;
  // Relabeling of the last layer onto the target triangulation; map equals
  // terminal · framing()^-1.
  TorusMap terminal;
  std::int64_t achieved_distance = 0;

  int tetrahedron_count() const { return static_cast<int>(flips.size()); }
  TorusMap framing() const;
  // Recomputes map from the recorded flips and terminal relabeling.
  bool certifies_map() const;
};

// Walks the Farey tessellation from the standard triangle to the preimage of
// the standard triangle under `map`, one flip per step.
LayeredGluing realize_as_layers(const TorusMap& map, const Slope& fiber_src, const Slope& fiber_dst);

// Orientation-reversing map (det -1) with gluing distance >= distance,
// realized by a short zigzag flip sequence. `variant` picks among the
// equally distant candidates at the chosen length.
TorusMap pick_high_distance_map(std::int64_t distance, const Slope& fiber_src, const Slope& fiber_dst,
                                std::uint64_t variant = 0);

}  // namespace jsj
