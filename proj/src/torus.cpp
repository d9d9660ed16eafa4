#include "jsj/torus.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>

#include "jsj/error.hpp"

namespace jsj {

namespace {

template <class T>
std::tuple<T, T, T> extended_gcd(T a, T b) {
  T x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    T q = a / b;
    std::tie(a, b) = std::make_tuple(b, T(a - q * b));
    std::tie(x0, x1) = std::make_tuple(x1, T(x0 - q * x1));
    std::tie(y0, y1) = std::make_tuple(y1, T(y0 - q * y1));
  }
  return {a, x0, y0};
}

std::int64_t saturate(const Int& v) {
  static const Int cap = std::numeric_limits<std::int64_t>::max() / 4;
  return v > cap ? static_cast<std::int64_t>(cap) : static_cast<std::int64_t>(v);
}
std::int64_t saturate(std::int64_t v) { return v; }

// Both slopes normalized. Moves (p,q) to infinity, then runs the
// continued-fraction recurrence on the image of (r,s): with convergents
// c_{-1} = infinity and c_0 = a_0, the distance to c_k is
// min(d_{k-1} + 1, d_{k-2} + a_k).
template <class T>
std::int64_t continued_fraction_distance(T p, T q, T r, T s) {
  if (p == r && q == s) return 0;
  auto [g, x, y] = extended_gcd<T>(p, q);
  if (g < 0) {
    x = -x;
    y = -y;
  }
  T num = x * r + y * s;
  T den = p * s - q * r;
  if (den == 0) return 0;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  T rem = num % den;
  if (rem < 0) rem += den;
  std::int64_t before = 0, last = 1;
  T n = den, m = rem;
  while (m != 0) {
    T a = n / m;
    T next = n % m;
    std::int64_t d = std::min(last + 1, before + saturate(a));
    before = last;
    last = d;
    n = m;
    m = next;
  }
  return last;
}

bool fits_small(const Int& v) {
  static const Int bound = Int(1) << 30;
  return v < bound && v > -bound;
}

std::vector<Slope> slope_set(const TorusMap& frame) {
  std::vector<Slope> out{Slope(frame.column(0)), Slope(frame.column(1)),
                         Slope(frame.column(0) + frame.column(1))};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Slope::Slope(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw InputError("slope (0,0) is not primitive");
  if (boost::multiprecision::gcd(p_, q_) != 1)
    throw InputError("slope (" + p_.str() + "," + q_.str() + ") is not primitive");
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

std::string Slope::str() const { return p_.str() + "/" + q_.str(); }

std::int64_t farey_distance(const Slope& a, const Slope& b) {
  if (fits_small(a.p()) && fits_small(a.q()) && fits_small(b.p()) && fits_small(b.q()))
    return continued_fraction_distance<std::int64_t>(
        static_cast<std::int64_t>(a.p()), static_cast<std::int64_t>(a.q()),
        static_cast<std::int64_t>(b.p()), static_cast<std::int64_t>(b.q()));
  return continued_fraction_distance<Int>(a.p(), a.q(), b.p(), b.q());
}

TorusMap TorusMap::inverse() const {
  Int d = det();
  if (d != 1 && d != -1) throw InputError("matrix " + str() + " is not invertible over the integers");
  return {d * m_[3], -d * m_[1], -d * m_[2], d * m_[0]};
}

TorusMap operator*(const TorusMap& l, const TorusMap& r) {
  return {l.a() * r.a() + l.b() * r.c(), l.a() * r.b() + l.b() * r.d(),
          l.c() * r.a() + l.d() * r.c(), l.c() * r.b() + l.d() * r.d()};
}

std::string TorusMap::str() const {
  std::ostringstream out;
  out << "[[" << m_[0] << "," << m_[1] << "],[" << m_[2] << "," << m_[3] << "]]";
  return out.str();
}

std::int64_t gluing_distance(const TorusMap& map, const Slope& fiber_src, const Slope& fiber_dst) {
  return farey_distance(map(fiber_src), fiber_dst);
}

TorusMap flip_matrix(Flip f) {
  switch (f) {
    case Flip::x: return {1, 0, 1, 1};
    case Flip::y: return {1, 1, 0, 1};
    case Flip::diagonal: return {1, 0, -1, 1};
  }
  return {};
}

const char* to_string(Flip f) {
  switch (f) {
    case Flip::x: return "x";
    case Flip::y: return "y";
    case Flip::diagonal: return "xy";
  }
  return "?";
}

Vec2 flipped_edge(const TorusMap& framing, Flip f) {
  switch (f) {
    case Flip::x: return framing.column(0);
    case Flip::y: return framing.column(1);
    case Flip::diagonal: return framing.column(0) + framing.column(1);
  }
  return {};
}

const std::vector<TorusMap>& triangle_symmetries() {
  static const std::vector<TorusMap> symmetries = [] {
    std::vector<TorusMap> out;
    const auto standard = slope_set(TorusMap::identity());
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          for (int d = -1; d <= 1; ++d) {
            TorusMap m(a, b, c, d);
            if (m.unimodular() && slope_set(m) == standard) out.push_back(m);
          }
    return out;
  }();
  return symmetries;
}

TorusMap LayeredGluing::framing() const {
  TorusMap f;
  for (Flip flip : flips) f = f * flip_matrix(flip);
  return f;
}

bool LayeredGluing::certifies_map() const {
  const auto& sym = triangle_symmetries();
  if (std::find(sym.begin(), sym.end(), terminal) == sym.end()) return false;
  return terminal * framing().inverse() == map;
}

LayeredGluing realize_as_layers(const TorusMap& map, const Slope& fiber_src, const Slope& fiber_dst) {
  if (!map.unimodular()) throw InputError("gluing map " + map.str() + " has determinant other than ±1");
  LayeredGluing out;
  out.map = map;
  const auto target = slope_set(map.inverse());
  TorusMap frame;
  for (auto current = slope_set(frame); current != target; current = slope_set(frame)) {
    // A target vertex outside the current triangle lies beyond exactly one
    // of its edges; flip that edge.
    const Slope* outside = nullptr;
    for (const auto& s : target)
      if (!std::binary_search(current.begin(), current.end(), s)) {
        outside = &s;
        break;
      }
    Vec2 c = frame.inverse()(outside->vector());
    if (c.y < 0 || (c.y == 0 && c.x < 0)) c = -c;
    Flip flip = c.x < 0 ? Flip::diagonal : (c.x < c.y ? Flip::x : Flip::y);
    out.flips.push_back(flip);
    frame = frame * flip_matrix(flip);
  }
  out.terminal = map * frame;
  if (!out.certifies_map())
    throw ConstructionError("layered walk for " + map.str() + " ended off the target triangle");
  out.achieved_distance = gluing_distance(map, fiber_src, fiber_dst);
  return out;
}

TorusMap pick_high_distance_map(std::int64_t distance, const Slope& fiber_src, const Slope& fiber_dst,
                                std::uint64_t variant) {
  if (distance < 1) throw InputError("required distance must be at least 1");
  static const Flip pattern[4] = {Flip::y, Flip::y, Flip::x, Flip::x};
  TorusMap frame;
  const std::int64_t max_layers = 4 * distance + 64;
  for (std::int64_t n = 0; n <= max_layers; ++n) {
    TorusMap back = frame.inverse();
    std::int64_t best = -1;
    std::vector<TorusMap> ties;
    for (const auto& g : triangle_symmetries()) {
      if (g.det() != -1) continue;
      TorusMap candidate = g.inverse() * back;
      std::int64_t d = gluing_distance(candidate, fiber_src, fiber_dst);
      if (d > best) {
        best = d;
        ties.clear();
      }
      if (d == best) ties.push_back(candidate);
    }
    if (best >= distance) return ties[variant % ties.size()];
    frame = frame * flip_matrix(pattern[n % 4]);
  }
  throw ConstructionError("no map of distance " + std::to_string(distance) + " within " +
                          std::to_string(max_layers) + " layers");
}

}  // namespace jsj
