#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace dmt {

// Dense internal vertex id. Labels live in the owning complex.
using Vertex = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

// A nonempty, strictly increasing sequence of vertex ids.
class Simplex {
 public:
  Simplex() = default;

  // Sorts `vertices`; throws MalformedInput on duplicates or emptiness.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  // Trusted constructor: `sorted` must already be strictly increasing.
  static Simplex from_sorted(std::vector<Vertex> sorted);

  std::span<const Vertex> vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  bool empty() const { return v_.empty(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  bool intersects(const Simplex& other) const;

  // The codimension-1 face omitting the i-th vertex.
  Simplex without(std::size_t i) const;
  Simplex with(Vertex v) const;
  Simplex united(const Simplex& other) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return a.v_ <=> b.v_;
  }

 private:
  std::vector<Vertex> v_;
};

// All codimension-1 faces of `tau` in lexicographic order; empty for a vertex.
std::vector<Simplex> immediate_faces(const Simplex& tau);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : s) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace dmt
