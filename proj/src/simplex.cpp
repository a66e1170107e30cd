#include "dmt/simplex.hpp"

#include <algorithm>

#include "dmt/errors.hpp"

namespace dmt {

Simplex::Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
  if (v_.empty()) throw MalformedInput("empty simplex");
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw MalformedInput("duplicate vertex in simplex");
}

Simplex Simplex::from_sorted(std::vector<Vertex> sorted) {
  Simplex s;
  s.v_ = std::move(sorted);
  return s;
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = v_.begin();
  auto b = other.v_.begin();
  while (a != v_.end() && b != other.v_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

Simplex Simplex::without(std::size_t i) const {
  std::vector<Vertex> out;
  out.reserve(v_.size() - 1);
  for (std::size_t j = 0; j < v_.size(); ++j)
    if (j != i) out.push_back(v_[j]);
  return from_sorted(std::move(out));
}

Simplex Simplex::with(Vertex v) const {
  std::vector<Vertex> out(v_);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return Simplex(std::move(out));
}

Simplex Simplex::united(const Simplex& other) const {
  std::vector<Vertex> out;
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::vector<Simplex> immediate_faces(const Simplex& tau) {
  std::vector<Simplex> faces;
  if (tau.size() < 2) return faces;
  faces.reserve(tau.size());
  for (std::size_t i = tau.size(); i-- > 0;) faces.push_back(tau.without(i));
  return faces;
}

}  // namespace dmt
