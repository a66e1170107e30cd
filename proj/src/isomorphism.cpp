#include "dmt/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "dmt/errors.hpp"

namespace dmt {

VertexBijection::VertexBijection(std::vector<Vertex> forward,
                                 std::vector<Vertex> backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  auto in_range = [](const std::vector<Vertex>& t, Vertex v) {
    return v >= 0 && static_cast<std::size_t>(v) < t.size();
  };
  for (std::size_t v = 0; v < forward_.size(); ++v) {
    Vertex w = forward_[v];
    if (w == kNoVertex) continue;
    if (!in_range(backward_, w) || backward_[w] != static_cast<Vertex>(v))
      throw InvalidIsomorphism("vertex tables are not mutually inverse");
  }
  for (std::size_t w = 0; w < backward_.size(); ++w) {
    Vertex v = backward_[w];
    if (v == kNoVertex) continue;
    if (!in_range(forward_, v) || forward_[v] != static_cast<Vertex>(w))
      throw InvalidIsomorphism("vertex tables are not mutually inverse");
  }
}

VertexBijection VertexBijection::from_forward(std::vector<Vertex> forward,
                                              std::size_t target_universe) {
  std::vector<Vertex> backward(target_universe, kNoVertex);
  for (std::size_t v = 0; v < forward.size(); ++v) {
    Vertex w = forward[v];
    if (w == kNoVertex) continue;
    if (w < 0 || static_cast<std::size_t>(w) >= target_universe ||
        backward[w] != kNoVertex)
      throw InvalidIsomorphism("forward table is not injective");
    backward[w] = static_cast<Vertex>(v);
  }
  return VertexBijection(std::move(forward), std::move(backward));
}

std::size_t VertexBijection::size() const {
  return static_cast<std::size_t>(
      std::count_if(forward_.begin(), forward_.end(),
                    [](Vertex w) { return w != kNoVertex; }));
}

Simplex VertexBijection::apply(const Simplex& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) {
    Vertex w = forward_.at(v);
    if (w == kNoVertex) throw InvalidIsomorphism("vertex outside the domain");
    out.push_back(w);
  }
  return Simplex(std::move(out));
}

bool is_isomorphism(const VertexBijection& f, const FacetComplex& a,
                    const FacetComplex& b) {
  if (a.facets().size() != b.facets().size()) return false;
  const auto va = a.vertices();
  const auto vb = b.vertices();
  if (va.size() != vb.size() || f.size() != va.size()) return false;
  for (Vertex v : va) {
    if (static_cast<std::size_t>(v) >= f.forward().size()) return false;
    Vertex w = f(v);
    if (w == kNoVertex || !b.has_vertex(w)) return false;
  }
  std::unordered_set<Simplex, SimplexHash> target(b.facets().begin(),
                                                   b.facets().end());
  for (const auto& facet : a.facets())
    if (!target.contains(f.apply(facet))) return false;
  return true;
}

bool is_isomorphism(const VertexBijection& f, const SimplicialComplex& k,
                    const SimplicialComplex& l) {
  if (k.size() != l.size()) return false;
  try {
    for (const auto& s : k.simplices())
      if (!l.contains(f.apply(s))) return false;
  } catch (const InvalidIsomorphism&) {
    return false;
  }
  return f.size() == k.num_vertices();
}

namespace {

using Colors = std::vector<int>;

// Colour-refinement state for one side of the search.
struct Side {
  std::vector<Vertex> present;
  const std::vector<std::vector<Vertex>>* adjacency;
  const std::vector<Simplex>* sets;
  std::vector<std::vector<std::size_t>> membership;  // determining sets containing v
  std::vector<char> adjacent;                        // dense 1-skeleton
  std::size_t n = 0;

  explicit Side(const ComplexDescription& d)
      : present(d.vertices), adjacency(d.adjacency), sets(d.determining),
        n(d.universe_size) {
    membership.assign(n, {});
    for (std::size_t i = 0; i < sets->size(); ++i)
      for (Vertex v : (*sets)[i]) membership[v].push_back(i);
    adjacent.assign(n * n, 0);
    for (std::size_t v = 0; v < n; ++v)
      for (Vertex w : (*adjacency)[v]) adjacent[v * n + w] = 1;
  }

  const std::vector<Vertex>& neighbours(Vertex v) const { return (*adjacency)[v]; }
  bool adj(Vertex u, Vertex v) const { return adjacent[u * n + v]; }
};

class Search {
 public:
  Search(const ComplexDescription& a, const ComplexDescription& b,
         std::size_t limit)
      : a_(a), b_(b), limit_(limit) {
    std::size_t entries = 0;
    for (const auto& f : *a.determining) entries += f.size();
    use_facets_ = entries <= 20000;
  }

  std::vector<VertexBijection> run() {
    if (!compatible_shapes()) return {};
    Colors ca(a_.n, -1), cb(b_.n, -1);
    if (!initial_colors(ca, cb) || !refine(ca, cb)) return {};
    target_.insert(b_.sets->begin(), b_.sets->end());
    fwd_.assign(a_.n, kNoVertex);
    bwd_.assign(b_.n, kNoVertex);
    descend(0, ca, cb);
    return std::move(found_);
  }

 private:
  bool compatible_shapes() const {
    const auto& fa = *a_.sets;
    const auto& fb = *b_.sets;
    if (a_.present.size() != b_.present.size() || fa.size() != fb.size())
      return false;
    auto sizes = [](const std::vector<Simplex>& fs) {
      std::vector<std::size_t> s;
      for (const auto& f : fs) s.push_back(f.size());
      std::sort(s.begin(), s.end());
      return s;
    };
    return sizes(fa) == sizes(fb);
  }

  // Degree and facet-size histogram.
  bool initial_colors(Colors& ca, Colors& cb) const {
    std::size_t max_size = 0;
    for (const auto& f : *a_.sets) max_size = std::max(max_size, f.size());
    auto signature = [&](const Side& s, Vertex v) {
      std::vector<int> sig(max_size + 2, 0);
      sig[0] = static_cast<int>(s.neighbours(v).size());
      for (std::size_t i : s.membership[v]) {
        std::size_t k = (*s.sets)[i].size();
        if (k > max_size) return std::vector<int>{-1};
        ++sig[k + 1];
      }
      return sig;
    };
    return assign(ca, cb, signature);
  }

  template <class Signature>
  bool assign(Colors& ca, Colors& cb, Signature&& signature) const {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sa(a_.n), sb(b_.n);
    for (Vertex v : a_.present) ids.emplace(sa[v] = signature(a_, v), 0);
    for (Vertex v : b_.present) ids.emplace(sb[v] = signature(b_, v), 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> count(static_cast<std::size_t>(next), 0);
    for (Vertex v : a_.present) ++count[ca[v] = ids[sa[v]]];
    for (Vertex v : b_.present) --count[cb[v] = ids[sb[v]]];
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 0; });
  }

  static int num_colors(const Colors& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  bool refine(Colors& ca, Colors& cb) const {
    int colors = num_colors(ca);
    for (;;) {
      auto signature = [&](const Side& s, Vertex v) {
        const Colors& c = (&s == &a_) ? ca : cb;
        std::vector<int> sig{c[v]};
        std::vector<int> nb;
        for (Vertex w : s.neighbours(v)) nb.push_back(c[w]);
        std::sort(nb.begin(), nb.end());
        sig.insert(sig.end(), nb.begin(), nb.end());
        if (use_facets_) {
          std::vector<std::vector<int>> around;
          for (std::size_t i : s.membership[v]) {
            std::vector<int> fc;
            for (Vertex w : (*s.sets)[i])
              if (w != v) fc.push_back(c[w]);
            std::sort(fc.begin(), fc.end());
            around.push_back(std::move(fc));
          }
          std::sort(around.begin(), around.end());
          for (auto& fc : around) {
            sig.push_back(-1);
            sig.insert(sig.end(), fc.begin(), fc.end());
          }
        }
        return sig;
      };
      if (!assign(ca, cb, signature)) return false;
      int now = num_colors(ca);
      if (now == colors) return true;
      colors = now;
    }
  }

  bool consistent(Vertex a, Vertex b) const {
    for (Vertex w : a_.neighbours(a))
      if (fwd_[w] != kNoVertex && !b_.adj(b, fwd_[w])) return false;
    for (Vertex w : b_.neighbours(b))
      if (bwd_[w] != kNoVertex && !a_.adj(a, bwd_[w])) return false;
    return true;
  }

  bool verify() const {
    for (const auto& facet : *a_.sets) {
      std::vector<Vertex> img;
      img.reserve(facet.size());
      for (Vertex v : facet) img.push_back(fwd_[v]);
      std::sort(img.begin(), img.end());
      if (!target_.contains(Simplex::from_sorted(std::move(img)))) return false;
    }
    return true;
  }

  void descend(std::size_t depth, const Colors& ca, const Colors& cb) {
    if (found_.size() >= limit_) return;
    if (depth == a_.present.size()) {
      if (verify()) found_.push_back(VertexBijection(fwd_, bwd_));
      return;
    }
    const Vertex a = a_.present[depth];
    const int fresh = num_colors(ca);
    for (Vertex b : b_.present) {
      if (cb[b] != ca[a] || bwd_[b] != kNoVertex || !consistent(a, b)) continue;
      Colors na = ca, nb = cb;
      na[a] = fresh;
      nb[b] = fresh;
      if (!refine(na, nb)) continue;
      fwd_[a] = b;
      bwd_[b] = a;
      descend(depth + 1, na, nb);
      fwd_[a] = kNoVertex;
      bwd_[b] = kNoVertex;
      if (found_.size() >= limit_) return;
    }
  }

  Side a_, b_;
  std::size_t limit_;
  bool use_facets_ = true;
  std::unordered_set<Simplex, SimplexHash> target_;
  std::vector<Vertex> fwd_, bwd_;
  std::vector<VertexBijection> found_;
};

}  // namespace

ComplexDescription ComplexDescription::of(const FacetComplex& fc) {
  return {fc.universe_size(), fc.vertices(), &fc.adjacency(), &fc.facets()};
}

std::vector<VertexBijection> enumerate_isomorphisms(const ComplexDescription& a,
                                                    const ComplexDescription& b,
                                                    std::size_t limit) {
  if (limit == 0) return {};
  if (a.adjacency->size() < a.universe_size || b.adjacency->size() < b.universe_size)
    throw PreconditionError("adjacency does not cover the vertex universe");
  return Search(a, b, limit).run();
}

std::vector<VertexBijection> enumerate_isomorphisms(const FacetComplex& a,
                                                    const FacetComplex& b,
                                                    std::size_t limit) {
  return enumerate_isomorphisms(ComplexDescription::of(a),
                                ComplexDescription::of(b), limit);
}

std::optional<VertexBijection> find_isomorphism(const FacetComplex& a,
                                                const FacetComplex& b) {
  auto all = enumerate_isomorphisms(a, b, 1);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::optional<VertexBijection> find_isomorphism(const SimplicialComplex& k,
                                                const SimplicialComplex& l) {
  if (k.size() != l.size() || k.f_vector() != l.f_vector()) return std::nullopt;
  return find_isomorphism(k.facet_complex(), l.facet_complex());
}

SimplicialComplex relabel(const SimplicialComplex& k, const VertexBijection& f,
                          std::vector<std::string> target_labels) {
  std::vector<Simplex> faces;
  faces.reserve(k.facets().size());
  for (const auto& s : k.facets()) faces.push_back(f.apply(s));
  return closure(faces, std::move(target_labels));
}

}  // namespace dmt
