#include "lcmres/complex.hpp"

#include <algorithm>
#include <numeric>

#include "lcmres/errors.hpp"

namespace lcmres {

void FaceList::push_back(std::span<const Vertex> face) {
  data_.insert(data_.end(), face.begin(), face.end());
  ++count_;
}

void FaceList::normalize() {
  const std::size_t k = stride();
  if (k == 0) {
    count_ = std::min<std::size_t>(count_, 1);
    return;
  }
  std::vector<std::size_t> order(count_);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(data_.begin() + a * k, data_.begin() + (a + 1) * k,
                                        data_.begin() + b * k, data_.begin() + (b + 1) * k);
  };
  std::sort(order.begin(), order.end(), less);
  std::vector<Vertex> out;
  out.reserve(data_.size());
  std::size_t kept = 0;
  for (std::size_t idx : order) {
    auto first = data_.begin() + idx * k;
    if (kept > 0 && std::equal(first, first + k, out.end() - k)) continue;
    out.insert(out.end(), first, first + k);
    ++kept;
  }
  data_ = std::move(out);
  count_ = kept;
}

std::optional<std::size_t> FaceList::find(std::span<const Vertex> face) const {
  if (face.size() != stride()) return std::nullopt;
  if (stride() == 0) return count_ ? std::optional<std::size_t>(0) : std::nullopt;
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto f = (*this)[mid];
    if (std::lexicographical_compare(f.begin(), f.end(), face.begin(), face.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count_ && std::ranges::equal((*this)[lo], face)) return lo;
  return std::nullopt;
}

SimplicialComplex::SimplicialComplex(std::size_t vertex_count,
                                     std::vector<std::vector<Vertex>> facets)
    : vertex_count_(vertex_count) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (Vertex v : f)
      if (v >= vertex_count) throw DomainError("facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto& f : facets) {
    bool contained = std::any_of(facets_.begin(), facets_.end(), [&](const auto& g) {
      return std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!contained) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
  if (facets_.empty()) return;  // void
  void_ = false;
  dim_ = -1;
  for (const auto& f : facets_) dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
}

SimplicialComplex SimplicialComplex::empty_complex() {
  return SimplicialComplex(0, {std::vector<Vertex>{}});
}

FaceList SimplicialComplex::faces(int d, std::size_t limit) const {
  FaceList out(d);
  if (void_ || d < -1 || d > dim_) return out;
  if (d == -1) {
    out.push_back({});
    return out;
  }
  const std::size_t k = static_cast<std::size_t>(d + 1);
  std::vector<Vertex> pick(k);
  for (const auto& f : facets_) {
    if (f.size() < k) continue;
    // Enumerate k-subsets of f by index combination.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) pick[i] = f[idx[i]];
      out.push_back(pick);
      if (out.size() > limit) throw ResourceError("simplicial faces", limit, out.size());
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == f.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.normalize();
  return out;
}

OrderComplex::OrderComplex(std::vector<ExponentVector> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), [](const auto& a, const auto& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const std::size_t n = elements_.size();
  above_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (divides(elements_[i], elements_[j])) above_[i].push_back(static_cast<Vertex>(j));
  if (n == 0) return;
  // Longest chain ending at each element; vertex order is a linear extension.
  std::vector<int> height(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex j : above_[i]) height[j] = std::max(height[j], height[i] + 1);
  dim_ = *std::max_element(height.begin(), height.end()) - 1;
}

FaceList OrderComplex::faces(int d, std::size_t limit) const {
  FaceList out(d);
  if (is_void() || d < -1 || d > dim_) return out;
  if (d == -1) {
    out.push_back({});
    return out;
  }
  const std::size_t k = static_cast<std::size_t>(d + 1);
  std::vector<Vertex> chain;
  chain.reserve(k);
  // Depth-first over increasing chains; emitted in lexicographic order.
  auto extend = [&](auto&& self) -> void {
    if (chain.size() == k) {
      out.push_back(chain);
      if (out.size() > limit) throw ResourceError("order complex faces", limit, out.size());
      return;
    }
    for (Vertex w : above_[chain.back()]) {
      chain.push_back(w);
      self(self);
      chain.pop_back();
    }
  };
  for (Vertex v = 0; v < elements_.size(); ++v) {
    chain.assign(1, v);
    extend(extend);
  }
  return out;
}

std::vector<std::vector<Vertex>> OrderComplex::facets(std::size_t limit) const {
  const std::size_t n = elements_.size();
  std::vector<std::vector<Vertex>> covers(n);
  std::vector<bool> has_lower(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex j : above_[i]) {
      // j covers i unless some k sits strictly between them.
      bool between = std::any_of(above_[i].begin(), above_[i].end(), [&](Vertex k) {
        return k != j && k < j && divides(elements_[k], elements_[j]);
      });
      if (!between) {
        covers[i].push_back(j);
        has_lower[j] = true;
      }
    }
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> chain;
  auto walk = [&](auto&& self) -> void {
    const auto& up = covers[chain.back()];
    if (up.empty()) {
      out.push_back(chain);
      if (out.size() > limit) throw ResourceError("maximal chains", limit, out.size());
      return;
    }
    for (Vertex w : up) {
      chain.push_back(w);
      self(self);
      chain.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (has_lower[v]) continue;
    chain.assign(1, v);
    walk(walk);
  }
  return out;
}

std::size_t OrderComplex::component_count() const {
  const std::size_t n = elements_.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex j : above_[i]) {
      auto a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

OrderComplex order_complex(std::vector<ExponentVector> interval) {
  return OrderComplex(std::move(interval));
}

}  // namespace lcmres
