#include "catkit/isomorphism.hpp"

#include <algorithm>

namespace catkit {

std::size_t ColoredMultigraph::add_vertex(std::string color) {
  colors_.push_back(std::move(color));
  adj_.emplace_back();
  return colors_.size() - 1;
}

void ColoredMultigraph::add_edge(std::size_t u, std::size_t v) {
  auto bump = [this](std::size_t from, std::size_t to) {
    auto& list = adj_[from];
    auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(to, std::size_t{0}));
    if (it != list.end() && it->first == to) {
      ++it->second;
    } else {
      list.insert(it, {to, 1});
    }
  };
  bump(u, v);
  if (u != v) bump(v, u);
}

namespace {

// Joint view over the disjoint union of the two graphs: vertex v < offset
// belongs to the first graph.
struct Union {
  const ColoredMultigraph& a;
  const ColoredMultigraph& b;
  std::size_t offset;

  std::size_t size() const { return offset + b.size(); }
  bool in_a(std::size_t v) const { return v < offset; }

  template <class Fn>
  void for_neighbours(std::size_t v, Fn&& fn) const {
    if (in_a(v)) {
      for (const auto& [n, m] : a.neighbours(v)) fn(n, m);
    } else {
      for (const auto& [n, m] : b.neighbours(v - offset)) fn(n + offset, m);
    }
  }
};

using Coloring = std::vector<std::size_t>;

std::size_t count_classes(const Coloring& c) {
  std::vector<std::size_t> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

void refine(const Union& u, Coloring& colors) {
  std::size_t classes = count_classes(colors);
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>> sigs(u.size());
    for (std::size_t v = 0; v < u.size(); ++v) {
      auto& sig = sigs[v];
      sig.first = colors[v];
      u.for_neighbours(v, [&](std::size_t n, std::size_t m) { sig.second.emplace_back(colors[n], m); });
      std::sort(sig.second.begin(), sig.second.end());
      ids.emplace(sig, 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < u.size(); ++v) colors[v] = ids.at(sigs[v]);
    if (ids.size() == classes) return;
    classes = ids.size();
  }
}

bool mapping_is_isomorphism(const Union& u, const Coloring& colors) {
  std::map<std::size_t, std::size_t> b_of_color;
  for (std::size_t v = u.offset; v < u.size(); ++v) b_of_color[colors[v]] = v - u.offset;
  std::vector<std::size_t> image(u.offset);
  for (std::size_t v = 0; v < u.offset; ++v) image[v] = b_of_color.at(colors[v]);
  for (std::size_t v = 0; v < u.offset; ++v) {
    std::vector<std::pair<std::size_t, std::size_t>> mapped;
    for (const auto& [n, m] : u.a.neighbours(v)) mapped.emplace_back(image[n], m);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != u.b.neighbours(image[v])) return false;
  }
  return true;
}

bool search(const Union& u, Coloring colors) {
  refine(u, colors);
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> counts;  // color -> (in a, in b)
  for (std::size_t v = 0; v < u.size(); ++v) {
    auto& c = counts[colors[v]];
    (u.in_a(v) ? c.first : c.second) += 1;
  }
  std::size_t pick_color = 0, pick_size = 0;
  for (const auto& [color, c] : counts) {
    if (c.first != c.second) return false;
    if (c.first > 1 && (pick_size == 0 || c.first < pick_size)) {
      pick_size = c.first;
      pick_color = color;
    }
  }
  if (pick_size == 0) return mapping_is_isomorphism(u, colors);

  std::size_t fresh = 0;
  for (std::size_t c : colors) fresh = std::max(fresh, c + 1);
  std::size_t pivot = 0;
  while (colors[pivot] != pick_color) ++pivot;
  for (std::size_t w = u.offset; w < u.size(); ++w) {
    if (colors[w] != pick_color) continue;
    Coloring trial = colors;
    trial[pivot] = fresh;
    trial[w] = fresh;
    if (search(u, std::move(trial))) return true;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const ColoredMultigraph& a, const ColoredMultigraph& b) {
  if (a.size() != b.size()) return false;
  const Union u{a, b, a.size()};
  std::map<std::string, std::size_t> palette;
  Coloring colors(u.size());
  for (std::size_t v = 0; v < u.size(); ++v) {
    const std::string& c = u.in_a(v) ? a.color(v) : b.color(v - u.offset);
    colors[v] = palette.emplace(c, palette.size()).first->second;
  }
  return search(u, std::move(colors));
}

}  // namespace catkit
