#include "scount/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "scount/error.hpp"

namespace scount {
namespace {

using Partition = std::vector<std::vector<int>>;

constexpr std::size_t kMaxStoredAutomorphisms = 256;

// Individualization-refinement search for the lexicographically smallest
// adjacency string over all leaves. Siblings that are images of an already
// explored sibling under a known automorphism fixing the current prefix are
// skipped.
class Canonizer {
public:
  Canonizer(const Graph &g, std::span<const int> colors)
      : n_(g.vertex_count()), adj_(g.vertex_count(), 0),
        colors_(colors.begin(), colors.end()) {
    for (const Edge &e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  std::vector<Vertex> run() {
    if (n_ == 0)
      return {};
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i)
      order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return colors_[a] < colors_[b]; });
    Partition p;
    for (int v : order) {
      if (p.empty() || colors_[p.back().front()] != colors_[v])
        p.push_back({});
      p.back().push_back(v);
    }
    std::vector<int> prefix;
    search(std::move(p), prefix);

    std::vector<Vertex> perm(n_);
    for (int i = 0; i < n_; ++i)
      perm[best_order_[i]] = i;
    return perm;
  }

private:
  void refine(Partition &p) const {
    while (true) {
      std::vector<std::uint64_t> masks(p.size(), 0);
      for (std::size_t k = 0; k < p.size(); ++k)
        for (int v : p[k])
          masks[k] |= std::uint64_t{1} << v;

      Partition next;
      next.reserve(n_);
      for (const auto &cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sig;
        sig.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> counts(p.size());
          for (std::size_t k = 0; k < p.size(); ++k)
            counts[k] = std::popcount(adj_[v] & masks[k]);
          sig.emplace_back(std::move(counts), v);
        }
        std::stable_sort(sig.begin(), sig.end(),
                         [](const auto &a, const auto &b) {
                           return a.first < b.first;
                         });
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first)
            next.push_back({});
          next.back().push_back(sig[i].second);
        }
      }
      bool stable = next.size() == p.size();
      p = std::move(next);
      if (stable)
        return;
    }
  }

  std::string leaf_string(const std::vector<int> &order) const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        s.push_back((adj_[order[i]] >> order[j]) & 1 ? '1' : '0');
    return s;
  }

  bool pruned(int v, const std::vector<int> &tried,
              const std::vector<int> &prefix) const {
    for (const auto &a : autos_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int x) { return a[x] == x; });
      if (!fixes)
        continue;
      for (int s : tried)
        if (a[s] == v)
          return true;
    }
    return false;
  }

  void search(Partition p, std::vector<int> &prefix) {
    refine(p);
    if (static_cast<int>(p.size()) == n_) {
      std::vector<int> order(n_);
      for (int i = 0; i < n_; ++i)
        order[i] = p[i].front();
      std::string s = leaf_string(order);
      if (!have_best_ || s < best_) {
        have_best_ = true;
        best_ = std::move(s);
        best_order_ = std::move(order);
      } else if (s == best_ && autos_.size() < kMaxStoredAutomorphisms) {
        std::vector<int> a(n_);
        for (int i = 0; i < n_; ++i)
          a[best_order_[i]] = order[i];
        autos_.push_back(std::move(a));
      }
      return;
    }

    std::size_t target = 0;
    while (p[target].size() == 1)
      ++target;
    const std::vector<int> cell = p[target];
    std::vector<int> tried;
    for (int v : cell) {
      if (pruned(v, tried, prefix))
        continue;
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (k != target) {
          child.push_back(p[k]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int x : cell)
          if (x != v)
            rest.push_back(x);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
      tried.push_back(v);
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> colors_;
  bool have_best_ = false;
  std::string best_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> autos_;
};

} // namespace

std::string CanonicalKey::hex() const {
  static const char *digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2 + 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  if (swap_flag)
    out += ":s";
  return out;
}

CanonicalKey CanonicalKey::from_hex(const std::string &hex) {
  CanonicalKey key;
  std::string body = hex;
  if (body.size() >= 2 && body.substr(body.size() - 2) == ":s") {
    key.swap_flag = true;
    body.resize(body.size() - 2);
  }
  if (body.size() % 2 != 0)
    throw Error(ErrorKind::Parse, "odd-length key");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9')
      return c - '0';
    if (c >= 'a' && c <= 'f')
      return c - 'a' + 10;
    throw Error(ErrorKind::Parse, "bad hex digit in key");
  };
  for (std::size_t i = 0; i < body.size(); i += 2)
    key.bytes.push_back(
        static_cast<char>((nibble(body[i]) << 4) | nibble(body[i + 1])));
  return key;
}

std::vector<Vertex> canonical_labeling(const Graph &g,
                                       std::span<const int> colors) {
  if (g.vertex_count() > 64)
    throw Error(ErrorKind::Domain,
                "canonical labeling supports at most 64 vertices");
  if (static_cast<int>(colors.size()) != g.vertex_count())
    throw Error(ErrorKind::Validation, "color vector has wrong size");
  return Canonizer(g, colors).run();
}

CanonicalKey canonical_key(const Graph &g, const Pins &pins) {
  const int n = g.vertex_count();
  auto in_range = [n](Vertex x) { return x >= 0 && x < n; };
  std::vector<int> colors(n, 0);
  if (pins.base) {
    auto [a, b] = *pins.base;
    if (!in_range(a) || !in_range(b) || a == b)
      throw Error(ErrorKind::Validation, "pinned base pair not in graph");
    colors[a] = colors[b] = 1;
  }
  if (pins.apex) {
    if (!in_range(*pins.apex))
      throw Error(ErrorKind::Validation, "pinned apex not in graph");
    if (colors[*pins.apex] != 0)
      throw Error(ErrorKind::Validation, "apex coincides with a base label");
    colors[*pins.apex] = 2;
  }

  std::vector<Vertex> perm = canonical_labeling(g, colors);
  Graph canon = g.relabeled(perm);

  CanonicalKey key;
  key.bytes.push_back(static_cast<char>(n));
  std::vector<int> relabeled_colors(n);
  for (int x = 0; x < n; ++x)
    relabeled_colors[perm[x]] = colors[x];
  for (int c : relabeled_colors)
    key.bytes.push_back(static_cast<char>(c));

  // Upper-triangle adjacency bits, row-major, packed MSB first.
  std::uint8_t acc = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<std::uint8_t>((acc << 1) | (canon.has_edge(i, j) ? 1 : 0));
      if (++filled == 8) {
        key.bytes.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    key.bytes.push_back(static_cast<char>(acc << (8 - filled)));

  if (pins.base)
    key.swap_flag = perm[pins.base->first] > perm[pins.base->second];
  return key;
}

} // namespace scount
