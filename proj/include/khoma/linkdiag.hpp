#pragma once

// Oriented link diagrams in PD form. A crossing lists its four arcs counterclockwise starting at
// the incoming under-strand; the under-strand runs a -> c and the over-strand joins b and d.

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "khoma/error.hpp"

namespace khoma {

inline constexpr int kMaxCrossings = 30;

struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Port ids identify a position at a crossing: 4 * crossing + position.
constexpr int port_id(int crossing, int position) { return 4 * crossing + position; }
constexpr int port_crossing(int port) { return port / 4; }
constexpr int port_position(int port) { return port % 4; }
/// The port across the crossing on the same strand.
constexpr int port_opposite(int port) { return port_id(port_crossing(port), (port_position(port) + 2) % 4); }

class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// Validate tuples and infer every strand's orientation from the arc numbering.
  static LinkDiagram from_crossings(const std::vector<std::array<int, 4>>& tuples, int free_loops = 0) {
    LinkDiagram d;
    if (free_loops < 0) fail(ErrorCode::InvalidArgument, "negative free loop count");
    d.free_loops_ = free_loops;
    const int n = static_cast<int>(tuples.size());
    const int arcs = 2 * n;
    std::vector<std::vector<int>> occ(arcs + 1);
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < 4; ++p) {
        int label = tuples[k][p];
        if (label < 1 || label > arcs)
          fail(ErrorCode::ArcLabelUsedWrongMultiplicity,
               "arc label " + std::to_string(label) + " outside 1.." + std::to_string(arcs));
        occ[label].push_back(port_id(k, p));
      }
    for (int label = 1; label <= arcs; ++label)
      if (occ[label].size() != 2)
        fail(ErrorCode::ArcLabelUsedWrongMultiplicity,
             "arc label " + std::to_string(label) + " used " + std::to_string(occ[label].size()) + " times");

    auto label_at = [&](int port) { return tuples[port_crossing(port)][port_position(port)]; };
    auto mate = [&](int port) {
      const auto& o = occ[label_at(port)];
      return o[0] == port ? o[1] : o[0];
    };

    d.tail_.assign(arcs + 1, -1);
    d.head_.assign(arcs + 1, -1);
    d.component_of_arc_.assign(arcs + 1, -1);
    for (int x = 1; x <= arcs; ++x) {
      if (d.component_of_arc_[x] >= 0) continue;
      // Walk the strand through x, assuming x arrives at `start_head`.
      auto walk = [&](int start_head, std::vector<int>& seq, std::vector<int>& heads) {
        seq.clear();
        heads.clear();
        int label = x, head = start_head;
        bool ok = true;
        for (int steps = 0; steps <= arcs; ++steps) {
          seq.push_back(label);
          heads.push_back(head);
          if (label != x + steps) ok = false;
          if (port_position(head) == 2) ok = false;
          int out = port_opposite(head);
          label = label_at(out);
          head = mate(out);
          if (label == x && head == start_head) return ok;
        }
        return false;
      };
      std::vector<int> seq_a, heads_a, seq_b, heads_b;
      const int first = occ[x][0], second = occ[x][1];
      bool ok_a = walk(first, seq_a, heads_a);
      bool ok_b = !ok_a && walk(second, seq_b, heads_b);
      if (!ok_a && !ok_b)
        fail(ErrorCode::InconsistentOrientation,
             "arc numbering through arc " + std::to_string(x) + " is not consecutive along its strand");
      const auto& seq = ok_a ? seq_a : seq_b;
      const auto& heads = ok_a ? heads_a : heads_b;
      const int comp = static_cast<int>(d.components_.size());
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (d.component_of_arc_[seq[i]] >= 0)
          fail(ErrorCode::InconsistentOrientation, "arc " + std::to_string(seq[i]) + " traversed twice");
        d.component_of_arc_[seq[i]] = comp;
        d.head_[seq[i]] = heads[i];
        const auto& o = occ[seq[i]];
        d.tail_[seq[i]] = o[0] == heads[i] ? o[1] : o[0];
      }
      d.components_.push_back(seq);
    }

    d.crossings_.resize(n);
    for (int k = 0; k < n; ++k) {
      d.crossings_[k].arcs = tuples[k];
      if (d.head_[tuples[k][0]] != port_id(k, 0))
        fail(ErrorCode::InconsistentOrientation, "first arc of crossing " + std::to_string(k + 1) + " is not incoming");
      if (d.head_[tuples[k][3]] == port_id(k, 3)) d.crossings_[k].sign = +1;
      else if (d.head_[tuples[k][1]] == port_id(k, 1)) d.crossings_[k].sign = -1;
      else fail(ErrorCode::InconsistentOrientation, "over-strand of crossing " + std::to_string(k + 1) + " has no direction");
    }
    return d;
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  int free_loops() const { return free_loops_; }
  /// Strand components (those meeting a crossing) followed by the free loops.
  int component_count() const { return static_cast<int>(components_.size()) + free_loops_; }
  int strand_component_count() const { return static_cast<int>(components_.size()); }
  /// Arcs of strand component `c` in orientation order.
  const std::vector<int>& component_arcs(int c) const { return components_.at(c); }
  int component_of_arc(int label) const { return component_of_arc_.at(label); }
  /// Component index of free loop `f`.
  int free_loop_component(int f) const { return strand_component_count() + f; }
  /// Port where `label` starts / ends.
  int arc_tail(int label) const { return tail_.at(label); }
  int arc_head(int label) const { return head_.at(label); }
  int label_at(int port) const { return crossings_[port_crossing(port)].arcs[port_position(port)]; }
  int under_component(int k) const { return component_of_arc(crossings_[k].arcs[0]); }
  int over_component(int k) const { return component_of_arc(crossings_[k].arcs[1]); }

  std::vector<std::array<int, 4>> tuples() const {
    std::vector<std::array<int, 4>> t;
    t.reserve(crossings_.size());
    for (const auto& c : crossings_) t.push_back(c.arcs);
    return t;
  }

  bool empty() const { return crossings_.empty() && free_loops_ == 0; }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_arc_, tail_, head_;
};

/// Parse whitespace separated `X(a,b,c,d)` (or `X[a,b,c,d]`) and `O` tokens.
inline LinkDiagram parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> tuples;
  int loops = 0;
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto bad = [&](std::size_t at) {
    std::size_t end = at;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    fail(ErrorCode::MalformedToken, "bad token '" + std::string(text.substr(at, end - at)) + "'");
  };
  while (true) {
    ws();
    if (i >= text.size()) break;
    const std::size_t start = i;
    if (text[i] == 'O') {
      ++i;
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) bad(start);
      ++loops;
      continue;
    }
    if (text[i] != 'X' || i + 1 >= text.size() || (text[i + 1] != '(' && text[i + 1] != '[')) bad(start);
    const char close = text[i + 1] == '(' ? ')' : ']';
    i += 2;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      ws();
      std::size_t digits = i;
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) && v < 1000000000)
        v = 10 * v + (text[i++] - '0');
      if (i == digits || v >= 1000000000) bad(start);
      t[k] = static_cast<int>(v);
      ws();
      const char want = k < 3 ? ',' : close;
      if (i >= text.size() || text[i] != want) bad(start);
      ++i;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) bad(start);
    tuples.push_back(t);
  }
  return LinkDiagram::from_crossings(tuples, loops);
}

inline std::string serialize_pd(const LinkDiagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(c.arcs[0]) + "," + std::to_string(c.arcs[1]) + "," + std::to_string(c.arcs[2]) +
           "," + std::to_string(c.arcs[3]) + ")";
  }
  for (int f = 0; f < d.free_loops(); ++f) out += out.empty() ? "O" : " O";
  return out;
}

struct WritheCounts {
  int n_plus = 0;
  int n_minus = 0;
  int writhe() const { return n_plus - n_minus; }
  friend bool operator==(const WritheCounts&, const WritheCounts&) = default;
};

inline WritheCounts writhe_counts(const LinkDiagram& d) {
  WritheCounts w;
  for (const auto& c : d.crossings()) (c.sign > 0 ? w.n_plus : w.n_minus)++;
  return w;
}

inline void check_component(const LinkDiagram& d, int c) {
  if (c < 0 || c >= d.component_count())
    fail(ErrorCode::ComponentOutOfRange, "component " + std::to_string(c) + " of " + std::to_string(d.component_count()));
}

inline int linking_number(const LinkDiagram& d, int l, int m) {
  check_component(d, l);
  check_component(d, m);
  if (l == m) fail(ErrorCode::SameComponent, "linking number needs two distinct components");
  int sum = 0;
  for (int k = 0; k < d.crossing_count(); ++k) {
    int u = d.under_component(k), o = d.over_component(k);
    if ((u == l && o == m) || (u == m && o == l)) sum += d.crossings()[k].sign;
  }
  return sum / 2;
}

inline LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> t;
  for (const auto& c : d.crossings()) {
    const auto& a = c.arcs;
    // The old over-strand becomes the under-strand; start at its incoming end.
    if (c.sign > 0) t.push_back({a[3], a[0], a[1], a[2]});
    else t.push_back({a[1], a[2], a[3], a[0]});
  }
  return LinkDiagram::from_crossings(t, d.free_loops());
}

inline LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  auto t = a.tuples();
  const int shift = a.arc_count();
  for (auto c : b.tuples()) {
    for (auto& x : c) x += shift;
    t.push_back(c);
  }
  return LinkDiagram::from_crossings(t, a.free_loops() + b.free_loops());
}

/// A word in {0,1}^n; bit c is the smoothing at crossing c.
struct State {
  std::uint32_t bits = 0;
  int n = 0;

  int at(int c) const { return static_cast<int>((bits >> c) & 1u); }
  /// Number of 1-smoothings (r_alpha).
  int weight() const { return std::popcount(bits); }
  State flipped(int c) const { return {bits ^ (1u << c), n}; }
  std::string word() const {
    std::string w(n, '0');
    for (int c = 0; c < n; ++c)
      if (at(c)) w[c] = '1';
    return w;
  }
  static State from_word(std::string_view w) {
    if (w.size() > static_cast<std::size_t>(kMaxCrossings)) fail(ErrorCode::StateSpaceTooLarge, "state too long");
    State s{0, static_cast<int>(w.size())};
    for (std::size_t c = 0; c < w.size(); ++c) {
      if (w[c] == '1') s.bits |= 1u << c;
      else if (w[c] != '0') fail(ErrorCode::Malformed, "state word must be 0/1: " + std::string(w));
    }
    return s;
  }
  friend bool operator==(const State&, const State&) = default;
};

inline void check_state_space(int n) {
  if (n > kMaxCrossings)
    fail(ErrorCode::StateSpaceTooLarge,
         std::to_string(n) + " crossings exceeds the cap of " + std::to_string(kMaxCrossings));
}

/// The i-th state in lexicographic word order (crossing 0 is the leading letter).
inline State state_at(int n, std::uint64_t index) {
  State s{0, n};
  for (int c = 0; c < n; ++c)
    if ((index >> (n - 1 - c)) & 1u) s.bits |= 1u << c;
  return s;
}

inline std::vector<State> enumerate_states(const LinkDiagram& d) {
  const int n = d.crossing_count();
  check_state_space(n);
  std::vector<State> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) out.push_back(state_at(n, i));
  return out;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

/// Circles of a smoothing. Elements are arcs (label - 1) followed by free loops; circles are
/// numbered by their smallest element.
struct Smoothing {
  std::vector<int> circle_of_element;
  int circle_count = 0;

  int circle_of_arc(int label) const { return circle_of_element[label - 1]; }
};

/// Label the classes of `uf` over `elements` by smallest member.
inline Smoothing smoothing_from_classes(detail::UnionFind& uf, int elements) {
  Smoothing s;
  s.circle_of_element.assign(elements, -1);
  std::vector<int> id(elements, -1);
  for (int e = 0; e < elements; ++e) {
    int r = uf.find(e);
    if (id[r] < 0) id[r] = s.circle_count++;
    s.circle_of_element[e] = id[r];
  }
  return s;
}

inline Smoothing resolve_state(const LinkDiagram& d, State s) {
  if (s.n != d.crossing_count()) fail(ErrorCode::InvalidArgument, "state length does not match crossing count");
  const int elements = d.arc_count() + d.free_loops();
  detail::UnionFind uf(elements);
  for (int k = 0; k < d.crossing_count(); ++k) {
    const auto& a = d.crossings()[k].arcs;
    if (s.at(k) == 0) {
      uf.unite(a[0] - 1, a[1] - 1);
      uf.unite(a[2] - 1, a[3] - 1);
    } else {
      uf.unite(a[0] - 1, a[3] - 1);
      uf.unite(a[1] - 1, a[2] - 1);
    }
  }
  return smoothing_from_classes(uf, elements);
}

/// The oriented resolution: positive crossings 0-smoothed, negative 1-smoothed.
inline State oriented_state(const LinkDiagram& d) {
  State s{0, d.crossing_count()};
  for (int k = 0; k < d.crossing_count(); ++k)
    if (d.crossings()[k].sign < 0) s.bits |= 1u << k;
  return s;
}

/// Whether every crossing is positive.
inline bool is_positive(const LinkDiagram& d) {
  return std::all_of(d.crossings().begin(), d.crossings().end(), [](const Crossing& c) { return c.sign > 0; });
}

}  // namespace khoma
