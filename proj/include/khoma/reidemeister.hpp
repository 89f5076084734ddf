#pragma once

// Diagram surgery: splicing out crossings, Reidemeister moves, connected sums. Every edit is
// carried out on a port graph and re-serialised with canonical arc numbering.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "khoma/linkdiag.hpp"
#include "khoma/planar.hpp"

namespace khoma {

namespace detail {

class Skeleton {
 public:
  static constexpr long long kNoKey = LLONG_MAX;

  explicit Skeleton(const LinkDiagram& d) : free_loops_(d.free_loops()) {
    for (int k = 0; k < d.crossing_count(); ++k) add_crossing();
    for (int label = 1; label <= d.arc_count(); ++label)
      connect(d.arc_tail(label), d.arc_head(label), key(label, 0), true);
  }

  static long long key(int label, int sub) { return 4LL * label + sub; }

  int add_crossing() {
    const int k = static_cast<int>(alive_.size());
    alive_.push_back(true);
    for (int p = 0; p < 4; ++p) {
      mate_.push_back(-1);
      key_.push_back(kNoKey);
      pref_.push_back(0);
      splice_.push_back(-1);
    }
    return k;
  }

  /// Join ports u and v by an arc; if `oriented`, the arc runs u -> v.
  void connect(int u, int v, long long k, bool oriented) {
    mate_[u] = v;
    mate_[v] = u;
    key_[u] = key_[v] = k;
    pref_[u] = oriented ? +1 : 0;
    pref_[v] = oriented ? -1 : 0;
  }

  int mate(int port) const { return mate_[port]; }
  bool alive(int k) const { return alive_[k]; }

  /// Delete crossing k; strands entering position p continue out of position pairing[p].
  void remove(int k, const std::array<int, 4>& pairing) {
    alive_[k] = false;
    for (int p = 0; p < 4; ++p) splice_[port_id(k, p)] = port_id(k, pairing[p]);
  }

  void add_free_loops(int delta) { free_loops_ += delta; }

  LinkDiagram rebuild() const;

 private:
  std::vector<bool> alive_;
  std::vector<int> mate_;
  std::vector<long long> key_;
  std::vector<int> pref_;  // +1: arc leaves this port; -1: arc arrives here
  std::vector<int> splice_;
  int free_loops_ = 0;
};

inline LinkDiagram Skeleton::rebuild() const {
  const int ports = static_cast<int>(mate_.size());
  auto alive_port = [&](int p) { return alive_[port_crossing(p)]; };

  // Resolve chains through removed crossings into direct arcs.
  std::vector<int> mate(ports, -1), pref(ports, 0);
  std::vector<long long> key(ports, kNoKey);
  std::vector<bool> used(ports, false);
  for (int s = 0; s < ports; ++s) {
    if (!alive_port(s) || mate[s] >= 0) continue;
    long long min_key = kNoKey, pref_key = kNoKey;
    int walk_pref = 0;
    int cur = s, t;
    while (true) {
      used[cur] = true;
      min_key = std::min(min_key, key_[cur]);
      if (pref_[cur] != 0 && key_[cur] < pref_key) {
        pref_key = key_[cur];
        walk_pref = pref_[cur];
      }
      t = mate_[cur];
      used[t] = true;
      if (alive_port(t)) break;
      cur = splice_[t];
    }
    mate[s] = t;
    mate[t] = s;
    key[s] = key[t] = min_key;
    pref[s] = walk_pref;
    pref[t] = -walk_pref;
  }
  int loops = free_loops_;
  for (int s = 0; s < ports; ++s) {
    if (used[s] || alive_port(s)) continue;
    for (int cur = s; !used[cur]; cur = splice_[mate_[cur]]) {
      used[cur] = true;
      used[mate_[cur]] = true;
    }
    ++loops;
  }

  // Compact surviving crossings.
  std::vector<int> new_index(alive_.size(), -1);
  int n = 0;
  for (std::size_t k = 0; k < alive_.size(); ++k)
    if (alive_[k]) new_index[k] = n++;

  // Orient each strand component by its smallest-keyed arc with a preferred direction.
  std::vector<int> head_of(ports, 0);  // +1 port is a head, -1 a tail
  struct Comp {
    long long min_key;
    int min_port;
    std::vector<int> tails;  // tail port of each arc in travel order
  };
  std::vector<Comp> comps;
  std::vector<bool> seen(ports, false);
  for (int s = 0; s < ports; ++s) {
    if (!alive_port(s) || seen[s]) continue;
    std::vector<int> tails;
    long long best = kNoKey;
    int best_dir = 0;
    long long min_key = kNoKey;
    for (int cur = s; !seen[cur];) {
      const int h = mate[cur];
      seen[cur] = seen[h] = true;
      tails.push_back(cur);
      min_key = std::min(min_key, key[cur]);
      if (pref[cur] != 0 && key[cur] < best) {
        best = key[cur];
        best_dir = pref[cur];
      }
      cur = port_opposite(h);
    }
    if (best_dir < 0) {
      std::vector<int> rev;
      for (auto it = tails.rbegin(); it != tails.rend(); ++it) rev.push_back(mate[*it]);
      tails = rev;
    }
    int min_port = INT_MAX;
    for (int t : tails) {
      head_of[t] = -1;
      head_of[mate[t]] = +1;
      min_port = std::min({min_port, t, mate[t]});
    }
    comps.push_back({min_key, min_port, std::move(tails)});
  }

  // Rotate crossings so the incoming under-strand sits at position 0.
  std::vector<int> rotation(alive_.size(), 0);
  for (std::size_t k = 0; k < alive_.size(); ++k)
    if (alive_[k] && head_of[port_id(static_cast<int>(k), 2)] > 0) rotation[k] = 2;
  auto final_port = [&](int p) {
    const int k = port_crossing(p);
    return port_id(new_index[k], (port_position(p) + 4 - rotation[k]) % 4);
  };

  std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
    return a.min_key != b.min_key ? a.min_key < b.min_key : a.min_port < b.min_port;
  });
  std::vector<std::array<int, 4>> tuples(n);
  std::vector<int> expected_head;  // by label
  int next_label = 1;
  expected_head.push_back(-1);
  for (const auto& c : comps) {
    const int len = static_cast<int>(c.tails.size());
    int start = 0;
    for (int i = 1; i < len; ++i) {
      const long long ki = key[c.tails[i]], ks = key[c.tails[start]];
      if (ki < ks || (ki == ks && final_port(c.tails[i]) < final_port(c.tails[start]))) start = i;
    }
    bool under = false;
    for (int t : c.tails) under = under || port_position(final_port(mate[t])) == 0;
    if (len == 2 && !under && final_port(mate[c.tails[start]]) > final_port(c.tails[start])) start = 1 - start;
    for (int i = 0; i < len; ++i) {
      const int t = c.tails[(start + i) % len];
      const int ft = final_port(t), fh = final_port(mate[t]);
      tuples[port_crossing(ft)][port_position(ft)] = next_label;
      tuples[port_crossing(fh)][port_position(fh)] = next_label;
      expected_head.push_back(fh);
      ++next_label;
    }
  }
  LinkDiagram out = LinkDiagram::from_crossings(tuples, loops);
  for (int label = 1; label <= out.arc_count(); ++label)
    if (out.arc_head(label) != expected_head[label])
      fail(ErrorCode::InconsistentOrientation, "internal error: orientation lost while renumbering arcs");
  return out;
}

}  // namespace detail

enum class MoveKind { R1Plus, R1Minus, R2, R1Inverse, R2Inverse };

inline std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R2: return "R2";
    case MoveKind::R1Inverse: return "R1inverse";
    case MoveKind::R2Inverse: return "R2inverse";
  }
  return "?";
}

/// A move site. R1+/R1- add a kink on `arc` (labels past 2n address free loops); `left` picks
/// which side: the new crossing is met under-strand first when true. R2 pushes `arc` across the
/// face on its left (`left`) or right and over (`over`) or under `arc2`. The inverse moves
/// remove the kink whose loop is `arc`, or the bigon bounded by `arc`.
struct ReidemeisterMove {
  MoveKind kind = MoveKind::R1Plus;
  int arc = 1;
  int arc2 = 0;
  bool left = true;
  bool over = true;

  std::string describe() const {
    std::string s(to_string(kind));
    s += " arc " + std::to_string(arc);
    if (kind == MoveKind::R2) s += " across arc " + std::to_string(arc2) + (over ? " over" : " under");
    if (kind == MoveKind::R1Plus || kind == MoveKind::R1Minus || kind == MoveKind::R2) s += left ? " left" : " right";
    return s;
  }
};

namespace detail {

inline LinkDiagram add_kink(const LinkDiagram& d, const ReidemeisterMove& m) {
  const int arcs = d.arc_count();
  if (m.arc < 1 || m.arc > arcs + d.free_loops())
    fail(ErrorCode::SiteMismatch, "no arc or free loop " + std::to_string(m.arc));
  Skeleton sk(d);
  const int k = sk.add_crossing();
  // Positions of the incoming piece, the loop's two ends (exit, return) and the outgoing piece.
  int in, loop_out, loop_in, out;
  const bool positive = m.kind == MoveKind::R1Plus;
  if (positive) {
    if (m.left) in = 0, loop_out = 2, loop_in = 3, out = 1;
    else in = 3, loop_out = 1, loop_in = 0, out = 2;
  } else {
    if (m.left) in = 0, loop_out = 2, loop_in = 1, out = 3;
    else in = 1, loop_out = 3, loop_in = 0, out = 2;
  }
  const int label = m.arc > arcs ? arcs + 1 : m.arc;
  sk.connect(port_id(k, loop_out), port_id(k, loop_in), Skeleton::key(label, 1), true);
  if (m.arc > arcs) {
    sk.connect(port_id(k, out), port_id(k, in), Skeleton::key(label, 0), true);
    sk.add_free_loops(-1);
  } else {
    sk.connect(d.arc_tail(m.arc), port_id(k, in), Skeleton::key(label, 0), true);
    sk.connect(port_id(k, out), d.arc_head(m.arc), Skeleton::key(label, 2), true);
  }
  return sk.rebuild();
}

inline LinkDiagram remove_kink(const LinkDiagram& d, const ReidemeisterMove& m) {
  if (m.arc < 1 || m.arc > d.arc_count()) fail(ErrorCode::SiteMismatch, "no arc " + std::to_string(m.arc));
  const int t = d.arc_tail(m.arc), h = d.arc_head(m.arc);
  const int gap = (port_position(h) - port_position(t) + 4) % 4;
  if (port_crossing(t) != port_crossing(h) || gap % 2 == 0)
    fail(ErrorCode::SiteMismatch, "arc " + std::to_string(m.arc) + " is not a kink loop");
  const int k = port_crossing(t), a = port_position(t), b = port_position(h);
  std::array<int, 4> pairing{};
  std::vector<int> rest;
  for (int p = 0; p < 4; ++p)
    if (p != a && p != b) rest.push_back(p);
  pairing[a] = b;
  pairing[b] = a;
  pairing[rest[0]] = rest[1];
  pairing[rest[1]] = rest[0];
  Skeleton sk(d);
  sk.remove(k, pairing);
  sk.add_free_loops(-1);
  return sk.rebuild();
}

inline LinkDiagram add_bigon(const LinkDiagram& d, const ReidemeisterMove& m) {
  const int arcs = d.arc_count();
  if (m.arc < 1 || m.arc > arcs || m.arc2 < 1 || m.arc2 > arcs || m.arc == m.arc2)
    fail(ErrorCode::SiteMismatch, "R2 needs two distinct arcs of the diagram");
  PlanarEmbedding emb(d);
  const int dx = dart_of(m.arc, !m.left);
  const int face = emb.face_of_dart(dx);
  int dy = -1;
  for (bool back : {false, true})
    if (dy < 0 && emb.face_of_dart(dart_of(m.arc2, back)) == face) dy = dart_of(m.arc2, back);
  if (dy < 0)
    fail(ErrorCode::SiteMismatch,
         "arcs " + std::to_string(m.arc) + " and " + std::to_string(m.arc2) + " do not share the chosen face");

  // Along each dart the arc splits into pieces 1, 2, 3; endpoints in dart order.
  auto ends = [&](int dart) {
    const int label = dart_label(dart);
    return dart_backward(dart) ? std::pair{d.arc_head(label), d.arc_tail(label)}
                               : std::pair{d.arc_tail(label), d.arc_head(label)};
  };
  auto [x_from, x_to] = ends(dx);
  auto [y_from, y_to] = ends(dy);

  Skeleton sk(d);
  const int pl = sk.add_crossing(), pr = sk.add_crossing();
  // Positions of the pieces at the two new crossings.
  int x1, x2l, x2r, x3, y1, y2r, y2l, y3;
  if (m.over) {
    y2l = 0, x2l = 1, y3 = 2, x1 = 3;
    y1 = 0, x2r = 1, y2r = 2, x3 = 3;
  } else {
    x1 = 0, y2l = 1, x2l = 2, y3 = 3;
    x2r = 0, y2r = 1, x3 = 2, y1 = 3;
  }
  auto piece = [&](int dart, int from, int to, int index) {
    const bool back = dart_backward(dart);
    const int sub = back ? 2 - index : index;
    if (back) sk.connect(to, from, Skeleton::key(dart_label(dart), sub), true);
    else sk.connect(from, to, Skeleton::key(dart_label(dart), sub), true);
  };
  piece(dx, x_from, port_id(pl, x1), 0);
  piece(dx, port_id(pl, x2l), port_id(pr, x2r), 1);
  piece(dx, port_id(pr, x3), x_to, 2);
  piece(dy, y_from, port_id(pr, y1), 0);
  piece(dy, port_id(pr, y2r), port_id(pl, y2l), 1);
  piece(dy, port_id(pl, y3), y_to, 2);
  return sk.rebuild();
}

inline LinkDiagram remove_bigon(const LinkDiagram& d, const ReidemeisterMove& m) {
  if (m.arc < 1 || m.arc > d.arc_count()) fail(ErrorCode::SiteMismatch, "no arc " + std::to_string(m.arc));
  const int p = port_crossing(d.arc_tail(m.arc)), q = port_crossing(d.arc_head(m.arc));
  if (p == q) fail(ErrorCode::SiteMismatch, "arc " + std::to_string(m.arc) + " does not join two crossings");
  PlanarEmbedding emb(d);
  auto is_over = [](int port) { return port_position(port) % 2 == 1; };
  const bool x_over = is_over(d.arc_tail(m.arc));
  bool found = false;
  for (bool back : {false, true}) {
    const auto& darts = emb.face_darts(emb.face_of_dart(dart_of(m.arc, back)));
    if (darts.size() != 2) continue;
    const int y = dart_label(darts[0]) == m.arc ? dart_label(darts[1]) : dart_label(darts[0]);
    if (y == m.arc) continue;
    if (is_over(d.arc_head(m.arc)) != x_over) continue;
    if (is_over(d.arc_tail(y)) == x_over || is_over(d.arc_head(y)) == x_over) continue;
    found = true;
  }
  if (!found) fail(ErrorCode::SiteMismatch, "arc " + std::to_string(m.arc) + " does not bound a removable bigon");
  Skeleton sk(d);
  sk.remove(p, {2, 3, 0, 1});
  sk.remove(q, {2, 3, 0, 1});
  return sk.rebuild();
}

}  // namespace detail

inline LinkDiagram apply_reidemeister(const LinkDiagram& d, const ReidemeisterMove& m) {
  switch (m.kind) {
    case MoveKind::R1Plus:
    case MoveKind::R1Minus: return detail::add_kink(d, m);
    case MoveKind::R1Inverse: return detail::remove_kink(d, m);
    case MoveKind::R2: return detail::add_bigon(d, m);
    case MoveKind::R2Inverse: return detail::remove_bigon(d, m);
  }
  fail(ErrorCode::InvalidArgument, "unknown move");
}

/// Replace crossing c by its `bit`-smoothing. Strands whose orientation no longer fits are
/// re-oriented by their smallest original arc label.
inline LinkDiagram resolve_crossing(const LinkDiagram& d, int c, int bit) {
  if (c < 0 || c >= d.crossing_count()) fail(ErrorCode::IndexOutOfRange, "no crossing " + std::to_string(c));
  if (bit != 0 && bit != 1) fail(ErrorCode::InvalidArgument, "smoothing bit must be 0 or 1");
  detail::Skeleton sk(d);
  sk.remove(c, bit == 0 ? std::array<int, 4>{1, 0, 3, 2} : std::array<int, 4>{3, 2, 1, 0});
  return sk.rebuild();
}

/// Band sum of two knot diagrams at the given arcs.
inline LinkDiagram connected_sum(const LinkDiagram& a, int arc_a, const LinkDiagram& b, int arc_b) {
  for (const auto* d : {&a, &b})
    if (d->component_count() != 1)
      fail(ErrorCode::NotAKnot, "connected sum needs knot diagrams, got " + std::to_string(d->component_count()) +
                                    " components");
  auto check_arc = [](const LinkDiagram& d, int arc) {
    if (arc < 1 || arc > std::max(1, d.arc_count()))
      fail(ErrorCode::IndexOutOfRange, "no arc " + std::to_string(arc) + " in connected sum operand");
  };
  check_arc(a, arc_a);
  check_arc(b, arc_b);
  if (a.crossing_count() == 0) return b;
  if (b.crossing_count() == 0) return a;
  LinkDiagram u = disjoint_union(a, b);
  const int shift = a.arc_count();
  detail::Skeleton sk(u);
  const int t1 = u.arc_tail(arc_a), h1 = u.arc_head(arc_a);
  const int t2 = u.arc_tail(arc_b + shift), h2 = u.arc_head(arc_b + shift);
  sk.connect(t1, h2, detail::Skeleton::key(arc_a, 0), true);
  sk.connect(t2, h1, detail::Skeleton::key(arc_b + shift, 0), true);
  return sk.rebuild();
}

/// A bounded, deterministic family of applicable moves for invariance testing.
inline std::vector<ReidemeisterMove> generate_moves(const LinkDiagram& d, int max_moves = 1 << 20) {
  std::vector<ReidemeisterMove> out;
  auto push = [&](const ReidemeisterMove& m) {
    if (static_cast<int>(out.size()) >= max_moves) return;
    for (const auto& o : out)
      if (o.kind == m.kind && o.arc == m.arc && o.arc2 == m.arc2 && o.left == m.left && o.over == m.over) return;
    out.push_back(m);
  };
  const int sites = d.arc_count() + d.free_loops();
  if (sites > 0)
    for (auto kind : {MoveKind::R1Plus, MoveKind::R1Minus})
      for (bool left : {true, false}) push({kind, 1, 0, left, true});
  for (int x = 1; x <= sites; ++x) {
    push({MoveKind::R1Plus, x, 0, x % 2 == 0, true});
    push({MoveKind::R1Minus, x, 0, x % 2 == 1, true});
  }
  if (d.crossing_count() > 0) {
    PlanarEmbedding emb(d);
    for (int f = 0; f < emb.face_count(); ++f) {
      const auto& darts = emb.face_darts(f);
      const int x = dart_label(darts[0]);
      for (std::size_t i = 1; i < darts.size(); ++i) {
        const int y = dart_label(darts[i]);
        if (y == x) continue;
        push({MoveKind::R2, x, y, !dart_backward(darts[0]), f % 2 == 0});
        break;
      }
    }
  }
  for (int x = 1; x <= d.arc_count(); ++x) {
    for (auto kind : {MoveKind::R1Inverse, MoveKind::R2Inverse}) {
      try {
        ReidemeisterMove m{kind, x, 0, true, true};
        (void)apply_reidemeister(d, m);
        push(m);
      } catch (const Error&) {
      }
    }
  }
  return out;
}

}  // namespace khoma
