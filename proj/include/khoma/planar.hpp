#pragma once

// Face structure of the 4-valent plane graph underlying a diagram, and the nesting and
// rotation data of smoothing circles derived from it.

#include <cstdint>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "khoma/linkdiag.hpp"

namespace khoma {

/// Darts are arcs with a travel direction: 2 * (label - 1) for the orientation, +1 against it.
constexpr int dart_of(int label, bool backward) { return 2 * (label - 1) + (backward ? 1 : 0); }
constexpr int dart_label(int dart) { return dart / 2 + 1; }
constexpr bool dart_backward(int dart) { return dart & 1; }

class PlanarEmbedding {
 public:
  /// `outer_hint` is empty (largest face per connected piece), `+a` (face left of arc a) or `-a`.
  explicit PlanarEmbedding(const LinkDiagram& d, std::string_view outer_hint = "") : d_(&d) {
    const int darts = 2 * d.arc_count();
    face_of_dart_.assign(darts, -1);
    for (int start = 0; start < darts; ++start) {
      if (face_of_dart_[start] >= 0) continue;
      const int f = static_cast<int>(faces_.size());
      faces_.emplace_back();
      for (int dart = start; face_of_dart_[dart] < 0; dart = next_dart(dart)) {
        face_of_dart_[dart] = f;
        faces_[f].push_back(dart);
      }
    }

    // Connected pieces of the crossing graph; each must satisfy V - E + F = 2.
    const int n = d.crossing_count();
    detail::UnionFind uf(n);
    for (int label = 1; label <= d.arc_count(); ++label)
      uf.unite(port_crossing(d.arc_tail(label)), port_crossing(d.arc_head(label)));
    piece_of_crossing_.assign(n, -1);
    std::vector<int> vertices;
    for (int k = 0; k < n; ++k) {
      int r = uf.find(k);
      if (piece_of_crossing_[r] < 0) {
        piece_of_crossing_[r] = piece_count_++;
        vertices.push_back(0);
      }
      piece_of_crossing_[k] = piece_of_crossing_[r];
      vertices[piece_of_crossing_[k]]++;
    }
    std::vector<int> face_counts(piece_count_, 0);
    piece_of_face_.resize(faces_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      piece_of_face_[f] = piece_of_crossing_[port_crossing(d.arc_head(dart_label(faces_[f][0])))];
      face_counts[piece_of_face_[f]]++;
    }
    for (int p = 0; p < piece_count_; ++p)
      if (face_counts[p] != vertices[p] + 2)
        fail(ErrorCode::AmbiguousEmbedding, "diagram is not planar: " + std::to_string(vertices[p]) + " crossings but " +
                                                std::to_string(face_counts[p]) + " faces");

    outer_.assign(piece_count_, -1);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      int& o = outer_[piece_of_face_[f]];
      if (o < 0 || faces_[f].size() > faces_[o].size()) o = static_cast<int>(f);
    }
    if (!outer_hint.empty()) {
      const char side = outer_hint[0];
      std::string_view digits = outer_hint.substr(1);
      if ((side != '+' && side != '-') || digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string_view::npos || digits.size() > 9)
        fail(ErrorCode::InvalidArgument, "outer face hint must look like +a or -a: " + std::string(outer_hint));
      const int label = std::stoi(std::string(digits));
      if (label < 1 || label > d.arc_count())
        fail(ErrorCode::IndexOutOfRange, "outer face hint names missing arc " + std::to_string(label));
      const int f = side == '+' ? left_face(label) : right_face(label);
      outer_[piece_of_face_[f]] = f;
    }
  }

  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<int>& face_darts(int f) const { return faces_.at(f); }
  int face_of_dart(int dart) const { return face_of_dart_.at(dart); }
  int left_face(int label) const { return face_of_dart_.at(dart_of(label, false)); }
  int right_face(int label) const { return face_of_dart_.at(dart_of(label, true)); }
  int piece_count() const { return piece_count_; }
  int piece_of_face(int f) const { return piece_of_face_.at(f); }
  int piece_of_crossing(int k) const { return piece_of_crossing_.at(k); }
  const std::vector<int>& outer_faces() const { return outer_; }

  /// Port a dart arrives at.
  int arrival_port(int dart) const {
    return dart_backward(dart) ? d_->arc_tail(dart_label(dart)) : d_->arc_head(dart_label(dart));
  }
  /// The dart arriving at `port`.
  int dart_into(int port) const {
    const int label = d_->label_at(port);
    return dart_of(label, d_->arc_head(label) != port);
  }
  /// Face between positions p and p + 1 at crossing k.
  int sector(int k, int p) const { return face_of_dart_[dart_into(port_id(k, (p + 1) % 4))]; }

 private:
  // Keep the face on the left: arriving at position p, leave through position p + 3.
  int next_dart(int dart) const {
    const int port = arrival_port(dart);
    const int out = port_id(port_crossing(port), (port_position(port) + 3) % 4);
    const int label = d_->label_at(out);
    return dart_of(label, d_->arc_tail(label) != out);
  }

  const LinkDiagram* d_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_dart_;
  std::vector<int> piece_of_face_, piece_of_crossing_;
  std::vector<int> outer_;
  int piece_count_ = 0;
};

struct CircleGeometry {
  std::vector<int> depth;  // circles separating the circle from the unbounded region
  std::vector<bool> counterclockwise;
};

/// Nesting (and, if `orient`, rotation sense) of the circles of state `s`. In orientation mode,
/// components in `reversed` are traversed against their original direction.
inline CircleGeometry circle_geometry(const LinkDiagram& d, const PlanarEmbedding& emb, State s,
                                      bool orient = false, std::uint64_t reversed = 0) {
  const Smoothing sm = resolve_state(d, s);
  const int faces = emb.face_count();
  detail::UnionFind regions(faces + 1);  // slot `faces` is the unbounded region
  for (int f : emb.outer_faces()) regions.unite(f, faces);
  for (int k = 0; k < d.crossing_count(); ++k) {
    if (s.at(k) == 0) regions.unite(emb.sector(k, 1), emb.sector(k, 3));
    else regions.unite(emb.sector(k, 0), emb.sector(k, 2));
  }
  const int circles = sm.circle_count;
  // Bipartite region/circle graph: nodes 0..faces are regions, faces+1+c are circles.
  std::vector<std::vector<int>> adj(faces + 1 + circles);
  std::vector<std::vector<int>> sides(circles);
  for (int label = 1; label <= d.arc_count(); ++label) {
    const int c = sm.circle_of_arc(label);
    for (int f : {emb.left_face(label), emb.right_face(label)}) {
      const int r = regions.find(f);
      bool seen = false;
      for (int x : sides[c]) seen = seen || x == r;
      if (!seen) {
        sides[c].push_back(r);
        adj[r].push_back(faces + 1 + c);
        adj[faces + 1 + c].push_back(r);
      }
    }
  }
  CircleGeometry g;
  g.depth.assign(circles, 0);
  g.counterclockwise.assign(circles, true);
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> bfs;
  const int root = regions.find(faces);
  dist[root] = 0;
  bfs.push(root);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        bfs.push(w);
      }
  }
  for (int c = 0; c < circles; ++c) {
    const int node = faces + 1 + c;
    if (sides[c].empty()) continue;  // free loop, lying in the unbounded region
    if (sides[c].size() != 2 || dist[node] < 0)
      fail(ErrorCode::AmbiguousEmbedding, "circle " + std::to_string(c) + " does not separate two regions");
    g.depth[c] = (dist[node] - 1) / 2;
    for (int r : sides[c])
      if (dist[r] != dist[node] - 1 && dist[r] != dist[node] + 1)
        fail(ErrorCode::AmbiguousEmbedding, "inconsistent nesting of circle " + std::to_string(c));
  }
  if (orient) {
    std::vector<int> verdict(circles, -1);
    for (int label = 1; label <= d.arc_count(); ++label) {
      const int c = sm.circle_of_arc(label);
      const bool back = (reversed >> d.component_of_arc(label)) & 1u;
      const int left = regions.find(back ? emb.right_face(label) : emb.left_face(label));
      const int ccw = dist[left] > dist[faces + 1 + c] ? 1 : 0;
      if (verdict[c] >= 0 && verdict[c] != ccw)
        fail(ErrorCode::AmbiguousEmbedding, "circle " + std::to_string(c) + " is not coherently oriented");
      verdict[c] = ccw;
    }
    // Free loops are drawn counter-clockwise in their original orientation.
    for (int f = 0; f < d.free_loops(); ++f) {
      const int c = sm.circle_of_element[d.arc_count() + f];
      verdict[c] = ((reversed >> d.free_loop_component(f)) & 1u) ? 0 : 1;
    }
    for (int c = 0; c < circles; ++c) g.counterclockwise[c] = verdict[c] != 0;
  }
  return g;
}

inline std::vector<int> nesting_depths(const LinkDiagram& d, State s, std::string_view outer_hint = "") {
  PlanarEmbedding emb(d, outer_hint);
  return circle_geometry(d, emb, s).depth;
}

}  // namespace khoma
