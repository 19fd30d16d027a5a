#include "linkcalc/moves.hpp"

#include <stdexcept>
#include <string>

namespace linkcalc {

namespace {

void check_edge(const LinkDiagram& d, int e) {
  if (e < 0 || e >= d.edge_count())
    throw std::invalid_argument("no edge " + std::to_string(e));
}

// Copy d into a builder, seeding every surviving edge with its current
// head so orientations are preserved verbatim.
DiagramBuilder rebuild_base(const LinkDiagram& d) {
  DiagramBuilder b;
  for (const Crossing& x : d.crossings()) b.crossings.push_back(x.edge);
  for (int e = 0; e < d.edge_count(); ++e) {
    if (d.is_free_loop(e))
      b.free_loops.push_back(e);
    else
      b.flows_into[e] = *d.head(e);
    b.component_label[e] = d.component_of_edge(e);
  }
  return b;
}

void drop_free_loop(DiagramBuilder& b, int e) {
  for (auto it = b.free_loops.begin(); it != b.free_loops.end(); ++it)
    if (*it == e) {
      b.free_loops.erase(it);
      return;
    }
}

}  // namespace

LinkDiagram r1_kink(const LinkDiagram& d, int e, int sign) {
  check_edge(d, e);
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("kink sign must be +1 or -1");

  DiagramBuilder b = rebuild_base(d);
  int loop = d.edge_count();      // the little loop of the curl
  int cont = d.edge_count() + 1;  // continuation toward e's old head
  int nc = static_cast<int>(b.crossings.size());

  if (d.is_free_loop(e)) {
    drop_free_loop(b, e);
    cont = e;  // the strand closes straight back up
  } else {
    auto h = *d.head(e);
    b.crossings[h.first][h.second] = cont;
    b.flows_into[cont] = h;
  }
  // Under-strand runs e -> loop; the loop comes back as the over-strand.
  if (sign > 0)
    b.crossings.push_back({e, cont, loop, loop});
  else
    b.crossings.push_back({e, loop, loop, cont});
  b.flows_into[e] = {nc, 0};
  b.flows_into[loop] = {nc, sign > 0 ? 3 : 1};
  b.component_label[loop] = d.component_of_edge(e);
  b.component_label[cont] = d.component_of_edge(e);
  return LinkDiagram::finalize(b);
}

std::vector<LinkDiagram> r2_pushes(const LinkDiagram& d, int a, int b) {
  check_edge(d, a);
  check_edge(d, b);
  if (a == b) throw std::invalid_argument("cannot push an edge over itself");

  std::vector<LinkDiagram> out;
  // b_first: b's tail end meets the first crossing along a. s1: sign of
  // that first crossing (the second gets -s1, keeping the writhe).
  for (int b_first = 0; b_first < 2; ++b_first) {
    for (int s1 = -1; s1 <= 1; s1 += 2) {
      DiagramBuilder bl = rebuild_base(d);
      int n = d.edge_count();
      int mid_a = n, end_a = n + 1, mid_b = n + 2, end_b = n + 3;
      if (d.is_free_loop(a)) {
        drop_free_loop(bl, a);
        end_a = a;
      } else {
        auto h = *d.head(a);
        bl.crossings[h.first][h.second] = end_a;
        bl.flows_into[end_a] = h;
      }
      if (d.is_free_loop(b)) {
        drop_free_loop(bl, b);
        end_b = b;
      } else {
        auto h = *d.head(b);
        bl.crossings[h.first][h.second] = end_b;
        bl.flows_into[end_b] = h;
      }

      int c1 = static_cast<int>(bl.crossings.size());
      int c2 = c1 + 1;
      auto tuple = [](int s, int u_in, int u_out, int o_in, int o_out) {
        return s > 0 ? std::array<int, 4>{u_in, o_out, u_out, o_in}
                     : std::array<int, 4>{u_in, o_in, u_out, o_out};
      };
      if (b_first) {
        bl.crossings.push_back(tuple(s1, b, mid_b, a, mid_a));
        bl.crossings.push_back(tuple(-s1, mid_b, end_b, mid_a, end_a));
        bl.flows_into[b] = {c1, 0};
        bl.flows_into[mid_b] = {c2, 0};
      } else {
        bl.crossings.push_back(tuple(s1, mid_b, end_b, a, mid_a));
        bl.crossings.push_back(tuple(-s1, b, mid_b, mid_a, end_a));
        bl.flows_into[b] = {c2, 0};
        bl.flows_into[mid_b] = {c1, 0};
      }
      bl.flows_into[a] = {c1, s1 > 0 ? 3 : 1};
      bl.flows_into[mid_a] = {c2, -s1 > 0 ? 3 : 1};
      bl.component_label[mid_a] = d.component_of_edge(a);
      bl.component_label[end_a] = d.component_of_edge(a);
      bl.component_label[mid_b] = d.component_of_edge(b);
      bl.component_label[end_b] = d.component_of_edge(b);

      try {
        out.push_back(LinkDiagram::finalize(bl));
      } catch (const std::runtime_error&) {
        // gluing does not embed in the sphere; skip
      }
    }
  }
  return out;
}

LinkDiagram r2_push(const LinkDiagram& d, int a, int b) {
  std::vector<LinkDiagram> all = r2_pushes(d, a, b);
  if (all.empty())
    throw std::runtime_error("edges " + std::to_string(a) + " and " +
                             std::to_string(b) +
                             " do not bound a common face to push across");
  return all.front();
}

}  // namespace linkcalc
