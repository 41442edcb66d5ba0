#include "hexbrace/corpus.hpp"

namespace hexbrace::corpus {

LabeledGraph k4() {
  return LabeledGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

LabeledGraph k33() {
  LabeledGraph g(6);
  for (Vertex a = 0; a < 3; ++a) {
    for (Vertex b = 3; b < 6; ++b) g.add_edge(a, b);
  }
  return g;
}

LabeledGraph cube() {
  LabeledGraph g(8);
  for (Vertex v = 0; v < 8; ++v) {
    for (Vertex bit = 1; bit < 8; bit <<= 1) {
      if (v < (v ^ bit)) g.add_edge(v, v ^ bit);
    }
  }
  return g;
}

LabeledGraph prism() {
  return LabeledGraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                          {0, 3}, {1, 4}, {2, 5}});
}

LabeledGraph petersen() {
  LabeledGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

LabeledGraph bridged10() {
  LabeledGraph g(10);
  for (Vertex base : {0u, 5u}) {
    // K4 on base..base+3 with edge (base, base+1) subdivided by base+4.
    g.add_edge(base, base + 4);
    g.add_edge(base + 4, base + 1);
    g.add_edge(base, base + 2);
    g.add_edge(base, base + 3);
    g.add_edge(base + 1, base + 2);
    g.add_edge(base + 1, base + 3);
    g.add_edge(base + 2, base + 3);
  }
  g.add_edge(4, 9);
  return g;
}

LabeledGraph cycle(std::size_t n) {
  LabeledGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return g;
}

LabeledGraph path(std::size_t n) {
  LabeledGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return g;
}

std::vector<Named> bridgeless() {
  return {{"K4", k4()},
          {"K3,3", k33()},
          {"cube", cube()},
          {"prism", prism()},
          {"Petersen", petersen()}};
}

}  // namespace hexbrace::corpus
