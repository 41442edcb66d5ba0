#pragma once

#include <string>
#include <vector>

#include "hexbrace/graph.hpp"

namespace hexbrace::corpus {

LabeledGraph k4();
LabeledGraph k33();      // classes {0,1,2} and {3,4,5}
LabeledGraph cube();     // Q3 on 0..7, i ~ j iff they differ in one bit
LabeledGraph prism();    // C3 x K2: triangles 0-1-2, 3-4-5, rungs i-(i+3)
LabeledGraph petersen(); // outer 0..4, inner pentagram 5..9, spokes i-(i+5)
// Two copies of K4 with one subdivided edge, the subdivision vertices (4, 9)
// joined by a bridge.
LabeledGraph bridged10();
LabeledGraph cycle(std::size_t n);
LabeledGraph path(std::size_t n);

struct Named {
  std::string name;
  LabeledGraph graph;
};

// K4, K3,3, cube, prism, Petersen.
std::vector<Named> bridgeless();

}  // namespace hexbrace::corpus
