#pragma once

#include <string>
#include <vector>

#include "ncm/map.hpp"

namespace ncm {

/// Graphviz rendering of the map: one node per concept (id as node name,
/// label attribute from the concept label), real edges labeled with their
/// weight, indeterminate edges dotted and labeled "I". Output order follows
/// concept declaration order and (source, target) index order for edges.
std::string export_dot(const CognitiveMap& map);

/// Aligned text table of the matrix with concept-id headers. Zero cells
/// render "0", indeterminate cells "I", reals with minimal digits.
std::string render_matrix(const AdjacencyMatrix& matrix,
                          const std::vector<std::string>& concept_ids);

}  // namespace ncm
