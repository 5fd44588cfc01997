#pragma once

#include <string>

#include "qtl/topology.hpp"

namespace qtl {

/// Graphviz digraph of the covering relation, one edge per cover, edges
/// pointing upward. Node order follows the carrier, so output is
/// deterministic.
std::string hasse_dot(const Quantale& q);

/// Graphviz digraph of the specialization order of a spectrum: an edge
/// q -> p whenever p lies in the closure of {q} and p != q. The empty
/// spectrum yields an empty digraph.
std::string specialization_dot(const Quantale& q, const Spectrum& spectrum);

}  // namespace qtl
