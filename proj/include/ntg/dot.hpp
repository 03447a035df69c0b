#pragma once

#include <string>

#include "ntg/firstorder.hpp"
#include "ntg/rgs.hpp"
#include "ntg/sntg.hpp"

namespace ntg {

// Graphviz renderings. Every edge carries an explicit style: solid for
// arguments and the entry arrow, dashed for call and return links, dotted
// for first-order back-links. Call edges are blue, return edges red.

// One cluster per definition plus a root vertex calling the root body.
// Return links are drawn for definitions with a unique occurrence.
std::string export_dot(const Rgs& r);
std::string export_dot(const Sntg& s);
std::string export_dot(const FoGraph& g);

}  // namespace ntg
