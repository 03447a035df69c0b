#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ntg/rgs.hpp"
#include "ntg/term_graph.hpp"

namespace ntg {

// A term graph over the first-order interface signature. `atomic` keeps
// the original atomic arities, so constants are listed with arity 0 even
// though their primed versions are unary.
struct FoGraph {
  Arities atomic;
  TermGraph graph;
};

// Requires an ntg.
FoGraph interpret(const Rgs& n);

// The unique ancestor function, or the first vertex where it cannot be
// assigned consistently.
struct AncestorResult {
  std::optional<std::vector<std::vector<VertexId>>> anc;
  std::optional<VertexId> witness;
  std::string reason;
  explicit operator bool() const { return anc.has_value(); }
};

AncestorResult infer_ancestors(const TermGraph& g);

struct Membership {
  bool member = false;
  std::optional<VertexId> witness;
  std::string reason;
  explicit operator bool() const { return member; }
};

Membership is_rg_member(const TermGraph& g);

// Inverse of interpret up to renaming of nested symbols and consistent
// permutation of input indices. Throws PreconditionError outside the RG
// class.
Rgs represent(const FoGraph& g);

// Coarsest homomorphic image of an RG member that is still in RG: the
// bisimulation collapse restricted to merges whose ancestor sequences are
// merged letter by letter. Equals tg_collapse on fully back-linked graphs;
// elsewhere tg_collapse can leave the class, e.g. when two closed cyclic
// bodies at different depths look alike. Throws PreconditionError outside
// RG.
Collapse rg_collapse(const TermGraph& g);

// The maximally shared ntg bisimilar to n.
Rgs ntg_collapse(const Rgs& n);

struct BacklinkCheck {
  bool ok = true;
  std::optional<VertexId> vertex;   // vertex that cannot reach its ancestor
  std::optional<VertexId> ancestor;
};

// Every ancestor of every vertex is reachable from it. Requires RG
// membership.
BacklinkCheck check_fully_backlinked(const TermGraph& g);

}  // namespace ntg
