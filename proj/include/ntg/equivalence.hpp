#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntg/rgs.hpp"

namespace ntg {

// Homomorphisms between ntgs act on the disjoint union of the bodies, with
// vertex ids as in FlatRgs.
struct NtgHomResult {
  std::optional<std::vector<VertexId>> map;
  std::optional<std::pair<VertexId, VertexId>> conflict;
  std::string reason;
  explicit operator bool() const { return map.has_value(); }
};

// Both operands must be ntgs (PreconditionError otherwise). Nested
// symbols may be sent to symbols of smaller arity.
NtgHomResult ntg_hom(const Rgs& n1, const Rgs& n2);
bool verify_ntg_hom(const Rgs& n1, const Rgs& n2, const std::vector<VertexId>& map);

struct PairWitness {
  Rgs ntg;
  // witness vertex (FlatRgs ids) -> related vertex of each operand
  std::vector<VertexId> left, right;
};

struct NtgBisimResult {
  std::optional<PairWitness> witness;
  std::string reason;
  explicit operator bool() const { return witness.has_value(); }
};

// The witness is an ntg over pairs of symbols; both projections are
// checked to be homomorphisms before it is returned.
NtgBisimResult ntg_bisimilar(const Rgs& n1, const Rgs& n2);

struct NtgIsomorphism {
  std::vector<VertexId> vertex_map;
  std::map<std::string, std::string> symbols;
  // symbol of n1 -> image index of each input, 1-based
  std::map<std::string, std::vector<std::uint32_t>> input_permutation;
};

// Equality of ntgs up to vertex identity, renaming of nested symbols and a
// consistent permutation of each symbol's input indices.
std::optional<NtgIsomorphism> ntg_isomorphic(const Rgs& n1, const Rgs& n2);

struct NestedConfig {
  std::vector<VertexId> stack1;
  VertexId v1 = 0;
  std::vector<VertexId> stack2;
  VertexId v2 = 0;
  friend auto operator<=>(const NestedConfig&, const NestedConfig&) = default;
};

struct NestedBisimRelation {
  std::vector<NestedConfig> configs;  // discovery order
  // false when configurations deeper than the bound were left out
  bool exact = true;
  std::size_t max_stack = 0;
};

enum class NestedVerdict { Bisimilar, NotBisimilar, UnknownAtDepth };

struct NestedBisimResult {
  NestedVerdict verdict = NestedVerdict::Bisimilar;
  NestedBisimRelation relation;
  std::optional<NestedConfig> failing;
  std::string reason;
};

// Least relation closed under the nested bisimulation clauses, starting
// from the two body roots of the root symbols. Vertices are FlatRgs ids.
// Exact when both dependency ARSs are acyclic (the depth is then ignored);
// otherwise a depth is required and stacks longer than it are not explored.
NestedBisimResult nested_bisim(const Rgs& r1, const Rgs& r2, std::optional<std::size_t> depth = {});

NestedBisimRelation minimal_nested_self_bisimulation(const Rgs& r, std::optional<std::size_t> depth = {});

struct NestedHomResult {
  NestedVerdict verdict = NestedVerdict::NotBisimilar;  // Bisimilar means a hom exists
  std::vector<NestedConfig> graph;  // the functional relation
  std::string reason;
  explicit operator bool() const { return verdict == NestedVerdict::Bisimilar; }
};

NestedHomResult nested_hom(const Rgs& r1, const Rgs& r2, std::optional<std::size_t> depth = {});

// One nested symbol per pair of stacks in the relation. For a relation
// produced by nested_bisim on two ntgs, both projections are
// homomorphisms.
PairWitness witness_ntg_from_relation(const NestedBisimRelation& rel, const Rgs& r1, const Rgs& r2);

struct CrossCheck {
  bool ntg_hom = false, sntg_hom = false, fo_hom = false, nested_hom = false;
  bool ntg_bisim = false, sntg_bisim = false, fo_bisim = false, nested_bisim = false;
  bool collapses_isomorphic = false;
  bool agree() const;
  std::string str() const;
};

// Decides homomorphism (n1 -> n2) and bisimilarity by every available
// route. Any disagreement is a bug.
CrossCheck cross_check_theorems(const Rgs& n1, const Rgs& n2);

}  // namespace ntg
