#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ntg/rgs.hpp"
#include "ntg/term_graph.hpp"

namespace ntg {

// Term graph over the full signature plus call, return and ancestor maps.
struct Sntg {
  std::vector<Label> labels;
  std::vector<std::vector<VertexId>> args;
  std::vector<std::optional<VertexId>> call;
  std::vector<std::optional<VertexId>> ret;
  std::vector<std::vector<VertexId>> anc;
  std::vector<std::string> names;
  VertexId root = 0;

  std::size_t size() const { return labels.size(); }
  // The underlying term graph (args only).
  TermGraph term_graph() const;
};

enum class SntgCondition { Root, Nested, Arguments, Defined, StepInto, StepOut };

const char* condition_name(SntgCondition c);

struct SntgViolation {
  SntgCondition condition;
  std::vector<VertexId> witnesses;
  std::string message;
};

std::vector<SntgViolation> check_sntg(const Sntg& s);

struct SntgFromNtg {
  Sntg sntg;
  // definition index -> body vertex -> sntg vertex
  std::vector<std::vector<VertexId>> vertex_of;
};

// Requires an ntg. Vertex 0 is the fresh root, then bodies in def order.
SntgFromNtg ntg_to_sntg(const Rgs& n);

// Requires check_sntg to pass; throws PreconditionError otherwise.
// One nested symbol per nested vertex; input indices are recovered from
// return links, least unused index first.
Rgs sntg_to_ntg(const Sntg& s);

struct SntgHomResult {
  std::optional<std::vector<VertexId>> map;
  std::optional<std::pair<VertexId, VertexId>> conflict;
  std::string reason;
  explicit operator bool() const { return map.has_value(); }
};

SntgHomResult sntg_hom(const Sntg& s1, const Sntg& s2);
// Independent check of every homomorphism clause on a total map.
bool verify_sntg_hom(const Sntg& s1, const Sntg& s2, const std::vector<VertexId>& map);

struct SntgBisimResult {
  std::optional<Sntg> witness;
  // witness vertex -> (vertex of s1, vertex of s2)
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::string reason;
  explicit operator bool() const { return witness.has_value(); }
};

SntgBisimResult sntg_bisimilar(const Sntg& s1, const Sntg& s2);

std::string print_sntg(const Sntg& s);

}  // namespace ntg
