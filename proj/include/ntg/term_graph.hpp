#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ntg {

using VertexId = std::uint32_t;

enum class LabelKind : std::uint8_t {
  Atomic,
  Nested,
  Output,  // o, the root of a definition body
  Input,   // i_k
  // first-order interface signature
  PrimedConst,   // c'
  FoOutput,      // o/1
  FoInput,       // i/2
  FoOutputRoot,  // o_r/1
  FoInputRoot,   // i_r/1
};

struct Label {
  LabelKind kind = LabelKind::Atomic;
  std::string symbol;      // Atomic, Nested, PrimedConst
  std::uint32_t index = 0; // Input only, 1-based
  std::uint32_t arity = 0;

  static Label atomic(std::string sym, std::uint32_t arity);
  static Label nested(std::string sym, std::uint32_t arity);
  static Label output();
  static Label input(std::uint32_t k);
  static Label primed(std::string constant);
  static Label fo_output();
  static Label fo_input();
  static Label fo_output_root();
  static Label fo_input_root();
  static Label bottom();

  bool is_atomic() const { return kind == LabelKind::Atomic; }
  bool is_nested() const { return kind == LabelKind::Nested; }
  bool is_output() const { return kind == LabelKind::Output; }
  bool is_input() const { return kind == LabelKind::Input; }

  std::string str() const;

  friend auto operator<=>(const Label&, const Label&) = default;
};

// Reserved nullary placeholder written where unfolding was cut off.
inline constexpr const char* kBottomSymbol = "⊥";

class TermGraph {
 public:
  TermGraph() = default;
  // Throws GraphError when an edge dangles or a vertex has the wrong
  // number of successors for its label.
  TermGraph(std::vector<Label> labels, std::vector<std::vector<VertexId>> args,
            VertexId root, std::vector<std::string> names = {});

  std::size_t size() const { return labels_.size(); }
  VertexId root() const { return root_; }
  const Label& label(VertexId v) const { return labels_[v]; }
  const std::vector<VertexId>& args(VertexId v) const { return args_[v]; }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<std::vector<VertexId>>& all_args() const { return args_; }

  bool has_names() const { return !names_.empty(); }
  // Stored name, or "v<id>" when the graph is anonymous.
  std::string name(VertexId v) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<Label> labels_;
  std::vector<std::vector<VertexId>> args_;
  VertexId root_ = 0;
  std::vector<std::string> names_;
};

// Vertices reachable from `from`, in breadth-first discovery order.
std::vector<VertexId> reachable_from(const TermGraph& g, VertexId from);

struct SubGraph {
  TermGraph graph;
  std::vector<VertexId> origin;  // new id -> id in the source graph
};

// The sub-term graph rooted at v, renumbered in discovery order.
SubGraph sub_term_graph(const TermGraph& g, VertexId v);

struct RootConnectivity {
  std::optional<VertexId> unreachable;  // smallest unreachable vertex
  bool connected() const { return !unreachable.has_value(); }
};

RootConnectivity check_root_connected(const TermGraph& g);

struct HomResult {
  std::optional<std::vector<VertexId>> map;
  // First conflicting pair in propagation order when no hom exists.
  std::optional<std::pair<VertexId, VertexId>> conflict;
  std::string reason;
  explicit operator bool() const { return map.has_value(); }
};

HomResult tg_hom(const TermGraph& g1, const TermGraph& g2);

// Checks root, label and argument preservation of a total map.
bool verify_tg_hom(const TermGraph& g1, const TermGraph& g2,
                   const std::vector<VertexId>& map);

// Block index per vertex of the coarsest bisimulation. Blocks are numbered
// 0, 1, ... in order of their least member.
std::vector<VertexId> bisimulation_partition(const TermGraph& g);

struct Collapse {
  TermGraph graph;
  std::vector<VertexId> quotient;  // vertex -> vertex of the collapse
};

Collapse tg_collapse(const TermGraph& g);

// Quotient by a partition numbered as above. The caller is responsible for
// the partition being a congruence; arguments are read off the least member
// of each block.
Collapse tg_quotient(const TermGraph& g, std::vector<VertexId> block);

struct Union {
  TermGraph graph;  // rooted at the first operand's root
  VertexId offset;  // ids of the second operand are shifted by this
};

Union disjoint_union(const TermGraph& g1, const TermGraph& g2);

bool tg_bisimilar(const TermGraph& g1, const TermGraph& g2);

// A bijection g1 -> g2 preserving root, labels and arguments.
std::optional<std::vector<VertexId>> tg_isomorphic(const TermGraph& g1,
                                                    const TermGraph& g2);

}  // namespace ntg
