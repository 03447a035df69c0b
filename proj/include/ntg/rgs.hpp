#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ntg/errors.hpp"
#include "ntg/term_graph.hpp"

namespace ntg {

using Arities = std::map<std::string, std::uint32_t>;

struct NtgSignature {
  Arities atomic;
  Arities nested;
  std::string root_symbol;
};

struct Definition {
  std::string symbol;
  std::uint32_t arity = 0;
  TermGraph body;
};

// Recursive graph specification: one body per nested symbol. Construction
// only rejects duplicate symbols; use validate_rgs for everything else.
class Rgs {
 public:
  Rgs() = default;
  Rgs(Arities atomic, std::vector<Definition> defs, std::string root_symbol);

  const Arities& atomic() const { return atomic_; }
  const std::vector<Definition>& definitions() const { return defs_; }
  const std::string& root_symbol() const { return root_; }
  std::optional<std::size_t> index_of(const std::string& symbol) const;
  const Definition* find(const std::string& symbol) const;
  const Definition& root_definition() const;
  NtgSignature signature() const;

 private:
  Arities atomic_;
  std::vector<Definition> defs_;
  std::string root_;
  std::map<std::string, std::size_t> index_;
};

bool is_reserved_name(const std::string& name);

struct Violation {
  std::string body;  // symbol whose body is at fault, empty for global issues
  std::optional<VertexId> vertex;
  std::string message;
  std::string str() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;  // unreachable symbols
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_rgs(const Rgs& r);

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct Occurrence {
  std::string body;
  VertexId vertex = 0;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// One step per occurrence of a nested symbol in a body.
struct DependencyStep {
  std::string source;
  Occurrence occurrence;
  std::string target;
};

struct DependencyArs {
  std::vector<std::string> objects;
  std::string root;
  std::vector<DependencyStep> steps;  // body order, then vertex order
};

DependencyArs dependency_ars(const Rgs& r);

// Symbols reachable from the root in the dependency ARS, in BFS order.
std::vector<std::string> reachable_symbols(const Rgs& r);
bool has_reachable_cycle(const Rgs& r);
// Length of the longest root path in the dependency ARS; requires acyclicity.
std::size_t dependency_height(const Rgs& r);

namespace ntg_check {
struct Yes {};
struct Cycle {
  std::vector<std::string> path;  // first == last
};
struct CoDeterminism {
  std::string symbol;
  DependencyStep first, second;
};
struct Unreachable {
  std::string symbol;
};
}  // namespace ntg_check

using NtgCheck = std::variant<ntg_check::Yes, ntg_check::Cycle,
                              ntg_check::CoDeterminism, ntg_check::Unreachable>;

// Requires a valid rgs. Cycles are reported before co-determinism
// violations, and those before unreachable symbols.
NtgCheck is_ntg(const Rgs& r);
bool holds(const NtgCheck& c);
std::string describe(const Rgs& r, const NtgCheck& c);

struct UnfoldResult {
  Rgs ntg;
  bool truncated = false;
  std::size_t cuts = 0;  // occurrences replaced by the placeholder
};

// Exact when the reachable dependency ARS is acyclic, and then `depth` is
// ignored. Otherwise `depth` is required (MissingDepthError) and
// occurrences nested deeper than it become the placeholder symbol.
// Unfolded symbols are named <symbol>@<path>, where the path lists
// 1-based occurrence ordinals from the root.
UnfoldResult unfold_to_ntg(const Rgs& r, std::optional<std::size_t> depth = {});

// Disjoint union of all bodies, with the lookups every traversal needs.
// Built from a valid rgs.
struct FlatRgs {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  explicit FlatRgs(const Rgs& r);

  std::vector<Label> labels;
  std::vector<std::vector<VertexId>> args;
  std::vector<std::string> names;        // "<symbol>.<vertex>"
  std::vector<std::size_t> def_of;       // vertex -> owning definition
  std::vector<std::size_t> callee;       // nested vertex -> definition, else kNone
  std::vector<VertexId> offset;          // definition -> first vertex
  std::vector<VertexId> def_root;        // definition -> its o vertex
  std::vector<std::vector<VertexId>> inputs;  // definition -> i_1..i_m
  std::size_t root_def = 0;

  std::size_t size() const { return labels.size(); }
  VertexId root() const { return def_root[root_def]; }
  VertexId global(std::size_t def, VertexId local) const { return offset[def] + local; }
};

}  // namespace ntg
