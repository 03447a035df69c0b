#include "ntg/term_graph.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "ntg/errors.hpp"

namespace ntg {

Label Label::atomic(std::string sym, std::uint32_t arity) {
  return Label{LabelKind::Atomic, std::move(sym), 0, arity};
}
Label Label::nested(std::string sym, std::uint32_t arity) {
  return Label{LabelKind::Nested, std::move(sym), 0, arity};
}
Label Label::output() { return Label{LabelKind::Output, "", 0, 1}; }
Label Label::input(std::uint32_t k) { return Label{LabelKind::Input, "", k, 0}; }
Label Label::primed(std::string constant) {
  return Label{LabelKind::PrimedConst, std::move(constant), 0, 1};
}
Label Label::fo_output() { return Label{LabelKind::FoOutput, "", 0, 1}; }
Label Label::fo_input() { return Label{LabelKind::FoInput, "", 0, 2}; }
Label Label::fo_output_root() { return Label{LabelKind::FoOutputRoot, "", 0, 1}; }
Label Label::fo_input_root() { return Label{LabelKind::FoInputRoot, "", 0, 1}; }
Label Label::bottom() { return atomic(kBottomSymbol, 0); }

std::string Label::str() const {
  switch (kind) {
    case LabelKind::Atomic:
    case LabelKind::Nested:
      return symbol;
    case LabelKind::Output:
      return "o";
    case LabelKind::Input:
      return "i" + std::to_string(index);
    case LabelKind::PrimedConst:
      return symbol + "'";
    case LabelKind::FoOutput:
      return "o";
    case LabelKind::FoInput:
      return "i";
    case LabelKind::FoOutputRoot:
      return "o_r";
    case LabelKind::FoInputRoot:
      return "i_r";
  }
  return "?";
}

TermGraph::TermGraph(std::vector<Label> labels,
                     std::vector<std::vector<VertexId>> args, VertexId root,
                     std::vector<std::string> names)
    : labels_(std::move(labels)),
      args_(std::move(args)),
      root_(root),
      names_(std::move(names)) {
  if (labels_.size() != args_.size())
    throw GraphError("label and argument tables differ in size");
  if (!names_.empty() && names_.size() != labels_.size())
    throw GraphError("name table differs in size");
  if (labels_.empty()) throw GraphError("term graph has no vertices");
  if (root_ >= labels_.size()) throw GraphError("root out of range");
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (args_[v].size() != labels_[v].arity) {
      std::ostringstream os;
      os << "vertex " << name(static_cast<VertexId>(v)) << " labelled "
         << labels_[v].str() << " has " << args_[v].size()
         << " successors, arity is " << labels_[v].arity;
      throw GraphError(os.str());
    }
    for (VertexId t : args_[v])
      if (t >= labels_.size())
        throw GraphError("edge from " + name(static_cast<VertexId>(v)) +
                         " leaves the graph");
  }
}

std::string TermGraph::name(VertexId v) const {
  if (!names_.empty()) return names_[v];
  return "v" + std::to_string(v);
}

std::vector<VertexId> reachable_from(const TermGraph& g, VertexId from) {
  if (from >= g.size()) throw GraphError("unknown vertex " + std::to_string(from));
  std::vector<char> seen(g.size(), 0);
  std::vector<VertexId> order{from};
  seen[from] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId t : g.args(order[i]))
      if (!seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
  return order;
}

SubGraph sub_term_graph(const TermGraph& g, VertexId v) {
  std::vector<VertexId> order = reachable_from(g, v);
  std::vector<VertexId> renum(g.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    renum[order[i]] = static_cast<VertexId>(i);
  std::vector<Label> labels;
  std::vector<std::vector<VertexId>> args;
  std::vector<std::string> names;
  for (VertexId u : order) {
    labels.push_back(g.label(u));
    std::vector<VertexId> a;
    for (VertexId t : g.args(u)) a.push_back(renum[t]);
    args.push_back(std::move(a));
    if (g.has_names()) names.push_back(g.name(u));
  }
  return {TermGraph(std::move(labels), std::move(args), 0, std::move(names)),
          std::move(order)};
}

RootConnectivity check_root_connected(const TermGraph& g) {
  std::vector<char> seen(g.size(), 0);
  for (VertexId v : reachable_from(g, g.root())) seen[v] = 1;
  for (VertexId v = 0; v < g.size(); ++v)
    if (!seen[v]) return {v};
  return {};
}

HomResult tg_hom(const TermGraph& g1, const TermGraph& g2) {
  constexpr VertexId kUnset = static_cast<VertexId>(-1);
  std::vector<VertexId> map(g1.size(), kUnset);
  std::deque<std::pair<VertexId, VertexId>> work{{g1.root(), g2.root()}};
  HomResult res;
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (map[x] != kUnset) {
      if (map[x] != y) {
        res.conflict = {x, y};
        res.reason = g1.name(x) + " is forced onto both " + g2.name(map[x]) +
                     " and " + g2.name(y);
        return res;
      }
      continue;
    }
    if (g1.label(x) != g2.label(y)) {
      res.conflict = {x, y};
      res.reason = "label " + g1.label(x).str() + " of " + g1.name(x) +
                   " differs from " + g2.label(y).str() + " of " + g2.name(y);
      return res;
    }
    map[x] = y;
    for (std::size_t i = 0; i < g1.args(x).size(); ++i)
      work.emplace_back(g1.args(x)[i], g2.args(y)[i]);
  }
  for (VertexId v = 0; v < g1.size(); ++v)
    if (map[v] == kUnset) {
      res.reason = "vertex " + g1.name(v) + " is unreachable from the root";
      return res;
    }
  res.map = std::move(map);
  return res;
}

bool verify_tg_hom(const TermGraph& g1, const TermGraph& g2,
                   const std::vector<VertexId>& map) {
  if (map.size() != g1.size()) return false;
  for (VertexId t : map)
    if (t >= g2.size()) return false;
  if (map[g1.root()] != g2.root()) return false;
  for (VertexId v = 0; v < g1.size(); ++v) {
    if (g1.label(v) != g2.label(map[v])) return false;
    const auto& a1 = g1.args(v);
    const auto& a2 = g2.args(map[v]);
    for (std::size_t i = 0; i < a1.size(); ++i)
      if (map[a1[i]] != a2[i]) return false;
  }
  return true;
}

std::vector<VertexId> bisimulation_partition(const TermGraph& g) {
  const std::size_t n = g.size();
  std::vector<VertexId> block(n);
  std::size_t count = 0;
  {
    std::map<Label, VertexId> ids;
    for (VertexId v = 0; v < n; ++v) {
      auto [it, fresh] = ids.try_emplace(g.label(v), static_cast<VertexId>(ids.size()));
      block[v] = it->second;
    }
    count = ids.size();
  }
  // Refine by (own block, successor blocks) until the block count is stable.
  // New ids are handed out in vertex order, so block k always has a smaller
  // least member than block k+1.
  for (;;) {
    std::map<std::vector<VertexId>, VertexId> ids;
    std::vector<VertexId> next(n);
    for (VertexId v = 0; v < n; ++v) {
      std::vector<VertexId> key{block[v]};
      for (VertexId t : g.args(v)) key.push_back(block[t]);
      auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<VertexId>(ids.size()));
      next[v] = it->second;
    }
    bool stable = ids.size() == count;
    count = ids.size();
    block = std::move(next);
    if (stable) break;
  }
  return block;
}

Collapse tg_quotient(const TermGraph& g, std::vector<VertexId> block) {
  if (block.size() != g.size()) throw GraphError("partition size does not match the graph");
  VertexId count = 0;
  for (VertexId b : block) count = std::max<VertexId>(count, b + 1);
  std::vector<VertexId> rep(count, static_cast<VertexId>(-1));
  for (VertexId v = 0; v < g.size(); ++v)
    if (rep[block[v]] == static_cast<VertexId>(-1)) rep[block[v]] = v;
  std::vector<Label> labels;
  std::vector<std::vector<VertexId>> args;
  std::vector<std::string> names;
  for (VertexId b = 0; b < count; ++b) {
    if (rep[b] == static_cast<VertexId>(-1)) throw GraphError("partition skips block " + std::to_string(b));
    labels.push_back(g.label(rep[b]));
    std::vector<VertexId> a;
    for (VertexId t : g.args(rep[b])) a.push_back(block[t]);
    args.push_back(std::move(a));
    if (g.has_names()) names.push_back(g.name(rep[b]));
  }
  return {TermGraph(std::move(labels), std::move(args), block[g.root()],
                    std::move(names)),
          std::move(block)};
}

Collapse tg_collapse(const TermGraph& g) { return tg_quotient(g, bisimulation_partition(g)); }

Union disjoint_union(const TermGraph& g1, const TermGraph& g2) {
  std::vector<Label> labels = g1.labels();
  std::vector<std::vector<VertexId>> args = g1.all_args();
  const auto off = static_cast<VertexId>(g1.size());
  for (VertexId v = 0; v < g2.size(); ++v) {
    labels.push_back(g2.label(v));
    std::vector<VertexId> a;
    for (VertexId t : g2.args(v)) a.push_back(t + off);
    args.push_back(std::move(a));
  }
  std::vector<std::string> names;
  if (g1.has_names() || g2.has_names()) {
    for (VertexId v = 0; v < g1.size(); ++v) names.push_back("1:" + g1.name(v));
    for (VertexId v = 0; v < g2.size(); ++v) names.push_back("2:" + g2.name(v));
  }
  return {TermGraph(std::move(labels), std::move(args), g1.root(), std::move(names)),
          off};
}

bool tg_bisimilar(const TermGraph& g1, const TermGraph& g2) {
  Union u = disjoint_union(g1, g2);
  std::vector<VertexId> block = bisimulation_partition(u.graph);
  return block[g1.root()] == block[g2.root() + u.offset];
}

std::optional<std::vector<VertexId>> tg_isomorphic(const TermGraph& g1,
                                                    const TermGraph& g2) {
  if (g1.size() != g2.size()) return std::nullopt;
  constexpr VertexId kUnset = static_cast<VertexId>(-1);
  std::vector<VertexId> fwd(g1.size(), kUnset), bwd(g2.size(), kUnset);
  std::deque<std::pair<VertexId, VertexId>> work{{g1.root(), g2.root()}};
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (fwd[x] != kUnset || bwd[y] != kUnset) {
      if (fwd[x] != y || bwd[y] != x) return std::nullopt;
      continue;
    }
    if (g1.label(x) != g2.label(y)) return std::nullopt;
    fwd[x] = y;
    bwd[y] = x;
    for (std::size_t i = 0; i < g1.args(x).size(); ++i)
      work.emplace_back(g1.args(x)[i], g2.args(y)[i]);
  }
  for (VertexId v = 0; v < g1.size(); ++v)
    if (fwd[v] == kUnset) return std::nullopt;
  return fwd;
}

}  // namespace ntg
