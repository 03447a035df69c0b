#include "ntg/firstorder.hpp"

#include <functional>
#include <map>
#include <set>

#include "ntg/errors.hpp"
#include "ntg/sntg.hpp"

namespace ntg {

namespace {
constexpr VertexId kUnset = static_cast<VertexId>(-1);
}

FoGraph interpret(const Rgs& n) {
  Sntg s = ntg_to_sntg(n).sntg;
  std::vector<VertexId> id(s.size(), kUnset);
  VertexId next = 0;
  for (VertexId v = 0; v < s.size(); ++v)
    if (!s.labels[v].is_nested()) id[v] = next++;
  auto target = [&](VertexId t) { return id[s.labels[t].is_nested() ? *s.call[t] : t]; };

  std::vector<Label> labels(next);
  std::vector<std::vector<VertexId>> args(next);
  std::vector<std::string> names(next);
  std::vector<VertexId> constants;
  for (VertexId v = 0; v < s.size(); ++v) {
    if (id[v] == kUnset) continue;
    VertexId x = id[v];
    const Label& l = s.labels[v];
    names[x] = s.names[v];
    switch (l.kind) {
      case LabelKind::Atomic:
        if (l.arity == 0) {
          labels[x] = Label::primed(l.symbol);
          constants.push_back(v);
        } else {
          labels[x] = l;
          for (VertexId t : s.args[v]) args[x].push_back(target(t));
        }
        break;
      case LabelKind::Output:
        labels[x] = s.anc[v].size() == 1 ? Label::fo_output_root() : Label::fo_output();
        args[x].push_back(target(s.args[v][0]));
        break;
      case LabelKind::Input:
        labels[x] = Label::fo_input();
        args[x] = {target(*s.ret[v]), id[*s.call[s.anc[v].back()]]};
        break;
      default:
        throw PreconditionError("unexpected label " + l.str());
    }
  }
  // One chain per constant occurrence: an i for each enclosing non-root
  // level, innermost first, then i_r back to the root.
  for (VertexId v : constants) {
    const std::vector<VertexId>& a = s.anc[v];
    const std::size_t d = a.size();
    const auto first = static_cast<VertexId>(labels.size());
    for (std::size_t k = 1; k <= d; ++k) {
      VertexId back = id[*s.call[a[d - k]]];
      if (k < d) {
        labels.push_back(Label::fo_input());
        args.push_back({static_cast<VertexId>(first + k), back});
        names.push_back(s.names[v] + "~i" + std::to_string(k));
      } else {
        labels.push_back(Label::fo_input_root());
        args.push_back({back});
        names.push_back(s.names[v] + "~ir");
      }
    }
    args[id[v]].push_back(first);
  }
  VertexId root = id[*s.call[s.root]];
  return {n.atomic(), TermGraph(std::move(labels), std::move(args), root, std::move(names))};
}

AncestorResult infer_ancestors(const TermGraph& g) {
  AncestorResult res;
  const std::size_t n = g.size();
  std::vector<std::optional<std::vector<VertexId>>> anc(n);
  auto fail = [&](VertexId w, std::string why) {
    res.witness = w;
    res.reason = std::move(why);
    return res;
  };
  if (g.label(g.root()).kind != LabelKind::FoOutputRoot) return fail(g.root(), "root is not labelled o_r");
  for (VertexId v = 0; v < n; ++v) {
    const Label& l = g.label(v);
    bool ok = (l.kind == LabelKind::Atomic && l.arity > 0) || l.kind == LabelKind::PrimedConst ||
              l.kind == LabelKind::FoOutput || l.kind == LabelKind::FoInput || l.kind == LabelKind::FoInputRoot ||
              (l.kind == LabelKind::FoOutputRoot && v == g.root());
    if (!ok) return fail(v, "label " + l.str() + " of " + g.name(v) + " is not allowed here");
  }
  anc[g.root()] = std::vector<VertexId>{};
  std::vector<VertexId> queue{g.root()};
  std::optional<VertexId> bad;
  std::string why;
  auto require = [&](VertexId t, std::vector<VertexId> a) {
    if (!anc[t]) {
      anc[t] = std::move(a);
      queue.push_back(t);
    } else if (*anc[t] != a && !bad) {
      bad = t;
      why = "vertex " + g.name(t) + " needs two different ancestor sequences";
    }
  };
  for (std::size_t qi = 0; qi < queue.size() && !bad; ++qi) {
    VertexId w = queue[qi];
    const std::vector<VertexId> a = *anc[w];
    const auto& args = g.args(w);
    std::vector<VertexId> popped = a;
    if (!popped.empty()) popped.pop_back();
    switch (g.label(w).kind) {
      case LabelKind::FoOutputRoot:
      case LabelKind::FoOutput: {
        std::vector<VertexId> pushed = a;
        pushed.push_back(w);
        require(args[0], std::move(pushed));
        break;
      }
      case LabelKind::Atomic:
        for (VertexId t : args) require(t, a);
        break;
      case LabelKind::PrimedConst:
        require(args[0], a);
        break;
      case LabelKind::FoInputRoot:
        if (a.size() != 1 || a[0] != args[0]) return fail(w, "i_r vertex " + g.name(w) + " does not return to the root");
        require(args[0], popped);
        break;
      case LabelKind::FoInput:
        if (a.empty()) return fail(w, "i vertex " + g.name(w) + " at the top level");
        if (a.back() != args[1] || g.label(args[1]).kind != LabelKind::FoOutput)
          return fail(w, "back-link of " + g.name(w) + " does not reach its enclosing output");
        require(args[0], popped);
        require(args[1], popped);
        break;
      default:
        return fail(w, "unexpected label");
    }
  }
  if (bad) return fail(*bad, why);
  for (VertexId v = 0; v < n; ++v)
    if (!anc[v]) return fail(v, "vertex " + g.name(v) + " is unreachable from the root");
  std::vector<std::vector<VertexId>> out;
  for (auto& a : anc) out.push_back(std::move(*a));
  res.anc = std::move(out);
  return res;
}

Membership is_rg_member(const TermGraph& g) {
  Membership m;
  AncestorResult a = infer_ancestors(g);
  if (!a) {
    m.witness = a.witness;
    m.reason = a.reason;
    return m;
  }
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.label(v).kind != LabelKind::PrimedConst) continue;
    VertexId b = g.args(v)[0];
    std::size_t steps = 0;
    while (g.label(b).kind == LabelKind::FoInput && steps++ <= g.size()) b = g.args(b)[0];
    if (g.label(b).kind != LabelKind::FoInputRoot) {
      m.witness = v;
      m.reason = "constant " + g.name(v) + " is not followed by an i...i_r chain";
      return m;
    }
  }
  m.member = true;
  return m;
}

Rgs represent(const FoGraph& fg) {
  const TermGraph& g = fg.graph;
  Membership m = is_rg_member(g);
  if (!m) throw PreconditionError("not in the RG class: " + m.reason);
  const std::vector<std::vector<VertexId>> anc = *infer_ancestors(g).anc;
  auto is_out = [&](VertexId v) {
    auto k = g.label(v).kind;
    return k == LabelKind::FoOutput || k == LabelKind::FoOutputRoot;
  };

  std::set<std::string> taken;
  for (const auto& [s, ar] : fg.atomic) taken.insert(s);
  auto fresh = [&](std::string base) {
    while (taken.count(base)) base += "'";
    taken.insert(base);
    return base;
  };

  struct Def {
    std::string symbol;
    std::vector<VertexId> inputs;  // in index order
    std::optional<TermGraph> body;
  };
  std::map<VertexId, std::size_t> def_index;  // o vertex -> definition
  std::vector<Def> defs;

  std::function<std::size_t(VertexId)> build = [&](VertexId x) -> std::size_t {
    if (auto it = def_index.find(x); it != def_index.end()) return it->second;
    std::size_t di = defs.size();
    def_index[x] = di;
    defs.push_back({fresh(x == g.root() ? "main" : "f" + std::to_string(di)), {}, std::nullopt});

    std::vector<Label> labels;
    std::vector<std::vector<VertexId>> args;
    std::vector<std::string> names;
    std::map<VertexId, VertexId> local;  // plain vertices
    std::map<VertexId, VertexId> calls;  // child o vertex -> nested vertex
    auto fresh_vertex = [&](Label l, std::string name) {
      labels.push_back(std::move(l));
      args.emplace_back();
      names.push_back(std::move(name));
      return static_cast<VertexId>(labels.size() - 1);
    };
    std::function<VertexId(VertexId)> visit = [&](VertexId v) -> VertexId {
      if (is_out(v)) {
        if (v == x || anc[v].empty() || anc[v].back() != x)
          throw PreconditionError("edge into output " + g.name(v) + " does not call a body of " + g.name(x));
        if (auto it = calls.find(v); it != calls.end()) return it->second;
        std::size_t child = build(v);
        std::vector<VertexId> child_inputs = defs[child].inputs;
        VertexId nv = fresh_vertex(Label::nested(defs[child].symbol, static_cast<std::uint32_t>(child_inputs.size())),
                                   g.name(v) + "~call");
        calls[v] = nv;
        for (VertexId u : child_inputs) {
          VertexId a = visit(g.args(u)[0]);
          args[nv].push_back(a);
        }
        return nv;
      }
      if (auto it = local.find(v); it != local.end()) return it->second;
      if (anc[v].empty() || anc[v].back() != x)
        throw PreconditionError("vertex " + g.name(v) + " is reached from outside its body");
      const Label& l = g.label(v);
      switch (l.kind) {
        case LabelKind::Atomic: {
          VertexId nv = fresh_vertex(l, g.name(v));
          local[v] = nv;
          for (VertexId t : g.args(v)) {
            VertexId a = visit(t);
            args[nv].push_back(a);
          }
          return nv;
        }
        case LabelKind::PrimedConst: {
          VertexId nv = fresh_vertex(Label::atomic(l.symbol, 0), g.name(v));
          local[v] = nv;
          return nv;
        }
        case LabelKind::FoInput: {
          auto k = static_cast<std::uint32_t>(defs[di].inputs.size() + 1);
          defs[di].inputs.push_back(v);
          VertexId nv = fresh_vertex(Label::input(k), g.name(v));
          local[v] = nv;
          return nv;
        }
        default:
          throw PreconditionError("vertex " + g.name(v) + " labelled " + l.str() + " has no place in a body");
      }
    };
    VertexId root = fresh_vertex(Label::output(), g.name(x));
    VertexId first = visit(g.args(x)[0]);
    args[root].push_back(first);
    defs[di].body = TermGraph(std::move(labels), std::move(args), root, std::move(names));
    return di;
  };
  build(g.root());

  std::vector<Definition> out;
  for (auto& d : defs)
    out.push_back({d.symbol, static_cast<std::uint32_t>(d.inputs.size()), std::move(*d.body)});
  std::string root_symbol = defs[0].symbol;
  Rgs r(fg.atomic, std::move(out), root_symbol);
  ValidationReport rep = validate_rgs(r);
  if (!rep.ok()) throw PreconditionError("reconstruction is not a valid rgs: " + rep.violations[0].str());
  return r;
}

Collapse rg_collapse(const TermGraph& g) {
  AncestorResult a = infer_ancestors(g);
  if (!a) throw PreconditionError("not in the RG class: " + a.reason);
  // Bisimulation on a copy where every vertex also points at its ancestors,
  // so merged vertices have pointwise merged ancestor sequences.
  std::vector<Label> labels;
  std::vector<std::vector<VertexId>> args;
  for (VertexId v = 0; v < g.size(); ++v) {
    const Label& l = g.label(v);
    const auto& anc = (*a.anc)[v];
    std::string sym = std::to_string(static_cast<int>(l.kind)) + ":" + l.symbol + ":" + std::to_string(l.index) +
                      ":" + std::to_string(anc.size());
    std::vector<VertexId> succ = g.args(v);
    succ.insert(succ.end(), anc.begin(), anc.end());
    labels.push_back(Label::atomic(std::move(sym), static_cast<std::uint32_t>(succ.size())));
    args.push_back(std::move(succ));
  }
  TermGraph scoped(std::move(labels), std::move(args), g.root());
  return tg_quotient(g, bisimulation_partition(scoped));
}

Rgs ntg_collapse(const Rgs& n) {
  FoGraph fo = interpret(n);
  return represent({fo.atomic, rg_collapse(fo.graph).graph});
}

BacklinkCheck check_fully_backlinked(const TermGraph& g) {
  AncestorResult a = infer_ancestors(g);
  if (!a) throw PreconditionError("not in the RG class: " + a.reason);
  BacklinkCheck res;
  for (VertexId w = 0; w < g.size(); ++w) {
    std::vector<char> reach(g.size(), 0);
    for (VertexId v : reachable_from(g, w)) reach[v] = 1;
    for (VertexId x : (*a.anc)[w])
      if (!reach[x]) {
        res.ok = false;
        res.vertex = w;
        res.ancestor = x;
        return res;
      }
  }
  return res;
}

}  // namespace ntg
