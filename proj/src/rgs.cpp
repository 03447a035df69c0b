#include "ntg/rgs.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "ntg/errors.hpp"

namespace ntg {

Rgs::Rgs(Arities atomic, std::vector<Definition> defs, std::string root_symbol)
    : atomic_(std::move(atomic)), defs_(std::move(defs)), root_(std::move(root_symbol)) {
  for (std::size_t i = 0; i < defs_.size(); ++i)
    if (!index_.emplace(defs_[i].symbol, i).second)
      throw GraphError("symbol " + defs_[i].symbol + " is defined twice");
}

std::optional<std::size_t> Rgs::index_of(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Definition* Rgs::find(const std::string& symbol) const {
  auto i = index_of(symbol);
  return i ? &defs_[*i] : nullptr;
}

const Definition& Rgs::root_definition() const {
  const Definition* d = find(root_);
  if (!d) throw PreconditionError("root symbol " + root_ + " has no definition");
  return *d;
}

NtgSignature Rgs::signature() const {
  NtgSignature s{atomic_, {}, root_};
  for (const auto& d : defs_) s.nested[d.symbol] = d.arity;
  return s;
}

bool is_reserved_name(const std::string& name) {
  static const std::set<std::string> reserved = {
      "out", "in", "out_r", "in_r", "o", "o_r", "i", "i_r",
      "atomic", "def", "root", "tg", kBottomSymbol};
  return reserved.count(name) > 0;
}

std::string Violation::str() const {
  std::string s;
  if (!body.empty()) s += "in " + body + ": ";
  return s + message;
}

ValidationError::ValidationError(ValidationReport report)
    : Error([&] {
        std::string s = "invalid recursive graph specification";
        for (const auto& v : report.violations) s += "\n  " + v.str();
        return s;
      }()),
      report_(std::move(report)) {}

namespace {

void validate_body(const Rgs& r, const Definition& d, std::vector<Violation>& out) {
  const TermGraph& g = d.body;
  auto add = [&](std::optional<VertexId> v, std::string msg) {
    if (v) msg = "vertex " + g.name(*v) + ": " + msg;
    out.push_back({d.symbol, v, std::move(msg)});
  };
  std::size_t outputs = 0;
  std::vector<std::size_t> seen_inputs(d.arity + 1, 0);
  for (VertexId v = 0; v < g.size(); ++v) {
    const Label& l = g.label(v);
    switch (l.kind) {
      case LabelKind::Atomic: {
        auto it = r.atomic().find(l.symbol);
        bool placeholder = l.symbol == kBottomSymbol && l.arity == 0;
        if (!placeholder && it == r.atomic().end())
          add(v, "unknown atomic symbol " + l.symbol);
        else if (!placeholder && it->second != l.arity)
          add(v, "atomic symbol " + l.symbol + " used with arity " + std::to_string(l.arity));
        break;
      }
      case LabelKind::Nested: {
        const Definition* callee = r.find(l.symbol);
        if (!callee)
          add(v, "nested symbol " + l.symbol + " has no definition");
        else if (callee->arity != l.arity)
          add(v, "nested symbol " + l.symbol + " used with arity " + std::to_string(l.arity));
        break;
      }
      case LabelKind::Output:
        ++outputs;
        if (v != g.root()) add(v, "output vertex is not the body root");
        break;
      case LabelKind::Input:
        if (l.index < 1 || l.index > d.arity)
          add(v, "input index " + std::to_string(l.index) + " outside 1.." +
                     std::to_string(d.arity));
        else
          ++seen_inputs[l.index];
        break;
      default:
        add(v, "first-order interface label " + l.str() + " in a body");
    }
  }
  if (outputs != 1)
    add(std::nullopt, "body has " + std::to_string(outputs) + " output vertices, expected 1");
  if (!g.label(g.root()).is_output()) add(g.root(), "body root is not labelled out");
  for (std::uint32_t j = 1; j <= d.arity; ++j)
    if (seen_inputs[j] != 1)
      add(std::nullopt, "input " + std::to_string(j) + " occurs " +
                            std::to_string(seen_inputs[j]) + " times, expected once");
  for (VertexId v = 0; v < g.size(); ++v)
    for (VertexId t : g.args(v))
      if (g.label(t).is_output()) add(v, "edge into the output vertex");
  if (auto rc = check_root_connected(g); !rc.connected())
    add(rc.unreachable, "not reachable from the body root");
}

}  // namespace

ValidationReport validate_rgs(const Rgs& r) {
  ValidationReport rep;
  for (const auto& [name, ar] : r.atomic()) {
    if (is_reserved_name(name) && !(name == kBottomSymbol && ar == 0))
      rep.violations.push_back({"", std::nullopt, "reserved name " + name + " used as atomic symbol"});
    if (r.find(name))
      rep.violations.push_back({"", std::nullopt, "symbol " + name + " is both atomic and nested"});
  }
  for (const auto& d : r.definitions())
    if (is_reserved_name(d.symbol))
      rep.violations.push_back({"", std::nullopt, "reserved name " + d.symbol + " used as nested symbol"});
  const Definition* root = r.find(r.root_symbol());
  if (!root)
    rep.violations.push_back({"", std::nullopt, "root symbol " + r.root_symbol() + " is not defined"});
  else if (root->arity != 0)
    rep.violations.push_back({"", std::nullopt, "root symbol " + r.root_symbol() + " is not nullary"});
  for (const auto& d : r.definitions()) validate_body(r, d, rep.violations);
  if (rep.ok()) {
    std::vector<std::string> reach = reachable_symbols(r);
    std::set<std::string> rs(reach.begin(), reach.end());
    for (const auto& d : r.definitions())
      if (!rs.count(d.symbol))
        rep.warnings.push_back("symbol " + d.symbol + " is unreachable from the root");
  }
  return rep;
}

DependencyArs dependency_ars(const Rgs& r) {
  DependencyArs a;
  a.root = r.root_symbol();
  for (const auto& d : r.definitions()) {
    a.objects.push_back(d.symbol);
    for (VertexId v = 0; v < d.body.size(); ++v)
      if (d.body.label(v).is_nested())
        a.steps.push_back({d.symbol, {d.symbol, v}, d.body.label(v).symbol});
  }
  return a;
}

namespace {

std::map<std::string, std::vector<const DependencyStep*>> outgoing(const DependencyArs& a) {
  std::map<std::string, std::vector<const DependencyStep*>> out;
  for (const auto& s : a.steps) out[s.source].push_back(&s);
  return out;
}

}  // namespace

std::vector<std::string> reachable_symbols(const Rgs& r) {
  DependencyArs a = dependency_ars(r);
  auto out = outgoing(a);
  std::vector<std::string> order{a.root};
  std::set<std::string> seen{a.root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const DependencyStep* s : out[order[i]])
      if (seen.insert(s->target).second) order.push_back(s->target);
  return order;
}

namespace {

std::optional<std::vector<std::string>> find_cycle(const DependencyArs& a) {
  auto out = outgoing(a);
  std::map<std::string, int> color;  // 0 white, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::optional<std::vector<std::string>> found;
  std::function<void(const std::string&)> dfs = [&](const std::string& s) {
    color[s] = 1;
    stack.push_back(s);
    for (const DependencyStep* st : out[s]) {
      if (found) return;
      int c = color[st->target];
      if (c == 1) {
        auto it = std::find(stack.begin(), stack.end(), st->target);
        std::vector<std::string> path(it, stack.end());
        path.push_back(st->target);
        found = std::move(path);
        return;
      }
      if (c == 0) dfs(st->target);
    }
    stack.pop_back();
    color[s] = 2;
  };
  dfs(a.root);
  return found;
}

}  // namespace

bool has_reachable_cycle(const Rgs& r) { return find_cycle(dependency_ars(r)).has_value(); }

std::size_t dependency_height(const Rgs& r) {
  DependencyArs a = dependency_ars(r);
  if (find_cycle(a)) throw PreconditionError("dependency ARS is cyclic");
  auto out = outgoing(a);
  std::map<std::string, std::size_t> memo;
  std::function<std::size_t(const std::string&)> h = [&](const std::string& s) -> std::size_t {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::size_t best = 0;
    for (const DependencyStep* st : out[s]) best = std::max(best, 1 + h(st->target));
    return memo[s] = best;
  };
  return h(a.root);
}

NtgCheck is_ntg(const Rgs& r) {
  DependencyArs a = dependency_ars(r);
  if (auto cyc = find_cycle(a)) return ntg_check::Cycle{std::move(*cyc)};
  std::vector<std::string> reach = reachable_symbols(r);
  std::set<std::string> rs(reach.begin(), reach.end());
  std::map<std::string, std::vector<const DependencyStep*>> incoming;
  for (const auto& s : a.steps)
    if (rs.count(s.source)) incoming[s.target].push_back(&s);
  for (const auto& s : reach) {
    auto& in = incoming[s];
    if (in.size() >= 2) return ntg_check::CoDeterminism{s, *in[0], *in[1]};
  }
  for (const auto& d : r.definitions())
    if (!rs.count(d.symbol)) return ntg_check::Unreachable{d.symbol};
  return ntg_check::Yes{};
}

bool holds(const NtgCheck& c) { return std::holds_alternative<ntg_check::Yes>(c); }

std::string describe(const Rgs& r, const NtgCheck& c) {
  auto occ = [&](const DependencyStep& s) {
    const Definition* d = r.find(s.occurrence.body);
    return s.occurrence.body + "." + (d ? d->body.name(s.occurrence.vertex) : "?");
  };
  std::ostringstream os;
  if (std::holds_alternative<ntg_check::Yes>(c)) {
    os << "nested term graph";
  } else if (auto* cy = std::get_if<ntg_check::Cycle>(&c)) {
    os << "cyclic dependency ";
    for (std::size_t i = 0; i < cy->path.size(); ++i) os << (i ? " -> " : "") << cy->path[i];
  } else if (auto* cd = std::get_if<ntg_check::CoDeterminism>(&c)) {
    os << "co-determinism violated: " << cd->symbol << " is entered from " << occ(cd->first)
       << " and from " << occ(cd->second);
  } else if (auto* u = std::get_if<ntg_check::Unreachable>(&c)) {
    os << "symbol " << u->symbol << " is unreachable from the root";
  }
  return os.str();
}

UnfoldResult unfold_to_ntg(const Rgs& r, std::optional<std::size_t> depth) {
  bool cyclic = has_reachable_cycle(r);
  if (cyclic && !depth)
    throw MissingDepthError("the dependency ARS is cyclic; a depth bound is required");
  if (!cyclic) depth.reset();

  struct Item {
    std::string source;
    std::string name;
    std::string path;
    std::size_t level;
  };
  UnfoldResult res;
  std::vector<Definition> defs;
  std::vector<Item> queue{{r.root_symbol(), r.root_symbol(), "", 0}};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Item it = queue[qi];
    const Definition& d = *r.find(it.source);
    const TermGraph& g = d.body;
    std::vector<Label> labels = g.labels();
    std::vector<std::vector<VertexId>> args = g.all_args();
    std::size_t ordinal = 0;
    for (VertexId v : reachable_from(g, g.root())) {
      if (!labels[v].is_nested()) continue;
      ++ordinal;
      if (depth && it.level + 1 > *depth) {
        labels[v] = Label::bottom();
        args[v].clear();
        ++res.cuts;
        continue;
      }
      std::string path = it.path.empty() ? std::to_string(ordinal)
                                          : it.path + "." + std::to_string(ordinal);
      std::string child = labels[v].symbol + "@" + path;
      queue.push_back({labels[v].symbol, child, path, it.level + 1});
      labels[v].symbol = child;
    }
    std::vector<std::string> names;
    for (VertexId v = 0; v < g.size(); ++v) names.push_back(g.name(v));
    TermGraph body(std::move(labels), std::move(args), g.root(), std::move(names));
    // cutting an occurrence can orphan its former arguments
    body = sub_term_graph(body, body.root()).graph;
    defs.push_back({it.name, d.arity, std::move(body)});
  }
  Arities atomic = r.atomic();
  if (res.cuts) {
    atomic[kBottomSymbol] = 0;
    res.truncated = true;
  }
  res.ntg = Rgs(std::move(atomic), std::move(defs), r.root_symbol());
  return res;
}

FlatRgs::FlatRgs(const Rgs& r) {
  const auto& defs = r.definitions();
  for (std::size_t d = 0; d < defs.size(); ++d) {
    offset.push_back(static_cast<VertexId>(labels.size()));
    const TermGraph& g = defs[d].body;
    def_root.push_back(offset[d] + g.root());
    inputs.emplace_back(defs[d].arity, static_cast<VertexId>(-1));
    for (VertexId v = 0; v < g.size(); ++v) {
      const Label& l = g.label(v);
      labels.push_back(l);
      std::vector<VertexId> a;
      for (VertexId t : g.args(v)) a.push_back(offset[d] + t);
      args.push_back(std::move(a));
      names.push_back(defs[d].symbol + "." + g.name(v));
      def_of.push_back(d);
      if (l.is_input() && l.index >= 1 && l.index <= defs[d].arity)
        inputs[d][l.index - 1] = offset[d] + v;
    }
  }
  for (const Label& l : labels) {
    std::size_t c = kNone;
    if (l.is_nested()) {
      auto i = r.index_of(l.symbol);
      if (!i) throw PreconditionError("undefined nested symbol " + l.symbol);
      c = *i;
    }
    callee.push_back(c);
  }
  auto ri = r.index_of(r.root_symbol());
  if (!ri) throw PreconditionError("root symbol " + r.root_symbol() + " is not defined");
  root_def = *ri;
}

}  // namespace ntg
