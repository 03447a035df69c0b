#include "ntg/dot.hpp"

#include <map>
#include <sstream>

namespace ntg {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string label_text(const Label& l) {
  switch (l.kind) {
    case LabelKind::Output:
    case LabelKind::FoOutput:
      return "o";
    case LabelKind::FoOutputRoot:
      return "o_r";
    case LabelKind::FoInputRoot:
      return "i_r";
    default:
      return l.str();
  }
}

void arg_edge(std::ostringstream& os, const std::string& from, const std::string& to, std::size_t i,
              std::size_t arity, const char* style = "solid") {
  os << "  " << from << " -> " << to << " [style=" << style;
  if (arity > 1) os << ", taillabel=" << quote(std::to_string(i));
  os << "];\n";
}

void header(std::ostringstream& os, const std::string& root) {
  os << "digraph ntg {\n"
     << "  node [shape=plaintext];\n"
     << "  start [shape=point, label=\"\"];\n"
     << "  start -> " << root << " [style=solid];\n";
}

}  // namespace

std::string export_dot(const Rgs& r) {
  FlatRgs f(r);
  auto id = [](VertexId v) { return "v" + std::to_string(v); };
  std::vector<std::size_t> uses(f.def_root.size(), 0);
  std::vector<VertexId> occ(f.def_root.size(), 0);
  for (VertexId v = 0; v < f.size(); ++v)
    if (f.callee[v] != FlatRgs::kNone) {
      ++uses[f.callee[v]];
      occ[f.callee[v]] = v;
    }

  std::ostringstream os;
  header(os, "root");
  os << "  root [label=" << quote(r.root_symbol()) << "];\n";
  for (std::size_t d = 0; d < r.definitions().size(); ++d) {
    const Definition& def = r.definitions()[d];
    os << "  subgraph cluster_" << d << " {\n    label=" << quote(def.symbol + "/" + std::to_string(def.arity))
       << ";\n";
    for (VertexId v = 0; v < def.body.size(); ++v)
      os << "    " << id(f.global(d, v)) << " [label=" << quote(label_text(def.body.label(v))) << "];\n";
    os << "  }\n";
  }
  for (VertexId v = 0; v < f.size(); ++v)
    for (std::size_t i = 0; i < f.args[v].size(); ++i) arg_edge(os, id(v), id(f.args[v][i]), i, f.args[v].size());
  os << "  root -> " << id(f.root()) << " [style=dashed, color=blue];\n";
  for (VertexId v = 0; v < f.size(); ++v)
    if (f.callee[v] != FlatRgs::kNone)
      os << "  " << id(v) << " -> " << id(f.def_root[f.callee[v]]) << " [style=dashed, color=blue];\n";
  for (VertexId v = 0; v < f.size(); ++v) {
    const Label& l = f.labels[v];
    std::size_t d = f.def_of[v];
    if (!l.is_input() || d == f.root_def || uses[d] != 1 || l.index < 1 || l.index > f.args[occ[d]].size()) continue;
    os << "  " << id(v) << " -> " << id(f.args[occ[d]][l.index - 1]) << " [style=dashed, color=red];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const Sntg& s) {
  auto id = [](VertexId v) { return "v" + std::to_string(v); };
  std::map<VertexId, std::vector<VertexId>> clusters;
  std::vector<VertexId> loose;
  for (VertexId v = 0; v < s.size(); ++v) {
    if (s.anc[v].empty()) loose.push_back(v);
    else clusters[s.anc[v].back()].push_back(v);
  }
  std::ostringstream os;
  header(os, id(s.root));
  for (VertexId v : loose) os << "  " << id(v) << " [label=" << quote(label_text(s.labels[v])) << "];\n";
  for (const auto& [owner, members] : clusters) {
    os << "  subgraph cluster_" << owner << " {\n    label=" << quote(s.names[owner]) << ";\n";
    for (VertexId v : members) os << "    " << id(v) << " [label=" << quote(label_text(s.labels[v])) << "];\n";
    os << "  }\n";
  }
  for (VertexId v = 0; v < s.size(); ++v)
    for (std::size_t i = 0; i < s.args[v].size(); ++i) arg_edge(os, id(v), id(s.args[v][i]), i, s.args[v].size());
  for (VertexId v = 0; v < s.size(); ++v)
    if (s.call[v]) os << "  " << id(v) << " -> " << id(*s.call[v]) << " [style=dashed, color=blue];\n";
  for (VertexId v = 0; v < s.size(); ++v)
    if (s.ret[v]) os << "  " << id(v) << " -> " << id(*s.ret[v]) << " [style=dashed, color=red];\n";
  os << "}\n";
  return os.str();
}

std::string export_dot(const FoGraph& fg) {
  const TermGraph& g = fg.graph;
  auto id = [](VertexId v) { return "v" + std::to_string(v); };
  std::ostringstream os;
  header(os, id(g.root()));
  for (VertexId v = 0; v < g.size(); ++v) os << "  " << id(v) << " [label=" << quote(label_text(g.label(v))) << "];\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto& a = g.args(v);
    LabelKind k = g.label(v).kind;
    for (std::size_t i = 0; i < a.size(); ++i) {
      bool back = (k == LabelKind::FoInput && i == 1) || k == LabelKind::FoInputRoot;
      arg_edge(os, id(v), id(a[i]), i, a.size(), back ? "dotted" : "solid");
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ntg
