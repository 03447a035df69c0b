#include "ntg/io.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "ntg/errors.hpp"

namespace ntg {

namespace {

bool is_word_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '@' || c == '.' || c == '\'' ||
         c == '$' || c == '~' || c == '-' || c >= 0x80;
}

struct Token {
  enum Kind { Word, Punct, End } kind;
  std::string text;
  std::size_t line;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(c)) {
      ++i;
    } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (is_word_char(c)) {
      std::size_t j = i;
      while (j < s.size() && is_word_char(s[j])) ++j;
      out.push_back({Token::Word, std::string(s.substr(i, j - i)), line});
      i = j;
    } else if (std::string_view(";,:(){}/").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Punct, std::string(1, static_cast<char>(c)), line});
      ++i;
    } else {
      throw ParseError(line, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::End, "", line});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}
  const Token& peek() const { return toks_[pos_]; }
  bool at(std::string_view p) const { return peek().kind != Token::End && peek().text == p; }
  bool at_end() const { return peek().kind == Token::End; }
  std::size_t line() const { return peek().line; }
  void expect(std::string_view p) {
    if (!at(p)) fail("expected '" + std::string(p) + "'");
    ++pos_;
  }
  bool accept(std::string_view p) {
    if (!at(p)) return false;
    ++pos_;
    return true;
  }
  std::string word(const char* what) {
    if (peek().kind != Token::Word) fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }
  std::uint32_t nat() {
    std::string w = word("a number");
    for (char c : w)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a number, got '" + w + "'");
    if (w.size() > 9) fail("number too large");
    return static_cast<std::uint32_t>(std::stoul(w));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::string got = at_end() ? "end of input" : "'" + peek().text + "'";
    throw ParseError(line(), msg + ", got " + got);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Arities parse_signature(Cursor& c) {
  Arities sig;
  if (!c.accept("atomic")) return sig;
  if (c.accept(";")) return sig;
  do {
    std::size_t line = c.line();
    std::string name = c.word("a symbol name");
    c.expect("/");
    std::uint32_t ar = c.nat();
    if (!sig.emplace(name, ar).second) throw ParseError(line, "atomic symbol " + name + " declared twice");
  } while (c.accept(","));
  c.expect(";");
  return sig;
}

struct RawLine {
  std::string id;
  std::string label;  // "out", "in", or a symbol
  std::uint32_t index = 0;
  std::vector<std::string> args;
  std::size_t line = 0;
};

RawLine parse_line(Cursor& c, bool first_order) {
  RawLine l;
  l.line = c.line();
  l.id = c.word("a vertex id");
  c.expect(":");
  l.label = c.word("a label");
  if (!first_order && l.label == "in") l.index = c.nat();
  if (c.accept("(")) {
    do l.args.push_back(c.word("a vertex id"));
    while (c.accept(","));
    c.expect(")");
  }
  c.expect(";");
  return l;
}

struct Body {
  std::vector<Label> labels;
  std::vector<std::vector<VertexId>> args;
  std::vector<std::string> names;
};

// Resolves vertex ids; `resolve` turns a raw line into a label.
template <class Resolve>
Body build_body(const std::vector<RawLine>& lines, Resolve resolve) {
  std::map<std::string, VertexId> ids;
  for (const auto& l : lines)
    if (!ids.emplace(l.id, static_cast<VertexId>(ids.size())).second)
      throw ParseError(l.line, "vertex " + l.id + " defined twice");
  Body b;
  for (const auto& l : lines) {
    Label lab = resolve(l);
    if (lab.arity != l.args.size())
      throw ParseError(l.line, "label " + l.label + " expects " + std::to_string(lab.arity) +
                                   " arguments, got " + std::to_string(l.args.size()));
    std::vector<VertexId> a;
    for (const auto& t : l.args) {
      auto it = ids.find(t);
      if (it == ids.end()) throw ParseError(l.line, "unknown vertex " + t);
      a.push_back(it->second);
    }
    b.labels.push_back(std::move(lab));
    b.args.push_back(std::move(a));
    b.names.push_back(l.id);
  }
  return b;
}

// Per-scope printable names: stored names when they are usable, otherwise
// v<k> by discovery index.
std::vector<std::string> printable_names(const TermGraph& g, const std::vector<VertexId>& order) {
  std::vector<std::string> names(g.size());
  bool usable = g.has_names();
  std::set<std::string> seen;
  if (usable)
    for (VertexId v = 0; v < g.size(); ++v)
      if (!is_valid_identifier(g.name(v)) || !seen.insert(g.name(v)).second) usable = false;
  for (std::size_t k = 0; k < order.size(); ++k)
    names[order[k]] = usable ? g.name(order[k]) : "v" + std::to_string(k);
  return names;
}

std::vector<VertexId> print_order(const TermGraph& g) {
  std::vector<VertexId> order = reachable_from(g, g.root());
  std::vector<char> seen(g.size(), 0);
  for (VertexId v : order) seen[v] = 1;
  for (VertexId v = 0; v < g.size(); ++v)
    if (!seen[v]) order.push_back(v);
  return order;
}

void print_signature(std::ostringstream& os, const Arities& atomic) {
  os << "atomic";
  bool first = true;
  for (const auto& [name, ar] : atomic) {
    os << (first ? " " : ", ") << name << "/" << ar;
    first = false;
  }
  os << ";\n";
}

void print_lines(std::ostringstream& os, const TermGraph& g,
                 std::string (*label_text)(const Label&)) {
  std::vector<VertexId> order = print_order(g);
  std::vector<std::string> names = printable_names(g, order);
  for (VertexId v : order) {
    os << "  " << names[v] << ": " << label_text(g.label(v));
    if (!g.args(v).empty()) {
      os << "(";
      for (std::size_t i = 0; i < g.args(v).size(); ++i)
        os << (i ? ", " : "") << names[g.args(v)[i]];
      os << ")";
    }
    os << ";\n";
  }
}

std::string rgs_label_text(const Label& l) {
  switch (l.kind) {
    case LabelKind::Output:
      return "out";
    case LabelKind::Input:
      return "in " + std::to_string(l.index);
    default:
      return l.symbol;
  }
}

std::string fo_label_text(const Label& l) {
  switch (l.kind) {
    case LabelKind::FoOutputRoot:
      return "out_r";
    case LabelKind::FoOutput:
      return "out";
    case LabelKind::FoInput:
      return "in";
    case LabelKind::FoInputRoot:
      return "in_r";
    default:
      return l.symbol;
  }
}

}  // namespace

bool is_valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_word_char(static_cast<unsigned char>(c))) return false;
  return true;
}

Rgs parse_rgs_unchecked(std::string_view text) {
  Cursor c(lex(text));
  Arities atomic = parse_signature(c);
  std::string root;
  std::size_t root_line = 0;
  if (c.at("root")) {
    root_line = c.line();
    c.expect("root");
    root = c.word("a root symbol");
    c.expect(";");
  }
  struct RawDef {
    std::string symbol;
    std::uint32_t arity;
    std::vector<RawLine> lines;
    std::size_t line;
  };
  std::vector<RawDef> raw;
  std::map<std::string, std::uint32_t> nested;
  while (!c.at_end()) {
    RawDef d;
    d.line = c.line();
    c.expect("def");
    d.symbol = c.word("a symbol name");
    c.expect("/");
    d.arity = c.nat();
    c.expect("{");
    while (!c.accept("}")) {
      if (c.at_end()) c.fail("unterminated def");
      d.lines.push_back(parse_line(c, false));
    }
    if (!nested.emplace(d.symbol, d.arity).second)
      throw ParseError(d.line, "symbol " + d.symbol + " defined twice");
    if (atomic.count(d.symbol))
      throw ParseError(d.line, "symbol " + d.symbol + " is declared atomic");
    raw.push_back(std::move(d));
  }
  if (raw.empty()) throw ParseError(c.line(), "no definitions");
  if (root.empty()) {
    for (const auto& d : raw)
      if (d.arity == 0) {
        root = d.symbol;
        break;
      }
    if (root.empty()) throw ParseError(1, "no nullary definition to serve as root");
  } else if (!nested.count(root)) {
    throw ParseError(root_line, "root symbol " + root + " is not defined");
  }

  std::vector<Definition> defs;
  for (const auto& d : raw) {
    auto resolve = [&](const RawLine& l) -> Label {
      if (l.label == "out") return Label::output();
      if (l.label == "in") return Label::input(l.index);
      if (auto it = atomic.find(l.label); it != atomic.end()) return Label::atomic(l.label, it->second);
      if (auto it = nested.find(l.label); it != nested.end()) return Label::nested(l.label, it->second);
      throw ParseError(l.line, "unknown symbol " + l.label);
    };
    if (d.lines.empty()) throw ParseError(d.line, "def " + d.symbol + " has an empty body");
    Body b = build_body(d.lines, resolve);
    VertexId root_v = static_cast<VertexId>(-1);
    for (VertexId v = 0; v < b.labels.size(); ++v)
      if (b.labels[v].is_output()) {
        root_v = v;
        break;
      }
    if (root_v == static_cast<VertexId>(-1))
      throw ParseError(d.line, "def " + d.symbol + " has no out line");
    try {
      defs.push_back({d.symbol, d.arity,
                      TermGraph(std::move(b.labels), std::move(b.args), root_v, std::move(b.names))});
    } catch (const GraphError& e) {
      throw ParseError(d.line, e.what());
    }
  }
  return Rgs(std::move(atomic), std::move(defs), root);
}

Rgs parse_rgs(std::string_view text) {
  Rgs r = parse_rgs_unchecked(text);
  ValidationReport rep = validate_rgs(r);
  if (!rep.ok()) throw ValidationError(std::move(rep));
  return r;
}

std::string print_rgs(const Rgs& r) {
  std::ostringstream os;
  print_signature(os, r.atomic());
  os << "root " << r.root_symbol() << ";\n";
  std::vector<std::string> order;
  std::set<std::string> done;
  // Breadth-first over definitions, visiting each body in printed order so
  // that reprinting a parsed document gives the same text.
  if (r.find(r.root_symbol())) {
    done.insert(r.root_symbol());
    order.push_back(r.root_symbol());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const TermGraph& body = r.find(order[k])->body;
      for (VertexId v : print_order(body)) {
        const Label& l = body.label(v);
        if (l.is_nested() && r.find(l.symbol) && done.insert(l.symbol).second) order.push_back(l.symbol);
      }
    }
  }
  for (const auto& d : r.definitions())
    if (done.insert(d.symbol).second) order.push_back(d.symbol);
  for (const auto& s : order) {
    const Definition& d = *r.find(s);
    os << "\ndef " << d.symbol << "/" << d.arity << " {\n";
    print_lines(os, d.body, rgs_label_text);
    os << "}\n";
  }
  return os.str();
}

FoGraph parse_fo(std::string_view text) {
  Cursor c(lex(text));
  Arities atomic = parse_signature(c);
  c.expect("tg");
  c.expect("{");
  std::size_t root_line = c.line();
  c.expect("root");
  std::string root = c.word("a root vertex");
  c.expect(";");
  std::vector<RawLine> lines;
  while (!c.accept("}")) {
    if (c.at_end()) c.fail("unterminated tg block");
    lines.push_back(parse_line(c, true));
  }
  if (!c.at_end()) c.fail("trailing input after tg block");
  auto resolve = [&](const RawLine& l) -> Label {
    if (l.label == "out_r") return Label::fo_output_root();
    if (l.label == "out") return Label::fo_output();
    if (l.label == "in") return Label::fo_input();
    if (l.label == "in_r") return Label::fo_input_root();
    auto it = atomic.find(l.label);
    if (it == atomic.end()) throw ParseError(l.line, "unknown symbol " + l.label);
    return it->second == 0 ? Label::primed(l.label) : Label::atomic(l.label, it->second);
  };
  Body b = build_body(lines, resolve);
  VertexId root_v = static_cast<VertexId>(-1);
  for (VertexId v = 0; v < b.names.size(); ++v)
    if (b.names[v] == root) root_v = v;
  if (root_v == static_cast<VertexId>(-1)) throw ParseError(root_line, "unknown root vertex " + root);
  try {
    return {std::move(atomic),
            TermGraph(std::move(b.labels), std::move(b.args), root_v, std::move(b.names))};
  } catch (const GraphError& e) {
    throw ParseError(root_line, e.what());
  }
}

std::string print_fo(const FoGraph& g) {
  std::ostringstream os;
  print_signature(os, g.atomic);
  std::vector<VertexId> order = print_order(g.graph);
  std::vector<std::string> names = printable_names(g.graph, order);
  os << "tg {\n  root " << names[g.graph.root()] << ";\n";
  print_lines(os, g.graph, fo_label_text);
  os << "}\n";
  return os.str();
}

}  // namespace ntg
