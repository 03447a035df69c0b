#pragma once

// A recursive-descent reader for the DOT subset we emit: one digraph with
// node, edge, attribute and subgraph statements. Independent of the
// exporter; it only sees the text.

#include <map>
#include <optional>
#include <string>

namespace ntg::test {

struct DotSummary {
  std::size_t nodes = 0;  // node statements
  std::size_t clusters = 0;
  std::map<std::string, std::size_t> edges_by_style;  // "" when unstyled
  std::size_t edges() const;
};

struct DotCheck {
  std::optional<DotSummary> summary;
  std::string error;  // with line number when the text is rejected
  explicit operator bool() const { return summary.has_value(); }
};

DotCheck check_dot(const std::string& text);

}  // namespace ntg::test
