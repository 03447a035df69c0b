#pragma once

#include <string>
#include <string_view>

#include "ntg/firstorder.hpp"
#include "ntg/rgs.hpp"

namespace ntg {

// Text format for recursive graph specifications:
//
//   atomic lam/1, app/2, v/0;
//   root n;                       (optional, defaults to the first nullary def)
//   def n/0 {
//     a: out(b);
//     b: lam(c);
//     ...
//   }
//
// Labels are `out`, `in <k>`, an atomic name or a defined nested name.
// Vertex ids are local to their def. `//` starts a comment.

// Parses and validates; throws ParseError or ValidationError.
Rgs parse_rgs(std::string_view text);
// Parses without running validate_rgs.
Rgs parse_rgs_unchecked(std::string_view text);
// Deterministic: defs in dependency BFS order, vertices in discovery order.
std::string print_rgs(const Rgs& r);

// First-order documents:
//
//   atomic lam/1, app/2, v/0;
//   tg {
//     root a;
//     a: out_r(b);
//     ...
//   }
//
// Labels are out_r/1, out/1, in/2, in_r/1 and atomic names. Constants are
// written unprimed and take one argument, which is why the atomic line is
// needed to tell them apart from unary symbols.
FoGraph parse_fo(std::string_view text);
std::string print_fo(const FoGraph& g);

bool is_valid_identifier(std::string_view s);

}  // namespace ntg
