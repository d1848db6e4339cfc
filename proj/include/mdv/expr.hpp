#ifndef MDV_EXPR_HPP
#define MDV_EXPR_HPP

#include <string>

#include "mdv/pbw.hpp"
#include "mdv/weyl.hpp"

namespace mdv {

// Tiny expression grammar shared by the compute subjects:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' integer)?
//   primary:= '(' expr ')' | '-' factor | name | integer ['/' integer]
// Multiplication is explicit and noncommutative; '^' binds tightest.
// Throws UsageError on malformed input or an unknown name.

// Names: e, h, f.
PBWOp parse_pbw(const std::string& s);

// Names: x, D on the line side; xh, Dh on the dual side.
WeylOp parse_weyl(const std::string& s, Side side);

}  // namespace mdv

#endif
