#pragma once

#include <string_view>

#include "famrank/qe/ast.hpp"

namespace famrank::qe {

/// Parses one closed sentence.
///
///   formula := iff
///   iff     := implies ("<->" implies)*
///   implies := or ("->" implies)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "!" unary | quant | atom | "(" formula ")"
///   quant   := ("forall" | "exists" | "exists" ">=" N) var "." formula
///   atom    := Q<j> | P<i>(term) | R<i>(term, term) | term "=" term
///   term    := var | c<i> | f<i>(term)
///
/// A quantifier body extends as far right as possible. Throws ParseError
/// with line and column on syntax errors, unknown symbols, arity misuse and
/// unbound variables.
Formula parse(std::string_view text);

}  // namespace famrank::qe
