#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "lamvm/term.hpp"

// Surface syntax:
//   term := '\' ident+ '.' term | atom+          (application left-assoc)
//   atom := ident | '(' term ')' | '#' nat | 'true' | 'false'
// '#n' abbreviates the Church numeral, 'true'/'false' the Church booleans.
// Named variables resolve to the nearest enclosing binder.

namespace lamvm {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string &message, size_t pos)
        : std::runtime_error(message), position(pos) {}
};

// throws ParseError (with byte offset) on malformed or unbound input
TermPtr parse_term(const std::string &text);

enum class PrintStyle { Named, DeBruijn };

std::string print_term(const TermPtr &s, PrintStyle style);

}  // namespace lamvm
