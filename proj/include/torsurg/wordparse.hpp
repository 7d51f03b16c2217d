#pragma once

#include "torsurg/word.hpp"

#include <string>
#include <vector>

namespace torsurg {

// Word DSL: identifiers over [a-z][a-z0-9']*, optional `*` concatenation,
// `^<int>` exponents, bracket sugar [u,v] for commutators, parentheses.
// Throws parse_error with a 1-based column. parse(print(w)) == w.
Word parse_word(const std::string& text, const std::vector<std::string>& generators);

// Canonical rendering (same as word_str).
std::string print_word(const Word& w, const std::vector<std::string>& generators);

}  // namespace torsurg
