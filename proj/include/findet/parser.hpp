// Recursive-descent parser for the polynomial expression grammar
// (docs/grammar.md). Printing and parsing round-trip.
#ifndef FINDET_PARSER_HPP
#define FINDET_PARSER_HPP

#include <stdexcept>
#include <string>

#include "findet/poly.hpp"

namespace findet {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
};

Poly parse_poly(const std::string& text, const RingSpec* ring);

}  // namespace findet

#endif
