#ifndef RATSTOCH_IO_HPP
#define RATSTOCH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "ratstoch/automaton.hpp"
#include "ratstoch/classify.hpp"

namespace ratstoch::io {

// Malformed or inconsistent document; the message names the offending key.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON object with "alphabet", "states", "initial", "final" and
// "transitions" ([from, letter, to, weight] entries). Weights are rational
// strings; omitted entries are 0.
MultiplicityAutomaton parse_automaton(std::string_view text);

// Canonical document: zero weights omitted, transitions ordered by
// (from, letter, to), one transition per line.
std::string serialize_automaton(const MultiplicityAutomaton& a);
// The same document on a single line.
std::string serialize_automaton_compact(const MultiplicityAutomaton& a);

// JSON object with "alphabet", "states", "initial" (a state), "accepting"
// and "transitions" ([from, letter, to] entries).
Dfa parse_dfa(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace ratstoch::io

#endif  // RATSTOCH_IO_HPP
