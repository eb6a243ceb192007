#include "ratstoch/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ratstoch::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const Json& doc, const std::set<std::string>& required, const std::set<std::string>& allowed) {
  if (!doc.is_object()) fail("document must be a JSON object");
  for (const auto& k : required)
    if (!doc.contains(k)) fail("missing key \"" + k + "\"");
  for (const auto& [k, v] : doc.items())
    if (!allowed.contains(k)) fail("unknown key \"" + k + "\"");
}

std::vector<std::string> name_list(const Json& doc, const std::string& key, bool letters) {
  const Json& list = doc.at(key);
  if (!list.is_array()) fail("\"" + key + "\" must be an array of strings");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = key + "[" + std::to_string(i) + "]";
    if (!list[i].is_string()) fail(where + " must be a string");
    std::string name = list[i].get<std::string>();
    if (name.empty()) fail(where + " is empty");
    if (letters && (name == "@" || name.find('.') != std::string::npos))
      fail(where + " \"" + name + "\": letters may not be \"@\" or contain '.'");
    if (!seen.insert(name).second) fail(where + " \"" + name + "\" is duplicated");
    out.push_back(std::move(name));
  }
  return out;
}

std::string string_field(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where + " must be a string");
  return v.get<std::string>();
}

Rational weight_field(const Json& v, const std::string& where) {
  const std::string text = string_field(v, where);
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    fail(where + ": bad weight \"" + text + "\": " + e.what());
  }
}

std::size_t lookup(const std::vector<std::string>& names, const std::string& name, const std::string& what,
                   const std::string& where) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  fail(where + ": unknown " + what + " \"" + name + "\"");
}

Vector weight_map(const Json& doc, const std::string& key, const std::vector<std::string>& states) {
  const Json& map = doc.at(key);
  if (!map.is_object()) fail("\"" + key + "\" must be an object of state -> weight");
  Vector out = zero_vector(states.size());
  for (const auto& [name, value] : map.items()) {
    const std::string where = key + "[\"" + name + "\"]";
    out[lookup(states, name, "state", where)] = weight_field(value, where);
  }
  return out;
}

Json automaton_json(const MultiplicityAutomaton& a) {
  Json doc;
  doc["alphabet"] = a.alphabet();
  doc["states"] = a.states();
  Json initial = Json::object();
  Json final = Json::object();
  for (StateIndex q = 0; q < a.num_states(); ++q) {
    if (!is_zero(a.initial(q))) initial[a.states()[q]] = to_string(a.initial(q));
    if (!is_zero(a.final(q))) final[a.states()[q]] = to_string(a.final(q));
  }
  doc["initial"] = initial;
  doc["final"] = final;
  Json transitions = Json::array();
  for (const auto& t : a.transitions())
    transitions.push_back({a.states()[t.from], a.alphabet()[t.letter], a.states()[t.to], to_string(t.weight)});
  doc["transitions"] = transitions;
  return doc;
}

}  // namespace

MultiplicityAutomaton parse_automaton(std::string_view text) {
  const Json doc = parse_json(text);
  const std::set<std::string> keys{"alphabet", "states", "initial", "final", "transitions"};
  require_keys(doc, keys, keys);
  const auto alphabet = name_list(doc, "alphabet", true);
  const auto states = name_list(doc, "states", false);
  const std::size_t n = states.size();
  Vector initial = weight_map(doc, "initial", states);
  Vector final = weight_map(doc, "final", states);

  const Json& list = doc.at("transitions");
  if (!list.is_array()) fail("\"transitions\" must be an array");
  std::vector<Matrix> mats(alphabet.size(), Matrix(n, n));
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string where = "transitions[" + std::to_string(i) + "]";
    const Json& t = list[i];
    if (!t.is_array() || t.size() != 4) fail(where + " must be [from, letter, to, weight]");
    const std::string from = string_field(t[0], where + " from");
    const std::string letter = string_field(t[1], where + " letter");
    const std::string to = string_field(t[2], where + " to");
    where += " (" + from + ", " + letter + ", " + to + ")";
    const std::size_t p = lookup(states, from, "state", where);
    const std::size_t x = lookup(alphabet, letter, "letter", where);
    const std::size_t q = lookup(states, to, "state", where);
    if (!seen.insert({p, x, q}).second) fail(where + ": duplicate transition triple");
    mats[x](p, q) = weight_field(t[3], where);
  }
  return MultiplicityAutomaton(alphabet, states, std::move(initial), std::move(final), std::move(mats));
}

std::string serialize_automaton(const MultiplicityAutomaton& a) {
  const Json doc = automaton_json(a);
  std::ostringstream out;
  out << "{\n";
  out << "  \"alphabet\": " << doc["alphabet"].dump() << ",\n";
  out << "  \"states\": " << doc["states"].dump() << ",\n";
  out << "  \"initial\": " << doc["initial"].dump() << ",\n";
  out << "  \"final\": " << doc["final"].dump() << ",\n";
  const Json& transitions = doc["transitions"];
  if (transitions.empty()) {
    out << "  \"transitions\": []\n";
  } else {
    out << "  \"transitions\": [\n";
    for (std::size_t i = 0; i < transitions.size(); ++i)
      out << "    " << transitions[i].dump() << (i + 1 < transitions.size() ? ",\n" : "\n");
    out << "  ]\n";
  }
  out << "}\n";
  return out.str();
}

std::string serialize_automaton_compact(const MultiplicityAutomaton& a) { return automaton_json(a).dump(); }

Dfa parse_dfa(std::string_view text) {
  const Json doc = parse_json(text);
  const std::set<std::string> keys{"alphabet", "states", "initial", "accepting", "transitions"};
  require_keys(doc, keys, keys);
  Dfa d;
  d.alphabet = name_list(doc, "alphabet", true);
  d.states = name_list(doc, "states", false);
  d.initial = string_field(doc.at("initial"), "initial");
  lookup(d.states, d.initial, "state", "initial");
  d.accepting = name_list(doc, "accepting", false);
  for (const auto& s : d.accepting) lookup(d.states, s, "state", "accepting");
  const Json& list = doc.at("transitions");
  if (!list.is_array()) fail("\"transitions\" must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string where = "transitions[" + std::to_string(i) + "]";
    const Json& t = list[i];
    if (!t.is_array() || t.size() != 3) fail(where + " must be [from, letter, to]");
    const std::string from = string_field(t[0], where + " from");
    const std::string letter = string_field(t[1], where + " letter");
    const std::string to = string_field(t[2], where + " to");
    where += " (" + from + ", " + letter + ", " + to + ")";
    lookup(d.states, from, "state", where);
    lookup(d.alphabet, letter, "letter", where);
    lookup(d.states, to, "state", where);
    if (!d.delta.emplace(std::make_pair(from, letter), to).second)
      fail(where + ": second transition for the same state and letter");
  }
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ratstoch::io
