#include "ratstoch/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "ratstoch/analysis.hpp"
#include "ratstoch/classify.hpp"
#include "ratstoch/constructions.hpp"
#include "ratstoch/equivalence.hpp"
#include "ratstoch/fixtures.hpp"
#include "ratstoch/io.hpp"
#include "ratstoch/reduction.hpp"

namespace ratstoch::cli {

namespace {

MultiplicityAutomaton load(const std::string& path) { return io::parse_automaton(io::read_file(path)); }

std::vector<MultiplicityAutomaton> load_all(const std::vector<std::string>& paths) {
  std::vector<MultiplicityAutomaton> out;
  for (const auto& p : paths) out.push_back(load(p));
  return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? " " : "") + items[i];
  return s;
}

std::string rationals(const Vector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return join(parts);
}

std::string words(const std::vector<std::string>& alphabet, const std::vector<Word>& ws) {
  std::vector<std::string> parts;
  for (const auto& w : ws) parts.push_back(format_word(alphabet, w));
  return join(parts);
}

void emit_automaton(std::ostream& out, const MultiplicityAutomaton& a, const std::string& path) {
  out << "states: " << a.num_states() << "\n";
  out << "automaton: " << io::serialize_automaton_compact(a) << "\n";
  if (path.empty()) return;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io::ParseError("cannot write '" + path + "'");
  file << io::serialize_automaton(a);
}

ReductionMode parse_mode(const std::string& text) {
  if (text == "field") return ReductionMode::Field;
  if (text == "cone") return ReductionMode::Cone;
  throw std::invalid_argument("unknown mode '" + text + "' (expected field or cone)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of rational stochastic languages and multiplicity automata", "ratstoch"};
  app.require_subcommand(1);

  std::string file;
  std::string file_b;
  std::string word_text;
  std::string output;
  std::string mode = "field";
  std::string name;
  std::size_t max_len = 8;
  std::size_t max_states = 8;
  std::size_t depth = 3;
  bool nonneg = false;
  std::vector<std::string> gens;

  auto* eval = app.add_subcommand("eval", "Evaluate r_A(w)");
  eval->add_option("file", file)->required();
  eval->add_option("word", word_text, "Word, @ for the empty word")->required();

  auto* sum = app.add_subcommand("sum", "Decide convergence of the total sum and compute it");
  sum->add_option("file", file)->required();

  auto* sums = app.add_subcommand("sums", "Per-state sums");
  sums->add_option("file", file)->required();

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two automata");
  equiv->add_option("a", file)->required();
  equiv->add_option("b", file_b)->required();

  auto* combine = app.add_subcommand("combine", "Express a series as a combination of generators");
  combine->add_option("target", file)->required();
  combine->add_option("generators", gens)->required();
  combine->add_flag("--nonneg", nonneg, "Require nonnegative coefficients");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an automaton");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--mode", mode, "field or cone")->capture_default_str();
  reduce_cmd->add_option("-o,--output", output, "Write the result document here");

  auto* rank_cmd = app.add_subcommand("rank", "Hankel rank");
  rank_cmd->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Structural and bounded semantic classification");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--max-len", max_len, "Length bound of the negativity search")->capture_default_str();

  auto* residual = app.add_subcommand("residual", "Residual u^-1 r_A");
  residual->add_option("file", file)->required();
  residual->add_option("word", word_text)->required();
  residual->add_option("-o,--output", output);

  auto* pda = app.add_subcommand("pda", "Determinize to a probabilistic deterministic automaton");
  pda->add_option("file", file)->required();
  pda->add_option("--max-states", max_states)->capture_default_str();
  pda->add_option("-o,--output", output);

  auto* prefixial = app.add_subcommand("prefixial", "Prefixial PRA from the reduced-PRA witnesses");
  prefixial->add_option("file", file)->required();
  prefixial->add_option("-o,--output", output);

  auto* synth = app.add_subcommand("synth-pa", "Build a PA from stable generators");
  synth->add_option("target", file)->required();
  synth->add_option("generators", gens)->required();
  synth->add_option("-o,--output", output);

  auto* minimal = app.add_subcommand("minimal-gens", "Minimal residual generating set up to a depth");
  minimal->add_option("file", file)->required();
  minimal->add_option("--depth", depth)->capture_default_str();

  auto* hardness = app.add_subcommand("hardness", "Reduced-PA instance from DFAs");
  hardness->add_option("dfa-files", gens)->required();
  hardness->add_option("-o,--output", output);

  auto* fixture = app.add_subcommand("fixture", "Print a built-in fixture document");
  fixture->add_option("name", name)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) {
      const auto a = load(file);
      out << "value: " << to_string(evaluate(a, parse_word(a.alphabet(), word_text))) << "\n";
      return kOk;
    }
    if (sum->parsed()) {
      const auto s = total_sum(load(file));
      out << "converges: " << yes_no(s.converges()) << "\n";
      if (s.converges()) out << "value: " << to_string(s.value) << "\n";
      return kOk;
    }
    if (sums->parsed()) {
      const auto a = load(file);
      const auto s = state_sums(a);
      out << "converges: " << yes_no(s.has_value()) << "\n";
      if (s)
        for (StateIndex q = 0; q < a.num_states(); ++q)
          out << "sum." << a.states()[q] << ": " << to_string((*s)[q]) << "\n";
      return kOk;
    }
    if (equiv->parsed()) {
      const auto r = are_equivalent(load(file), load(file_b));
      out << "equal: " << yes_no(r.equal()) << "\n";
      if (r.equal()) return kOk;
      out << "witness: " << format_word(r.alphabet, r.witness) << "\n";
      out << "left: " << to_string(r.left) << "\n";
      out << "right: " << to_string(r.right) << "\n";
      return kDistinct;
    }
    if (combine->parsed()) {
      const auto r = express_combination(load(file), load_all(gens), nonneg);
      out << "expressible: " << yes_no(r.expressible()) << "\n";
      if (!r.expressible()) return kInfeasible;
      out << "coefficients: " << rationals(r.coefficients) << "\n";
      return kOk;
    }
    if (reduce_cmd->parsed()) {
      emit_automaton(out, reduce(load(file), parse_mode(mode)), output);
      return kOk;
    }
    if (rank_cmd->parsed()) {
      out << "rank: " << hankel_rank(load(file)) << "\n";
      return kOk;
    }
    if (classify_cmd->parsed()) {
      const auto a = load(file);
      const auto c = classify(a, max_len);
      out << "trimmed: " << yes_no(c.trimmed) << "\n";
      out << "semi_pa: " << yes_no(c.semi_pa) << "\n";
      out << "pa: " << yes_no(c.pa) << "\n";
      out << "pda: " << yes_no(c.pda) << "\n";
      if (!c.pra_reduced) {
        out << "pra_reduced: n/a\n";
      } else {
        const auto& p = *c.pra_reduced;
        out << "pra_reduced: " << yes_no(p.result.pra) << "\n";
        out << "pra_searched_on: " << (p.on_cone_reduction ? "cone_reduction" : "input") << "\n";
        for (std::size_t q = 0; q < p.result.witnesses.size(); ++q)
          out << "witness." << p.states[q] << ": " << format_word(a.alphabet(), p.result.witnesses[q]) << "\n";
      }
      out << "sum_is_one: " << yes_no(c.stochastic.sum_is_one) << "\n";
      out << "nonneg_up_to: " << c.stochastic.nonneg_up_to << "\n";
      out << "violation: "
          << (c.stochastic.violation ? format_word(a.alphabet(), *c.stochastic.violation) : "none") << "\n";
      out << "note: bounded check only; stochasticity of a rational MA is undecidable in general\n";
      return kOk;
    }
    if (residual->parsed()) {
      const auto a = load(file);
      const Word u = parse_word(a.alphabet(), word_text);
      out << "prefix_weight: " << to_string(prefix_weight(a, u)) << "\n";
      emit_automaton(out, residual_automaton(a, u), output);
      return kOk;
    }
    if (pda->parsed()) {
      const auto r = determinize_to_pda(load(file), max_states);
      out << "discovered: " << r.discovered_residuals << "\n";
      if (r.tag == DeterminizationOutcome::Tag::BoundExceeded) {
        out << "result: bound_exceeded\n";
        return kBoundExceeded;
      }
      out << "result: pda\n";
      emit_automaton(out, *r.pda, output);
      return kOk;
    }
    if (prefixial->parsed()) {
      const auto a = load(file);
      if (!is_pa(a)) throw std::invalid_argument("prefixial: input is not a PA");
      const auto source = is_reduced(a, ReductionMode::Cone) ? a : reduce(a, ReductionMode::Cone);
      if (!is_pa(source)) throw std::logic_error("prefixial: Cone reduction of a PA is not a PA");
      const auto pra = is_pra_reduced(source);
      out << "pra_reduced: " << yes_no(pra.pra) << "\n";
      if (!pra.pra) return kInfeasible;
      emit_automaton(out, to_prefixial_pra(source, pra.witnesses), output);
      return kOk;
    }
    if (synth->parsed()) {
      const auto r = synthesize_pa(load(file), load_all(gens));
      out << "synthesized: " << yes_no(r.has_value()) << "\n";
      if (!r) return kInfeasible;
      emit_automaton(out, *r, output);
      return kOk;
    }
    if (minimal->parsed()) {
      const auto a = load(file);
      const auto r = minimal_residual_generators(a, depth);
      out << "found: " << yes_no(r.has_value()) << "\n";
      if (!r) return kBoundExceeded;
      out << "generators: " << words(a.alphabet(), *r) << "\n";
      return kOk;
    }
    if (hardness->parsed()) {
      std::vector<Dfa> dfas;
      for (const auto& p : gens) dfas.push_back(io::parse_dfa(io::read_file(p)));
      emit_automaton(out, pra_hardness_instance(dfas), output);
      return kOk;
    }
    if (fixture->parsed()) {
      out << io::serialize_automaton(fixtures::build(name));
      return kOk;
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace ratstoch::cli
