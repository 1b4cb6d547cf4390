#include "shp/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "shp/core.hpp"
#include "shp/heaps.hpp"
#include "shp/multiplicity.hpp"
#include "shp/process.hpp"
#include "shp/recognizer.hpp"

namespace shp::cli {

namespace {

using nlohmann::json;

constexpr const char* kCapVariable = "SHP_RESOURCE_CAP";

std::size_t default_cap() {
  if (const char* env = std::getenv(kCapVariable)) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(kCapVariable) + " must be a positive integer");
    }
  }
  return 20'000'000;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string rational_pq(const Rational& r) {
  return to_decimal(boost::multiprecision::numerator(r)) + "/" +
         to_decimal(boost::multiprecision::denominator(r));
}

std::string rational_text(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return to_decimal(boost::multiprecision::numerator(r));
  }
  return rational_pq(r);
}

std::string double_text(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

struct Shared {
  int k = 2;
  std::string mode = "nonstrict";
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 1;
};

// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void add_format(CLI::App* cmd, Shared& s) {
  cmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", s.out_path, "Write results to this file instead of stdout");
}

void add_k(CLI::App* cmd, Shared& s) {
  cmd->add_option("--k", s.k, "Arity k (letters range over 0..k)")
      ->required()
      ->check(CLI::PositiveNumber);
}

void add_mode(CLI::App* cmd, Shared& s) {
  cmd->add_option("--mode", s.mode, "Strictness of the dominance test")
      ->check(CLI::IsMember({"nonstrict", "paper-strict", "either-strict"}))
      ->capture_default_str();
}

void write_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed Hammersley process: membership, multiplicities, heap decompositions"};
  app.name("shp");
  app.require_subcommand(1, 1);

  Shared s;
  int result = ExitCode::ok;
  std::string word_text;
  std::size_t n = 0;
  std::string perm_text;
  std::string signs_text;
  std::string dot_path;
  bool literal = false;
  bool exact = false;
  std::size_t samples = 10'000;
  unsigned threads = 1;
  std::string which = "a1";

  auto* member = app.add_subcommand("member", "Decide membership of a word (exit 0 member, 1 not)");
  add_k(member, s);
  add_mode(member, s);
  add_format(member, s);
  member->add_option("word", word_text, "Word such as \"2+ 1-\"")->required();

  auto* mult = app.add_subcommand("mult", "Multiplicity F_k(w) of a word");
  add_k(mult, s);
  add_format(mult, s);
  mult->add_option("word", word_text, "Word such as \"2+ 2+\"");
  mult->add_flag("--literal", literal,
                 "Evaluate the unguarded variant of the backward recursion");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "All words after n steps with multiplicities");
  add_k(enumerate_cmd, s);
  add_format(enumerate_cmd, s);
  enumerate_cmd->add_option("--n", n, "Number of steps")->required();

  auto* simulate = app.add_subcommand("simulate", "Random trajectory of n steps");
  add_k(simulate, s);
  add_format(simulate, s);
  simulate->add_option("--n", n, "Number of steps")->required();
  simulate->add_option("--seed", s.seed, "Generator seed")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Greedy heap decomposition of a signed permutation");
  add_k(decompose, s);
  add_format(decompose, s);
  decompose->add_option("--perm", perm_text, "Values, e.g. 1,8,15")->required();
  decompose->add_option("--signs", signs_text, "Signs, e.g. -,+,-")->required();
  decompose->add_option("--dot", dot_path, "Also write the forest as Graphviz DOT");

  auto* derive = app.add_subcommand("derive-sign", "Signs making a heapable permutation heapable");
  derive->add_option("--k", s.k, "Arity k")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(derive, s);
  derive->add_option("--perm", perm_text, "Values, e.g. 1,2,3")->required();

  auto* scaling = app.add_subcommand("scaling", "Expected greedy tree count Z_n^k");
  add_k(scaling, s);
  add_format(scaling, s);
  scaling->add_option("--n", n, "Permutation length")->required();
  scaling->add_flag("--exact", exact, "Exact rational value via multiplicities");
  scaling->add_option("--samples", samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  scaling->add_option("--seed", s.seed, "Generator seed")->capture_default_str();
  scaling->add_option("--threads", threads, "Worker threads for sampling")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* preds = app.add_subcommand("predecessors", "One-step pre-images of a word");
  add_k(preds, s);
  add_format(preds, s);
  preds->add_option("word", word_text, "Word such as \"2+ 1-\"")->required();

  auto* automaton = app.add_subcommand("automaton", "Export a counter automaton as JSON");
  add_k(automaton, s);
  add_mode(automaton, s);
  std::string automaton_format = "json";
  automaton->add_option("--format", automaton_format, "Output format (JSON only)")
      ->check(CLI::IsMember({"json"}))
      ->capture_default_str();
  automaton->add_option("--out", s.out_path, "Write results to this file instead of stdout");
  automaton->add_option("--which", which, "a1 or a2")
      ->check(CLI::IsMember({"a1", "a2"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  }

  const bool as_json = s.format == "json";
  try {
    const std::size_t cap = default_cap();

    if (member->parsed()) {
      const auto w = parse_word(word_text, s.k);
      const auto mode = parse_mode(s.mode);
      const bool in = is_member(w, mode);
      Sink sink(s.out_path, out);
      if (as_json) {
        write_json(sink.get(), {{"word", format_word(w)}, {"k", s.k}, {"mode", s.mode},
                                {"member", in}, {"lambda_plus", lambda_plus(w)},
                                {"lambda_minus", lambda_minus(w)}});
      } else {
        sink.get() << (in ? "member" : "not member") << '\n';
      }
      result = in ? ExitCode::ok : ExitCode::negative;
    } else if (mult->parsed()) {
      const auto w = parse_word(word_text, s.k);
      BigInt m;
      if (literal) {
        m = multiplicity_literal(w);
      } else {
        PowerSeriesTable table(s.k, cap);
        m = table.multiplicity(w);
      }
      Sink sink(s.out_path, out);
      if (as_json) {
        json j{{"word", format_word(w)}, {"k", s.k}, {"multiplicity", to_decimal(m)}};
        if (literal) j["literal"] = true;
        write_json(sink.get(), j);
      } else {
        sink.get() << m << '\n';
      }
    } else if (enumerate_cmd->parsed()) {
      const auto table = enumerate(s.k, n, {cap});
      Sink sink(s.out_path, out);
      if (as_json) {
        json entries = json::array();
        BigInt total = 0;
        for (const auto& [w, m] : table) {
          entries.push_back({{"word", format_word(w)}, {"multiplicity", to_decimal(m)}});
          total += m;
        }
        write_json(sink.get(), {{"k", s.k}, {"n", n}, {"total", to_decimal(total)},
                                {"entries", std::move(entries)}});
      } else {
        write_multiplicities(sink.get(), table);
      }
    } else if (simulate->parsed()) {
      const auto trajectory = sample_trajectory(s.k, n, s.seed);
      Sink sink(s.out_path, out);
      if (as_json) {
        json words = json::array();
        for (const auto& w : trajectory) words.push_back(format_word(w));
        write_json(sink.get(), {{"k", s.k}, {"n", n}, {"seed", s.seed},
                                {"trajectory", std::move(words)}});
      } else {
        for (std::size_t m = 0; m < trajectory.size(); ++m) {
          sink.get() << m << '\t' << format_word(trajectory[m]) << '\n';
        }
      }
    } else if (decompose->parsed()) {
      const auto p = parse_signed_permutation(perm_text, signs_text);
      const auto d = greedy_decompose(p, s.k);
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw std::runtime_error("cannot open " + dot_path + " for writing");
        dot << to_dot(d.forest);
      }
      Sink sink(s.out_path, out);
      if (as_json) {
        write_json(sink.get(), {{"k", s.k}, {"trees", d.trees},
                                {"word", format_word(forest_to_word(d.forest))},
                                {"forest", to_json(d.forest)}});
      } else {
        sink.get() << "trees: " << d.trees << '\n';
      }
    } else if (derive->parsed()) {
      const auto sigma = parse_values(perm_text);
      const auto tau = derive_sign(sigma, s.k);
      Sink sink(s.out_path, out);
      if (as_json) {
        write_json(sink.get(), {{"k", s.k}, {"perm", format_values(sigma)},
                                {"heapable", tau.has_value()},
                                {"signs", tau ? json(format_signs(*tau)) : json(nullptr)}});
      } else {
        sink.get() << (tau ? format_signs(*tau) : std::string("not heapable")) << '\n';
      }
      result = tau ? ExitCode::ok : ExitCode::negative;
    } else if (scaling->parsed()) {
      Sink sink(s.out_path, out);
      if (exact) {
        const auto z = scaling_exact(s.k, n, cap);
        if (as_json) {
          write_json(sink.get(), {{"k", s.k}, {"n", n}, {"Z_exact", rational_pq(z)}});
        } else {
          sink.get() << rational_text(z) << '\n';
        }
      } else {
        const auto est = scaling_montecarlo(s.k, n, samples, s.seed, threads);
        const double mean = static_cast<double>(est.mean);
        if (as_json) {
          write_json(sink.get(), {{"k", s.k}, {"n", n}, {"Z_mc", mean},
                                  {"stderr", est.standard_error}, {"samples", est.samples},
                                  {"seed", est.seed}});
        } else {
          sink.get() << "Z_mc=" << double_text(mean) << " stderr="
                     << double_text(est.standard_error) << " samples=" << est.samples
                     << " seed=" << est.seed << '\n';
        }
      }
    } else if (preds->parsed()) {
      const auto w = parse_word(word_text, s.k);
      const auto list = predecessors(w);
      Sink sink(s.out_path, out);
      if (as_json) {
        json items = json::array();
        for (const auto& p : list) {
          items.push_back({{"word", format_word(p.word)},
                           {"position", p.event.position},
                           {"polarity", std::string(1, sign_char(p.event.polarity))},
                           {"kill", p.kill_position ? json(*p.kill_position) : json(nullptr)}});
        }
        write_json(sink.get(), {{"word", format_word(w)}, {"k", s.k},
                                {"predecessors", std::move(items)}});
      } else {
        for (const auto& p : list) {
          sink.get() << format_word(p.word) << '\t' << p.event.position
                     << sign_char(p.event.polarity) << '\t'
                     << (p.kill_position ? std::to_string(*p.kill_position) : "-") << '\n';
        }
      }
    } else if (automaton->parsed()) {
      const auto mode = parse_mode(s.mode);
      const auto a = which == "a1" ? build_a1(s.k, mode) : build_a2(s.k, mode);
      Sink sink(s.out_path, out);
      auto j = a.to_json();
      j["mode"] = s.mode;
      sink.get() << j.dump(2) << '\n';
    }
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << " (raise " << kCapVariable << ")\n";
    return ExitCode::resource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  }
  return result;
}

}  // namespace shp::cli
