// Command-line driver: decisions, search-space printing, enumeration and the
// negative translation for both calculi.  Decision commands exit 0 for yes,
// 1 for no; anything that goes wrong exits 2 with a diagnostic on stderr.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "polsearch/parse.hpp"

using nlohmann::json;
using namespace polsearch;

namespace {

struct Invocation {
  std::string calculus;
  std::string command;
  std::string arg1, arg2;
  int max_size = 8;
  bool back = false;
  std::string kind = "formula";
  std::string format = "text";
};

struct Outcome {
  int exit_code = 0;
  json result;                         // bool, number, or string
  std::vector<std::string> witnesses;  // enumerate/oracle
  bool has_witnesses = false;
  long forest_nodes = 0;
  std::string text;  // text-mode output
};

Outcome run_ljp(const Invocation& in) {
  Outcome out;
  if (in.command == "check") {
    Sequent s = parse_ljp_sequent(in.arg1);
    TermPtr t = parse_ljp_term(in.arg2);
    std::string diag;
    bool ok = check(s, t, &diag);
    out.result = ok;
    out.exit_code = ok ? 0 : 1;
    out.text = ok ? "true" : "false" + (diag.empty() ? "" : " (" + diag + ")");
    return out;
  }
  if (in.command == "translate") {
    if (!in.back) throw PreconditionError("ljp translate maps back to LJT; pass --back");
    if (in.kind == "formula") {
      IForm f = forget_formula(parse_pformula(in.arg1));
      out.result = to_string(f);
    } else if (in.kind == "term") {
      LjtPtr t = forget_term(parse_ljp_term(in.arg1));
      out.result = to_string(t);
    } else {
      throw PreconditionError("translate --back handles formulas and terms");
    }
    out.text = out.result.get<std::string>();
    return out;
  }
  if (in.command == "oracle") {
    Sequent s = parse_ljp_sequent(in.arg1);
    for (const auto& t : oracle_search(s, in.max_size)) out.witnesses.push_back(to_string(t));
    out.has_witnesses = true;
    out.result = out.witnesses.size();
    return out;
  }

  Sequent s = parse_ljp_sequent(in.arg1);
  ForestPtr rep = finrep_closed(s);
  out.forest_nodes = node_count(rep);
  if (in.command == "space") {
    out.result = to_string(rep);
    out.text = out.result.get<std::string>();
  } else if (in.command == "inhabited") {
    bool ok = inhabited(s);
    out.result = ok;
    out.exit_code = ok ? 0 : 1;
    out.text = ok ? "true" : "false";
  } else if (in.command == "finite") {
    bool ok = finite(s);
    out.result = ok;
    out.exit_code = ok ? 0 : 1;
    out.text = ok ? "true" : "false";
  } else if (in.command == "count") {
    out.result = count(s);
    out.text = std::to_string(out.result.get<std::uint64_t>());
  } else if (in.command == "enumerate") {
    for (const auto& t : members(s, in.max_size)) out.witnesses.push_back(to_string(t));
    out.has_witnesses = true;
    out.result = out.witnesses.size();
  } else {
    throw PreconditionError("unknown command " + in.command);
  }
  return out;
}

Outcome run_ljt(const Invocation& in) {
  Outcome out;
  if (in.command == "check") {
    LjtSequent s = parse_ljt_sequent(in.arg1);
    LjtPtr t = parse_ljt_term(in.arg2);
    std::string diag;
    bool ok = check_ljt(s, t, &diag);
    out.result = ok;
    out.exit_code = ok ? 0 : 1;
    out.text = ok ? "true" : "false" + (diag.empty() ? "" : " (" + diag + ")");
    return out;
  }
  if (in.command == "translate") {
    if (in.back) {
      if (in.kind == "formula") {
        out.result = to_string(forget_formula(parse_pformula(in.arg1)));
      } else if (in.kind == "term") {
        out.result = to_string(forget_term(parse_ljp_term(in.arg1)));
      } else {
        throw PreconditionError("translate --back handles formulas and terms");
      }
    } else {
      if (in.kind == "formula") {
        out.result = to_string(star_formula(parse_iformula(in.arg1)));
      } else if (in.kind == "sequent") {
        out.result = to_string(star_sequent(parse_ljt_sequent(in.arg1)));
      } else if (in.kind == "term") {
        out.result = to_string(star_term(parse_ljt_term(in.arg1)));
      } else {
        throw PreconditionError("translate handles formulas, sequents and terms");
      }
    }
    out.text = out.result.get<std::string>();
    return out;
  }
  if (in.command == "oracle") {
    LjtSequent s = parse_ljt_sequent(in.arg1);
    for (const auto& t : oracle_search_ljt(s, in.max_size)) out.witnesses.push_back(to_string(t));
    out.has_witnesses = true;
    out.result = out.witnesses.size();
    return out;
  }

  LjtSequent s = parse_ljt_sequent(in.arg1);
  Sequent star = star_sequent(s);
  ForestPtr rep = finrep_closed(star);
  out.forest_nodes = node_count(rep);
  if (in.command == "space") {
    out.result = to_string(rep);
    out.text = out.result.get<std::string>();
  } else if (in.command == "inhabited") {
    bool ok = ljt_inhabited(s);
    out.result = ok;
    out.exit_code = ok ? 0 : 1;
    out.text = ok ? "true" : "false";
  } else if (in.command == "finite") {
    bool ok = ljt_finite(s);
    out.result = ok;
    out.exit_code = ok ? 0 : 1;
    out.text = ok ? "true" : "false";
  } else if (in.command == "count") {
    out.result = ljt_count(s);
    out.text = std::to_string(out.result.get<std::uint64_t>());
  } else if (in.command == "enumerate") {
    for (const auto& t : members_ljt(s, in.max_size)) out.witnesses.push_back(to_string(t));
    out.has_witnesses = true;
    out.result = out.witnesses.size();
  } else {
    throw PreconditionError("unknown command " + in.command);
  }
  return out;
}

void emit(const Invocation& in, const Outcome& out, double elapsed_ms) {
  if (in.format == "json") {
    json doc;
    doc["schema"] = "1";
    doc["query"] = {{"calculus", in.calculus}, {"command", in.command}};
    if (!in.arg1.empty()) doc["query"]["input"] = in.arg1;
    if (!in.arg2.empty()) doc["query"]["term"] = in.arg2;
    doc["result"] = out.result;
    if (out.has_witnesses) doc["witnesses"] = out.witnesses;
    doc["stats"] = {{"forest_nodes", out.forest_nodes}, {"elapsed_ms", elapsed_ms}};
    std::cout << doc.dump() << "\n";
    return;
  }
  if (out.has_witnesses) {
    for (const auto& w : out.witnesses) std::cout << w << "\n";
  } else if (!out.text.empty()) {
    std::cout << out.text << "\n";
  } else {
    std::cout << out.result.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Invocation in;
  CLI::App app{"Proof-search spaces and inhabitation decisions for focused intuitionistic logics"};
  app.require_subcommand(1);
  app.add_option("--format", in.format, "output format")->check(CLI::IsMember({"text", "json"}));

  for (const std::string calc : {"ljp", "ljt"}) {
    auto* sub = app.add_subcommand(calc, calc == "ljp" ? "polarized calculus commands"
                                                       : "intuitionistic calculus commands");
    sub->require_subcommand(1);
    struct CommandDef {
      const char* name;
      const char* help;
      bool term_arg;
      bool size_opt;
      bool translate_opts;
    };
    static const CommandDef defs[] = {
        {"check", "type-check a proof term against a sequent", true, false, false},
        {"space", "print the finitary search space", false, false, false},
        {"inhabited", "decide existence of inhabitants", false, false, false},
        {"finite", "decide finiteness of inhabitants", false, false, false},
        {"count", "count inhabitants (demands finiteness)", false, false, false},
        {"enumerate", "list inhabitants up to --max-size", false, true, false},
        {"oracle", "exhaustive rule-application search up to --max-size", false, true, false},
        {"translate", "negative translation (or its inverse with --back)", false, false, true},
    };
    for (const auto& def : defs) {
      auto* cmd = sub->add_subcommand(def.name, def.help);
      cmd->add_option("input", in.arg1, "sequent or item text")->required();
      if (def.term_arg) cmd->add_option("term", in.arg2, "proof term text")->required();
      if (def.size_opt) cmd->add_option("--max-size", in.max_size, "size bound (default 8)");
      if (def.translate_opts) {
        cmd->add_flag("--back", in.back, "apply the forgetful map instead");
        cmd->add_option("--kind", in.kind, "formula | sequent | term")
            ->check(CLI::IsMember({"formula", "sequent", "term"}));
      }
      cmd->callback([&in, calc, name = std::string(def.name)] {
        in.calculus = calc;
        in.command = name;
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help succeeds; usage errors exit 2
  }

  auto started = std::chrono::steady_clock::now();
  try {
    Outcome out = in.calculus == "ljp" ? run_ljp(in) : run_ljt(in);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          started)
                    .count();
    emit(in, out, ms);
    if (const char* stats = std::getenv("POLSEARCH_STATS"); stats && *stats && *stats != '0') {
      CacheStats cs = cache_stats();
      std::cerr << "memo: " << cs.finrep_entries << " spaces, " << cs.decision_entries
                << " decisions\n";
    }
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
