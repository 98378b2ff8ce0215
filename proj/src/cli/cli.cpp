#include "lad/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "lad/context_io.hpp"
#include "lad/entailment.hpp"
#include "lad/proof.hpp"
#include "lad/semantics.hpp"
#include "lad/syntax.hpp"
#include "lad/transform.hpp"

namespace lad::cli {

namespace {

using json = nlohmann::json;

std::size_t checked_bound(long long n) {
  if (n < 1 || n > static_cast<long long>(kMaxAtomBound))
    throw std::invalid_argument("atom bound must be between 1 and " + std::to_string(kMaxAtomBound));
  return static_cast<std::size_t>(n);
}

json context_json(const Context& c) {
  json worlds = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) worlds.push_back(c.world(i).bits());
  return {{"atoms", c.atoms()}, {"worlds", worlds}};
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_formula(t));
  return out;
}

struct Inputs {
  std::string formula;
  std::string other;
  std::string file;
  std::string conclusion;
  std::string mode = "macro";
  std::string atoms;
  std::vector<std::string> premises;
  bool strong = false;
  bool sound = false;
};

class Runner {
 public:
  Runner(Config cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  int fmt(const Inputs& in) {
    PrintMode m = PrintMode::macro;
    if (in.mode == "full") m = PrintMode::full;
    if (in.mode == "diamond") m = PrintMode::diamond;
    const Formula f = parse_formula(in.formula);
    const std::string text = print(f, m);
    if (cfg_.json) {
      emit({{"formula", text}, {"L", is_L_formula(f)}, {"safe", is_safe(f)}, {"size", f.size()}});
    } else {
      out_ << text << '\n';
    }
    return kExitYes;
  }

  int eval(const Inputs& in) {
    const Context c = load_context(in.file);
    const Judgment j = judge(c, parse_formula(in.formula), cfg_.variant);
    if (cfg_.json) {
      emit({{"asserted", j.asserted}, {"denied", j.denied}});
    } else {
      out_ << "asserted: " << yes_no(j.asserted) << "\ndenied: " << yes_no(j.denied) << '\n';
    }
    return kExitYes;
  }

  int entail(const Inputs& in, bool countermodel_only) {
    const auto premises = parse_all(in.premises);
    const Formula conclusion = parse_formula(in.conclusion);
    const auto cm = countermodel(premises, conclusion, cfg_.variant, options());
    if (cfg_.json) {
      json j = {{"valid", !cm}, {"countermodel", cm ? context_json(*cm) : json(nullptr)}};
      emit(j);
    } else if (countermodel_only) {
      out_ << (cm ? format_context(*cm) : std::string("# no countermodel\n"));
    } else {
      out_ << (cm ? "invalid" : "valid") << '\n';
      if (cm) out_ << "# countermodel\n" << format_context(*cm);
    }
    if (countermodel_only) return cm ? kExitYes : kExitNo;
    return cm ? kExitNo : kExitYes;
  }

  int equiv(const Inputs& in) {
    const Formula a = parse_formula(in.formula);
    const Formula b = parse_formula(in.other);
    const bool eq = equivalent(a, b, cfg_.variant, options());
    const bool strong = strongly_equivalent(a, b, cfg_.variant, options());
    if (cfg_.json) {
      emit({{"equivalent", eq}, {"strongly_equivalent", strong}});
    } else {
      out_ << "equivalent: " << yes_no(eq) << "\nstrongly equivalent: " << yes_no(strong) << '\n';
    }
    return (in.strong ? strong : eq) ? kExitYes : kExitNo;
  }

  int persistent(const Inputs& in) {
    const Formula f = parse_formula(in.formula);
    AtomList atoms;
    if (in.atoms.empty()) {
      atoms = enumeration_atoms({f});
    } else {
      std::vector<std::string> names;
      std::string cur;
      for (char ch : in.atoms + ",") {
        if (ch == ',' || ch == ' ') {
          if (!cur.empty()) names.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      atoms = make_atom_list(std::move(names));
    }
    const auto w = persistence_counterexample(f, atoms, cfg_.variant, options());
    if (cfg_.json) {
      json j = {{"persistent", !w}, {"safe", is_safe(f)}, {"witness", nullptr}};
      if (w) j["witness"] = {{"context", context_json(w->context)}, {"subcontext", context_json(w->subcontext)}};
      emit(j);
    } else {
      out_ << (w ? "not persistent" : "persistent") << '\n';
      if (w) {
        out_ << "# asserted in\n" << format_context(w->context);
        out_ << "# not asserted in\n" << format_context(w->subcontext);
      }
    }
    return w ? kExitNo : kExitYes;
  }

  int transform(const Formula& result) {
    const std::string text = print(result, PrintMode::macro);
    if (cfg_.json) {
      emit({{"formula", text}});
    } else {
      out_ << text << '\n';
    }
    return kExitYes;
  }

  int charform(const Inputs& in) {
    const std::string text = print(mu(load_context(in.file)), PrintMode::diamond);
    if (cfg_.json) {
      emit({{"formula", text}});
    } else {
      out_ << text << '\n';
    }
    return kExitYes;
  }

  int check_proof(const Inputs& in) {
    const ProofDoc doc = load_proof(in.file);
    const Verdict v = check(doc);
    std::optional<bool> sound;
    if (in.sound) sound = verify_sound(doc, cfg_.variant, options());
    if (cfg_.json) {
      json violations = json::array();
      for (const auto& x : v.violations)
        violations.push_back({{"line", x.line}, {"code", reason_name(x.code)}, {"message", x.message}});
      json j = {{"accepted", v.accepted}, {"violations", violations}};
      if (sound) j["sound"] = *sound;
      emit(j);
    } else {
      out_ << (v.accepted ? "accepted" : "rejected") << '\n';
      for (const auto& x : v.violations)
        out_ << "line " << x.line << ": " << reason_name(x.code) << ": " << x.message << '\n';
      if (sound) out_ << "sound: " << yes_no(*sound) << '\n';
    }
    return v.accepted ? kExitYes : kExitNo;
  }

 private:
  static const char* yes_no(bool b) { return b ? "true" : "false"; }
  EnumerationOptions options() const { return EnumerationOptions{cfg_.atom_bound}; }
  void emit(const json& j) { out_ << j.dump() << '\n'; }

  Config cfg_;
  std::ostream& out_;
};

}  // namespace

Config default_config() {
  Config cfg;
  if (const char* env = std::getenv("LAD_ATOM_BOUND"); env && *env) {
    char* end = nullptr;
    const long long n = std::strtoll(env, &end, 10);
    if (*end != '\0') throw std::invalid_argument(std::string("LAD_ATOM_BOUND is not an integer: ") + env);
    cfg.atom_bound = checked_bound(n);
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logic of assertibility and deniability toolkit", "lad"};
  app.require_subcommand(1);
  app.fallthrough();

  Inputs in;
  std::string variant = "gauker";
  long long bound = 0;
  bool json_out = false;
  app.add_option("--variant", variant, "Denial clause for ->: gauker, nelson or connexive");
  app.add_option("--atom-bound", bound, "Most atoms an enumeration may range over (1-6)");
  app.add_flag("--json", json_out, "Machine-readable output");

  auto* fmt = app.add_subcommand("fmt", "Parse a formula and print it");
  fmt->add_option("formula", in.formula)->required();
  fmt->add_option("--mode", in.mode, "full, macro or diamond")->check(CLI::IsMember({"full", "macro", "diamond"}));

  auto* eval = app.add_subcommand("eval", "Assertion and denial of a formula in a context file");
  eval->add_option("context", in.file)->required();
  eval->add_option("formula", in.formula)->required();

  auto* entail = app.add_subcommand("entail", "Decide premises |= conclusion (exit 0 valid, 1 invalid)");
  entail->add_option("premises", in.premises);
  entail->add_option("--conclude", in.conclusion)->required();

  auto* cm = app.add_subcommand("countermodel", "Print the first countermodel (exit 1 if none)");
  cm->add_option("premises", in.premises);
  cm->add_option("--conclude", in.conclusion)->required();

  auto* equiv = app.add_subcommand("equiv", "Equivalence and strong equivalence");
  equiv->add_option("a", in.formula)->required();
  equiv->add_option("b", in.other)->required();
  equiv->add_flag("--strong", in.strong, "Exit status reflects strong equivalence");

  auto* pers = app.add_subcommand("persistent", "Persistence check with a witness on failure");
  pers->add_option("formula", in.formula)->required();
  pers->add_option("--atoms", in.atoms, "Comma-separated atoms to enumerate over");

  auto* weakneg = app.add_subcommand("weakneg", "Contextual weak negation");
  weakneg->add_option("formula", in.formula)->required();

  auto* nnf_cmd = app.add_subcommand("nnf", "Push intensional negation inward");
  nnf_cmd->add_option("formula", in.formula)->required();

  auto* charform = app.add_subcommand("charform", "Characteristic formula of a context file");
  charform->add_option("context", in.file)->required();

  auto* check_cmd = app.add_subcommand("check", "Check a proof file (exit 0 accepted, 1 rejected)");
  check_cmd->add_option("proof", in.file)->required();
  check_cmd->add_flag("--sound", in.sound, "Also confirm the conclusion semantically");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    Config cfg = default_config();
    if (app.count("--atom-bound")) cfg.atom_bound = checked_bound(bound);
    const auto v = parse_variant(variant);
    if (!v) throw std::invalid_argument("unknown variant '" + variant + "'");
    cfg.variant = *v;
    cfg.json = json_out;

    Runner r(cfg, out);
    if (*fmt) return r.fmt(in);
    if (*eval) return r.eval(in);
    if (*entail) return r.entail(in, false);
    if (*cm) return r.entail(in, true);
    if (*equiv) return r.equiv(in);
    if (*pers) return r.persistent(in);
    if (*weakneg) return r.transform(weak_negate(parse_formula(in.formula)));
    if (*nnf_cmd) return r.transform(nnf(parse_formula(in.formula), cfg.variant));
    if (*charform) return r.charform(in);
    if (*check_cmd) return r.check_proof(in);
  } catch (const std::exception& e) {
    if (json_out) out << json{{"error", e.what()}}.dump() << '\n';
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace lad::cli
