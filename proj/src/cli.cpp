#include "multirel/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "multirel/fixtures.hpp"
#include "multirel/law_engine.hpp"
#include "multirel/model.hpp"

namespace multirel::cli {

namespace {

struct Options {
  std::string kind = "kleisli";
  std::string model_path;
  std::string rel;
  std::string lhs;
  std::string rhs;
  std::string law;
  std::size_t base = 1;
  std::string mode = "exhaustive";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultEnumerationCap;
  bool trace = false;
  std::string closure;
};

Model load_model(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::invalid_argument, "--model is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

const Multirelation& require_mrel(const Model& model, const std::string& name,
                                  std::string_view flag) {
  if (name.empty()) throw Error(ErrorCode::invalid_argument, std::string(flag) + " is required");
  const Multirelation* m = model.find_mrel(name);
  if (!m) throw Error(ErrorCode::invalid_argument, "no mrel named '" + name + "' in the model");
  return *m;
}

SweepMode parse_mode(const Options& o) {
  if (o.mode == "exhaustive") return Exhaustive{};
  if (o.mode == "sampled") return Sampled{o.samples, o.seed};
  throw Error(ErrorCode::invalid_argument, "--mode must be exhaustive or sampled");
}

std::string_view kind_symbol(LiftKind kind) {
  switch (kind) {
    case LiftKind::kleisli: return "∘";
    case LiftKind::parikh: return "◇";
    case LiftKind::peleg: return "∗";
  }
  return "?";
}

// Display width counting UTF-8 code points.
std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  for (std::size_t w = display_width(s); w < width; ++w) out += ' ';
  return out;
}

std::string render_table(LiftKind kind, const std::vector<std::string>& names,
                         const std::vector<Multirelation>& operands) {
  std::size_t width = display_width(kind_symbol(kind));
  for (const auto& n : names) width = std::max(width, display_width(n));

  std::string out = pad(kind_symbol(kind), width) + " |";
  for (std::size_t j = 0; j < names.size(); ++j) {
    out += " " + (j + 1 < names.size() ? pad(names[j], width) : names[j]);
  }
  out += "\n" + std::string(width, '-') + "-+" + std::string(names.size() * (width + 1), '-') + "\n";
  for (std::size_t i = 0; i < operands.size(); ++i) {
    out += pad(names[i], width) + " |";
    for (std::size_t j = 0; j < operands.size(); ++j) {
      const auto result = compose_mr(kind, operands[i], operands[j]);
      std::string cell = "-";
      for (std::size_t k = 0; k < operands.size(); ++k) {
        if (operands[k] == result) {
          cell = names[k];
          break;
        }
      }
      out += " " + (j + 1 < operands.size() ? pad(cell, width) : cell);
    }
    out += "\n";
  }
  return out;
}

int cmd_lift(const Options& o, std::ostream& out) {
  const Model model = load_model(o.model_path);
  const auto& beta = require_mrel(model, o.rel, "--rel");
  const Relation lifted = lift(parse_lift_kind(o.kind), beta);
  for (const auto& [i, j] : lifted.pairs()) {
    out << lifted.source().label(i) << " -> " << lifted.target().label(j) << "\n";
  }
  return kExitOk;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const Model model = load_model(o.model_path);
  const auto& lhs = require_mrel(model, o.lhs, "--lhs");
  const auto& rhs = require_mrel(model, o.rhs, "--rhs");
  const LiftKind kind = parse_lift_kind(o.kind);
  out << render_mrel(o.lhs + "_" + std::string(to_string(kind)) + "_" + o.rhs,
                     compose_mr(kind, lhs, rhs));
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const LiftKind kind = parse_lift_kind(o.kind);
  std::vector<std::string> names;
  std::vector<Multirelation> operands;
  if (!o.model_path.empty()) {
    const Model model = load_model(o.model_path);
    for (const auto& m : model.mrels) {
      if (!(m.rel.source() == m.rel.target_base())) continue;
      if (!operands.empty() && !(operands.front().source() == m.rel.source())) continue;
      names.push_back(m.name);
      operands.push_back(m.rel);
    }
    if (operands.empty()) {
      throw Error(ErrorCode::invalid_argument, "model has no mrel of type X -> P(X)");
    }
  } else {
    if (o.base != 1) {
      throw Error(ErrorCode::invalid_argument,
                  "built-in tables exist for --base 1 only; pass --model for other operands");
    }
    const auto f = fixtures::singleton_base().all();
    for (std::size_t k = 0; k < f.size(); ++k) {
      names.emplace_back(fixtures::kSingletonNames[k]);
      operands.push_back(f[k]);
    }
  }
  out << render_table(kind, names, operands);
  return kExitOk;
}

nlohmann::json trace_json(const TraceRecord& rec) {
  nlohmann::json args = nlohmann::json::object();
  for (const auto& [name, value] : rec.arguments) args[name] = value;
  return {{"law", to_string(rec.law)},
          {"index", rec.index},
          {"origin", rec.origin},
          {"verdict", rec.holds ? "holds" : "fails"},
          {"args", args}};
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const LawId law = parse_law_id(o.law);
  SweepOptions sweep_options;
  sweep_options.enumeration_cap = o.cap;
  if (o.trace) {
    sweep_options.trace = [&out](const TraceRecord& rec) { out << trace_json(rec).dump() << "\n"; };
  }
  const LawReport report = sweep(law, o.base, parse_mode(o), sweep_options);
  out << to_string(report) << "\n";
  return report.holds ? kExitOk : kExitLawFails;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.model_path.empty()) return cmd_sweep(o, out);

  const LawId law = parse_law_id(o.law);
  const Model model = load_model(o.model_path);
  std::vector<std::string> picked;
  switch (law_arity(law)) {
    case 3: picked = {o.lhs, o.rel, o.rhs}; break;
    case 2: picked = {o.lhs, o.rhs}; break;
    default: picked = {o.rel}; break;
  }
  std::vector<Multirelation> args;
  std::string rendered;
  for (const auto& name : picked) {
    args.push_back(require_mrel(model, name, "--lhs/--rel/--rhs"));
    rendered += (rendered.empty() ? "" : ",") + name;
  }
  SweepOptions sweep_options;
  sweep_options.enumeration_cap = o.cap;
  const auto verdict = check_instance(law, args, sweep_options);
  if (!verdict) {
    throw Error(ErrorCode::invalid_argument,
                "instance lies outside the class " + to_string(law) + " is restricted to");
  }
  out << "law=" << to_string(law) << " instance=" << rendered
      << " verdict=" << (*verdict ? "holds" : "fails") << "\n";
  return *verdict ? kExitOk : kExitLawFails;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const Model model = load_model(o.model_path);
  const auto& rel = require_mrel(model, o.rel, "--rel");
  if (o.closure == "up") {
    out << render_mrel(o.rel + "_up", up_closure(rel));
  } else {
    out << render_mrel(o.rel + "_union", union_closure(rel));
  }
  return kExitOk;
}

int cmd_pfns(const Options& o, std::ostream& out) {
  const Model model = load_model(o.model_path);
  const auto& rel = require_mrel(model, o.rel, "--rel");
  const auto pfns = enumerate_pfns_c(rel, o.cap);
  for (std::size_t k = 0; k < pfns.size(); ++k) {
    if (k) out << "\n";
    out << render_mrel(o.rel + "_f" + std::to_string(k), pfns[k]);
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite multirelations: liftings, compositions and law checks", "mrel"};
  app.require_subcommand(1);

  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "kleisli | parikh | peleg")
        ->check(CLI::IsMember({"kleisli", "parikh", "peleg"}));
  };
  auto add_model = [&](CLI::App* sub) { sub->add_option("--model", o.model_path, "model file"); };
  auto add_sweep_flags = [&](CLI::App* sub) {
    sub->add_option("--law", o.law, "law id")->required();
    sub->add_option("--base", o.base, "base carrier size");
    sub->add_option("--mode", o.mode, "exhaustive | sampled");
    sub->add_option("--samples", o.samples, "sampled instance count");
    sub->add_option("--seed", o.seed, "sampling seed");
    sub->add_option("--cap", o.cap, "choice-function enumeration cap");
    sub->add_flag("--trace", o.trace, "emit one JSON record per checked instance");
  };

  auto* lift_cmd = app.add_subcommand("lift", "print the lifting of an mrel");
  add_kind(lift_cmd);
  add_model(lift_cmd);
  lift_cmd->add_option("--rel", o.rel, "mrel name");

  auto* compose_cmd = app.add_subcommand("compose", "compose two mrels");
  add_kind(compose_cmd);
  add_model(compose_cmd);
  compose_cmd->add_option("--lhs", o.lhs, "left operand");
  compose_cmd->add_option("--rhs", o.rhs, "right operand");

  auto* table_cmd = app.add_subcommand("table", "composition table");
  add_kind(table_cmd);
  add_model(table_cmd);
  table_cmd->add_option("--base", o.base, "base size of the built-in table (1)");

  auto* check_cmd = app.add_subcommand("check", "check a law on a universe or on model mrels");
  add_sweep_flags(check_cmd);
  add_model(check_cmd);
  check_cmd->add_option("--lhs", o.lhs, "first argument");
  check_cmd->add_option("--rel", o.rel, "middle (or only) argument");
  check_cmd->add_option("--rhs", o.rhs, "last argument");

  auto* sweep_cmd = app.add_subcommand("sweep", "sweep a law over a universe");
  add_sweep_flags(sweep_cmd);

  auto* closure_cmd = app.add_subcommand("closure", "up- or union-closure of an mrel");
  closure_cmd->add_option("which", o.closure, "up | union")
      ->required()
      ->check(CLI::IsMember({"up", "union"}));
  add_model(closure_cmd);
  closure_cmd->add_option("--rel", o.rel, "mrel name");

  auto* pfns_cmd = app.add_subcommand("pfns", "list the choice functions of an mrel");
  add_model(pfns_cmd);
  pfns_cmd->add_option("--rel", o.rel, "mrel name");
  pfns_cmd->add_option("--cap", o.cap, "enumeration cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mrel: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (lift_cmd->parsed()) return cmd_lift(o, out);
    if (compose_cmd->parsed()) return cmd_compose(o, out);
    if (table_cmd->parsed()) return cmd_table(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out);
    if (closure_cmd->parsed()) return cmd_closure(o, out);
    if (pfns_cmd->parsed()) return cmd_pfns(o, out);
  } catch (const Error& e) {
    err << "mrel: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace multirel::cli
