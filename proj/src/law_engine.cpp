#include "multirel/law_engine.hpp"

#include <array>
#include <random>

#include "multirel/error.hpp"
#include "multirel/fixtures.hpp"
#include "multirel/universe.hpp"

namespace multirel {

// ---------------------------------------------------------------------------
// Oracle

namespace {

// The oracle works on explicit subset lists.
using Subset = std::size_t;
using Family = std::vector<Subset>;

std::vector<Family> families(const Multirelation& m) {
  std::vector<Family> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.test(i, c)) out[i].push_back(c);
    }
  }
  return out;
}

std::vector<std::size_t> members(Subset s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < n; ++b) {
    if (s & (Subset{1} << b)) out.push_back(b);
  }
  return out;
}

bool contains(const Family& f, Subset s) {
  for (Subset c : f) {
    if (c == s) return true;
  }
  return false;
}

// Adds to `results` every union obtained by picking one subset of beta(b)
// for each b in `elems`, starting from elems[k] with partial union `acc`.
void choice_unions(const std::vector<Family>& beta, const std::vector<std::size_t>& elems,
                   std::size_t k, Subset acc, std::vector<bool>& results) {
  if (k == elems.size()) {
    results[acc] = true;
    return;
  }
  for (Subset c : beta[elems[k]]) choice_unions(beta, elems, k + 1, acc | c, results);
}

}  // namespace

Multirelation oracle_compose(LiftKind kind, const Multirelation& alpha, const Multirelation& beta,
                             std::uint64_t cap) {
  if (!(alpha.target_base() == beta.source())) {
    throw Error(ErrorCode::carrier_mismatch, "oracle_compose: carriers do not line up");
  }
  const std::size_t ny = beta.rows();
  const std::size_t pz = beta.cols();
  const auto fa = families(alpha);
  const auto fb = families(beta);
  Multirelation out(alpha.source(), beta.target_base());

  for (std::size_t a = 0; a < alpha.rows(); ++a) {
    for (Subset big_b : fa[a]) {
      const auto elems = members(big_b, ny);
      switch (kind) {
        case LiftKind::kleisli: {
          Subset u = 0;
          for (std::size_t b : elems) {
            for (Subset c : fb[b]) u |= c;
          }
          out.set(a, u);
          break;
        }
        case LiftKind::parikh: {
          for (Subset target = 0; target < pz; ++target) {
            bool all = true;
            for (std::size_t b : elems) all = all && contains(fb[b], target);
            if (all) out.set(a, target);
          }
          break;
        }
        case LiftKind::peleg: {
          std::uint64_t n_choices = 1;
          for (std::size_t b : elems) {
            n_choices *= fb[b].size();
            if (n_choices > cap) {
              throw Error(ErrorCode::enumeration_cap_exceeded,
                          "oracle_compose: choice functions exceed cap");
            }
          }
          std::vector<bool> unions(pz, false);
          choice_unions(fb, elems, 0, 0, unions);
          for (Subset target = 0; target < pz; ++target) {
            if (unions[target]) out.set(a, target);
          }
          break;
        }
      }
    }
  }
  return out;
}

bool check_extension(LiftKind kind, const Multirelation& beta, const Multirelation& gamma) {
  const Relation lg = lift(kind, gamma);
  return lift(kind, compose_mr(kind, beta, gamma)) == compose(lift(kind, beta), lg);
}

bool check_associativity(LiftKind kind, const Multirelation& alpha, const Multirelation& beta,
                         const Multirelation& gamma) {
  return compose_mr(kind, compose_mr(kind, alpha, beta), gamma) ==
         compose_mr(kind, alpha, compose_mr(kind, beta, gamma));
}

std::optional<Multirelation> associativity_witness(LiftKind kind, const Multirelation& beta,
                                                   const Multirelation& gamma) {
  const Relation lhs = lift(kind, compose_mr(kind, beta, gamma));
  const Relation rhs = compose(lift(kind, beta), lift(kind, gamma));
  for (std::size_t big_b = 0; big_b < lhs.rows(); ++big_b) {
    if (lhs.row_word(big_b) != rhs.row_word(big_b)) {
      Multirelation alpha(beta.source(), beta.source());
      alpha.set(0, big_b);
      return alpha;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Law ids

namespace {

struct LawName {
  LawKind kind;
  std::string_view name;
};

constexpr std::array<LawName, 15> kLawNames = {{
    {LawKind::kleisli_assoc, "kleisli-assoc"},
    {LawKind::parikh_assoc, "parikh-assoc"},
    {LawKind::peleg_assoc, "peleg-assoc"},
    {LawKind::peleg_assoc_union_closed, "peleg-assoc-union-closed"},
    {LawKind::peleg_assoc_all_union_closed, "peleg-assoc-all-union-closed"},
    {LawKind::parikh_assoc_up_closed, "parikh-assoc-up-closed"},
    {LawKind::kleisli_right_unit, "kleisli-right-unit"},
    {LawKind::kleisli_left_unit, "kleisli-left-unit"},
    {LawKind::parikh_left_unit, "parikh-left-unit"},
    {LawKind::parikh_right_unit, "parikh-right-unit"},
    {LawKind::parikh_units_up_closed, "parikh-units-up-closed"},
    {LawKind::peleg_unit, "peleg-unit"},
    {LawKind::lift_extension, "lift-extension"},
    {LawKind::weak_peleg_assoc, "weak-peleg-assoc"},
    {LawKind::oracle_equivalence, "oracle-equivalence"},
}};

bool parameterized(LawKind k) {
  return k == LawKind::lift_extension || k == LawKind::oracle_equivalence;
}

bool unit_search(LawKind k) {
  return k == LawKind::kleisli_right_unit || k == LawKind::kleisli_left_unit ||
         k == LawKind::parikh_left_unit || k == LawKind::parikh_right_unit;
}

}  // namespace

std::string to_string(const LawId& law) {
  std::string out;
  for (const auto& entry : kLawNames) {
    if (entry.kind == law.kind) out = entry.name;
  }
  if (parameterized(law.kind)) {
    out += '(';
    out += to_string(law.lift.value_or(LiftKind::kleisli));
    out += ')';
  }
  return out;
}

LawId parse_law_id(std::string_view text) {
  for (const auto& entry : kLawNames) {
    if (!parameterized(entry.kind)) {
      if (text == entry.name) return LawId{entry.kind, std::nullopt};
      continue;
    }
    if (!text.starts_with(entry.name) || text.size() <= entry.name.size()) continue;
    std::string_view rest = text.substr(entry.name.size());
    if (rest.front() == '(' && rest.back() == ')') {
      rest = rest.substr(1, rest.size() - 2);
    } else if (rest.front() == '-') {
      rest = rest.substr(1);
    } else {
      continue;
    }
    return LawId{entry.kind, parse_lift_kind(rest)};
  }
  throw Error(ErrorCode::invalid_argument, "unknown law '" + std::string(text) + "'");
}

std::vector<LawId> all_law_ids() {
  std::vector<LawId> out;
  for (const auto& entry : kLawNames) {
    if (parameterized(entry.kind)) {
      for (LiftKind k : kAllLiftKinds) out.push_back(LawId{entry.kind, k});
    } else {
      out.push_back(LawId{entry.kind, std::nullopt});
    }
  }
  return out;
}

int law_arity(const LawId& law) {
  switch (law.kind) {
    case LawKind::kleisli_assoc:
    case LawKind::parikh_assoc:
    case LawKind::peleg_assoc:
    case LawKind::peleg_assoc_union_closed:
    case LawKind::peleg_assoc_all_union_closed:
    case LawKind::parikh_assoc_up_closed:
    case LawKind::weak_peleg_assoc:
      return 3;
    case LawKind::lift_extension:
    case LawKind::oracle_equivalence:
      return 2;
    default:
      return 1;
  }
}

std::size_t exhaustive_limit(const LawId& law) { return law_arity(law) == 3 ? 1 : 2; }

std::string to_string(const SweepMode& mode) {
  if (const auto* s = std::get_if<Sampled>(&mode)) {
    return "sampled(" + std::to_string(s->count) + "," + std::to_string(s->seed) + ")";
  }
  return "exhaustive";
}

std::string to_string(const LawReport& report) {
  std::string out = "law=" + to_string(report.law) + " universe=" +
                    std::to_string(report.universe) + " mode=" + to_string(report.mode) +
                    " verdict=" + (report.holds ? "holds" : "fails");
  if (report.witness) out += " witness=" + *report.witness;
  return out;
}

// ---------------------------------------------------------------------------
// Units

namespace {

LawKind unit_law(LiftKind kind, UnitSide side) {
  if (kind == LiftKind::peleg) return LawKind::peleg_unit;
  if (side == UnitSide::both) {
    throw Error(ErrorCode::invalid_argument,
                "two-sided unit checks are only defined for peleg composition");
  }
  if (kind == LiftKind::kleisli) {
    return side == UnitSide::left ? LawKind::kleisli_left_unit : LawKind::kleisli_right_unit;
  }
  return side == UnitSide::left ? LawKind::parikh_left_unit : LawKind::parikh_right_unit;
}

std::uint64_t universe_count(std::size_t base_size) {
  return std::uint64_t{1} << (base_size << base_size);
}

}  // namespace

LawReport check_unit(LiftKind kind, UnitSide side, const Multirelation& iota,
                     const SweepMode& mode) {
  const Carrier x = iota.source();
  if (!(iota.target_base() == x)) {
    throw Error(ErrorCode::carrier_mismatch, "check_unit: iota must have type X -> P(X)");
  }
  LawReport report{LawId{unit_law(kind, side), std::nullopt}, x.size(), mode, true, {}, 0};

  if (side != UnitSide::left) {
    ++report.checked;
    if (!(lift(kind, iota) == identity(iota.target()))) {
      report.holds = false;
      report.witness = "iota=" + to_string(iota);
      return report;
    }
  }
  if (side == UnitSide::right) return report;

  auto left_ok = [&](const Multirelation& alpha) {
    ++report.checked;
    if (compose(iota, lift(kind, alpha)) == alpha) return true;
    report.holds = false;
    report.witness = "iota=" + to_string(iota) + ";alpha=" + to_string(alpha);
    return false;
  };
  if (const auto* s = std::get_if<Sampled>(&mode)) {
    std::mt19937_64 rng(s->seed);
    for (std::uint64_t n = 0; n < s->count; ++n) {
      if (!left_ok(random_multirelation(x, x, rng))) break;
    }
  } else {
    if (x.size() > 2) {
      throw Error(ErrorCode::universe_too_large, "exhaustive unit check needs base size <= 2");
    }
    const std::uint64_t total = universe_count(x.size());
    for (std::uint64_t i = 0; i < total; ++i) {
      if (!left_ok(multirelation_at(x, x, i))) break;
    }
  }
  return report;
}

std::vector<Multirelation> find_units(LiftKind kind, UnitSide side, std::size_t base_size,
                                      const SweepMode& mode) {
  if (base_size == 0 || base_size > 2) {
    throw Error(ErrorCode::universe_too_large, "unit search needs base size 1 or 2");
  }
  const Carrier x = standard_carrier(base_size);
  std::vector<Multirelation> out;
  const std::uint64_t total = universe_count(base_size);
  for (std::uint64_t i = 0; i < total; ++i) {
    auto iota = multirelation_at(x, x, i);
    if (check_unit(kind, side, iota, mode).holds) out.push_back(std::move(iota));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

using Args = std::vector<Multirelation>;

std::vector<std::string> argument_names(const LawId& law) {
  switch (law.kind) {
    case LawKind::lift_extension: return {"beta", "gamma"};
    case LawKind::oracle_equivalence: return {"alpha", "beta"};
    default: break;
  }
  if (law_arity(law) == 3) return {"alpha", "beta", "gamma"};
  return {"alpha"};
}

// nullopt: the instance lies outside the class the law is restricted to.
std::optional<bool> evaluate(const LawId& law, const Args& a, const SweepOptions& options) {
  switch (law.kind) {
    case LawKind::kleisli_assoc: return check_associativity(LiftKind::kleisli, a[0], a[1], a[2]);
    case LawKind::parikh_assoc: return check_associativity(LiftKind::parikh, a[0], a[1], a[2]);
    case LawKind::peleg_assoc: return check_associativity(LiftKind::peleg, a[0], a[1], a[2]);
    case LawKind::peleg_assoc_union_closed:
      if (!is_union_closed(a[2])) return std::nullopt;
      return check_associativity(LiftKind::peleg, a[0], a[1], a[2]);
    case LawKind::peleg_assoc_all_union_closed:
      for (const auto& m : a) {
        if (!is_union_closed(m)) return std::nullopt;
      }
      return check_associativity(LiftKind::peleg, a[0], a[1], a[2]);
    case LawKind::parikh_assoc_up_closed:
      for (const auto& m : a) {
        if (!is_up_closed(m)) return std::nullopt;
      }
      return check_associativity(LiftKind::parikh, a[0], a[1], a[2]);
    case LawKind::weak_peleg_assoc: {
      const auto lhs = compose_mr(LiftKind::peleg, compose_mr(LiftKind::peleg, a[0], a[1]), a[2]);
      const auto rhs = compose_mr(LiftKind::peleg, a[0], compose_mr(LiftKind::peleg, a[1], a[2]));
      return includes(lhs, rhs);
    }
    case LawKind::lift_extension: return check_extension(*law.lift, a[0], a[1]);
    case LawKind::oracle_equivalence:
      return oracle_compose(*law.lift, a[0], a[1], options.enumeration_cap) ==
             compose_mr(*law.lift, a[0], a[1]);
    case LawKind::peleg_unit: {
      const Multirelation one(singleton_map(a[0].source()));
      return compose_mr(LiftKind::peleg, one, a[0]) == a[0] &&
             compose_mr(LiftKind::peleg, a[0], one) == a[0];
    }
    case LawKind::parikh_units_up_closed: {
      if (!is_up_closed(a[0])) return std::nullopt;
      const Multirelation unit(converse(membership(a[0].source())));
      return compose_mr(LiftKind::parikh, unit, a[0]) == a[0] &&
             compose_mr(LiftKind::parikh, a[0], unit) == a[0];
    }
    default: break;
  }
  throw Error(ErrorCode::invalid_argument, "law has no instance predicate");
}

using ClassPredicate = bool (*)(const Multirelation&);

// The class argument k of a restricted law must belong to, or nullptr.
ClassPredicate argument_class(const LawId& law, int k) {
  switch (law.kind) {
    case LawKind::peleg_assoc_union_closed: return k == 2 ? is_union_closed : nullptr;
    case LawKind::peleg_assoc_all_union_closed: return is_union_closed;
    case LawKind::parikh_assoc_up_closed:
    case LawKind::parikh_units_up_closed: return is_up_closed;
    default: return nullptr;
  }
}

struct Pinned {
  std::string name;
  Args args;
};

std::vector<Pinned> pinned_instances(const LawId& law, std::size_t base_size) {
  const int arity = law_arity(law);
  std::vector<Pinned> out;
  if (base_size == 1) {
    const auto f = fixtures::singleton_base().all();
    std::size_t total = 1;
    for (int k = 0; k < arity; ++k) total *= f.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
      Args args;
      std::size_t rest = idx;
      std::size_t scale = total;
      for (int k = 0; k < arity; ++k) {
        scale /= f.size();
        args.push_back(f[rest / scale]);
        rest %= scale;
      }
      out.push_back({"fixture:singleton-base", std::move(args)});
    }
  } else if (base_size == 2) {
    const auto fs = fixtures::peleg_counterexample();
    const std::string name = "fixture:peleg-counterexample";
    if (arity == 3) {
      out.push_back({name, {fs.alpha, fs.alpha, fs.beta}});
    } else if (arity == 2) {
      out.push_back({name, {fs.alpha, fs.beta}});
      out.push_back({name, {fs.alpha, fs.alpha}});
    } else {
      out.push_back({name, {fs.alpha}});
      out.push_back({name, {fs.beta}});
    }
  } else if (base_size == 3) {
    const auto ts = fixtures::parikh_counterexample();
    const std::string name = "fixture:parikh-counterexample";
    if (arity == 3) {
      if (auto first = associativity_witness(LiftKind::parikh, ts.beta, ts.alpha)) {
        out.push_back({name, {*first, ts.beta, ts.alpha}});
      }
    } else if (arity == 2) {
      out.push_back({name, {ts.beta, ts.alpha}});
      out.push_back({name, {ts.alpha, ts.beta}});
    } else {
      out.push_back({name, {ts.alpha}});
      out.push_back({name, {ts.beta}});
    }
  }
  return out;
}

std::string render_witness(const std::vector<std::string>& names, const Args& args) {
  std::string out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k) out += ';';
    out += names[k] + "=" + to_string(args[k]);
  }
  return out;
}

std::pair<LiftKind, UnitSide> unit_target(LawKind kind) {
  switch (kind) {
    case LawKind::kleisli_right_unit: return {LiftKind::kleisli, UnitSide::right};
    case LawKind::parikh_left_unit: return {LiftKind::parikh, UnitSide::left};
    case LawKind::parikh_right_unit: return {LiftKind::parikh, UnitSide::right};
    default: return {LiftKind::kleisli, UnitSide::left};
  }
}

LawReport sweep_unit_search(const LawId& law, std::size_t base_size, const SweepMode& mode) {
  const auto [kind, side] = unit_target(law.kind);
  if (base_size == 0 || base_size > 2) {
    throw Error(ErrorCode::universe_too_large, to_string(law) + ": unit search needs base size <= 2");
  }
  LawReport report{law, base_size, mode, false, {}, 0};
  const Carrier x = standard_carrier(base_size);
  const std::uint64_t total = universe_count(base_size);
  std::string first_refutation;
  for (std::uint64_t i = 0; i < total; ++i) {
    ++report.checked;
    const auto r = check_unit(kind, side, multirelation_at(x, x, i), mode);
    if (r.holds) {
      report.holds = true;
      return report;
    }
    if (i == 0) first_refutation = r.witness.value_or("");
  }
  report.witness = "candidates=" + std::to_string(total) + ";" + first_refutation;
  return report;
}

}  // namespace

std::optional<bool> check_instance(const LawId& law, const std::vector<Multirelation>& args,
                                   const SweepOptions& options) {
  const auto arity = static_cast<std::size_t>(law_arity(law));
  if (args.size() != arity) {
    throw Error(ErrorCode::invalid_argument, to_string(law) + " takes " + std::to_string(arity) +
                                                 " multirelation(s)");
  }
  if (parameterized(law.kind) && !law.lift) {
    throw Error(ErrorCode::invalid_argument, to_string(law) + " needs a lifting kind");
  }
  if (unit_search(law.kind)) {
    const auto [kind, side] = unit_target(law.kind);
    return check_unit(kind, side, args[0]).holds;
  }
  return evaluate(law, args, options);
}

LawReport sweep(const LawId& law, std::size_t base_size, const SweepMode& mode,
                const SweepOptions& options) {
  if (parameterized(law.kind) && !law.lift) {
    throw Error(ErrorCode::invalid_argument, to_string(law) + " needs a lifting kind");
  }
  if (base_size == 0 || base_size > kDefaultPowersetCap) {
    throw Error(ErrorCode::universe_too_large,
                "base size " + std::to_string(base_size) + " is outside 1.." +
                    std::to_string(kDefaultPowersetCap));
  }
  if (unit_search(law.kind)) return sweep_unit_search(law, base_size, mode);

  const auto names = argument_names(law);
  const int arity = law_arity(law);
  const Carrier x = standard_carrier(base_size);
  LawReport report{law, base_size, mode, true, {}, 0};
  std::uint64_t trace_index = 0;

  // Returns false once a failing instance has been recorded.
  auto visit = [&](const Args& args, const std::string& origin) {
    const auto verdict = evaluate(law, args, options);
    if (!verdict) return true;
    ++report.checked;
    if (options.trace) {
      TraceRecord rec{law, trace_index, origin, *verdict, {}};
      for (std::size_t k = 0; k < args.size(); ++k) {
        rec.arguments.emplace_back(names[k], to_string(args[k]));
      }
      options.trace(rec);
    }
    ++trace_index;
    if (*verdict) return true;
    report.holds = false;
    report.witness = render_witness(names, args);
    return false;
  };

  if (std::holds_alternative<Exhaustive>(mode)) {
    if (base_size > exhaustive_limit(law)) {
      throw Error(ErrorCode::universe_too_large,
                  to_string(law) + ": exhaustive mode needs base size <= " +
                      std::to_string(exhaustive_limit(law)));
    }
    const std::uint64_t n = universe_count(base_size);
    std::uint64_t total = 1;
    for (int k = 0; k < arity; ++k) total *= n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Args args;
      std::uint64_t scale = total;
      std::uint64_t rest = idx;
      for (int k = 0; k < arity; ++k) {
        scale /= n;
        args.push_back(multirelation_at(x, x, rest / scale));
        rest %= scale;
      }
      if (!visit(args, "exhaustive")) break;
    }
    return report;
  }

  const auto& sampled = std::get<Sampled>(mode);
  for (const auto& pin : pinned_instances(law, base_size)) {
    if (!visit(pin.args, pin.name)) return report;
  }
  std::mt19937_64 rng(sampled.seed);
  // Each argument is redrawn until it lands in its class, with at most
  // max_rejections_per_sample draws per argument.
  auto draw = [&](int k) -> std::optional<Multirelation> {
    const ClassPredicate in_class = argument_class(law, k);
    for (std::uint64_t tries = 0; tries < options.max_rejections_per_sample; ++tries) {
      auto m = random_multirelation(x, x, rng);
      if (!in_class || in_class(m)) return m;
    }
    return std::nullopt;
  };
  for (std::uint64_t n = 0; n < sampled.count; ++n) {
    Args args;
    for (int k = 0; k < arity; ++k) {
      auto m = draw(k);
      if (!m) return report;
      args.push_back(std::move(*m));
    }
    if (!visit(args, "sampled")) break;
  }
  return report;
}

}  // namespace multirel
