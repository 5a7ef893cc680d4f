#include "pruning/axioms.hpp"

#include <algorithm>
#include <limits>

#include "pruning/generate.hpp"
#include "pruning/geometry.hpp"

namespace pruning {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::monotonicity: return "monotonicity";
    case Axiom::eps_split: return "eps-split";
    case Axiom::extremism: return "extremism";
    case Axiom::standout: return "standout";
    case Axiom::outlier: return "outlier";
  }
  throw InternalError("unknown axiom");
}

Axiom axiom_from_string(const std::string& token) {
  if (token == "monotonicity") return Axiom::monotonicity;
  if (token == "eps-split" || token == "eps_split") return Axiom::eps_split;
  if (token == "extremism") return Axiom::extremism;
  if (token == "standout") return Axiom::standout;
  if (token == "outlier") return Axiom::outlier;
  throw InputError("unknown axiom: " + token);
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::holds: return "holds";
    case VerdictKind::violated: return "violated";
    case VerdictKind::not_applicable: return "not-applicable";
  }
  throw InternalError("unknown verdict kind");
}

namespace {

struct OptimalSet {
  Dist value = 0;
  std::vector<Slate> slates;
};

OptimalSet all_optimal(const Instance& instance, MeasureId measure, int k,
                       const Limits& limits) {
  SolveResult result = solve_brute(instance, k, measure, limits, true);
  return OptimalSet{result.optimal_value, std::move(*result.all_optimal)};
}

bool any_slate_contains(const std::vector<Slate>& slates, int index) {
  return std::any_of(slates.begin(), slates.end(),
                     [index](const Slate& s) { return s.contains(index); });
}

bool matches(const Instance& instance, int index, const Alternative& point, Coord point_scale) {
  const Alternative& a = instance.alt(index);
  if (a.dimension() != point.dimension()) return false;
  for (int c = 0; c < a.dimension(); ++c) {
    if (BigInt(a.coords[c]) * point_scale != BigInt(point.coords[c]) * instance.scale) {
      return false;
    }
  }
  return true;
}

// Common-unit bookkeeping between an instance and a modification that may
// use a different (typically finer) scale.
struct CommonUnits {
  Coord scale;      // lcm of the two scales
  Coord base_mult;  // multiply base coordinates by this
  Coord mod_mult;   // multiply modification coordinates by this
};

CommonUnits common_units(const Instance& base, const Modification& mod) {
  const Coord mod_scale = mod.scale > 0 ? mod.scale : base.scale;
  const Coord common = std::lcm(base.scale, mod_scale);
  if (common <= 0 || common > kCoordCap) {
    throw InputError("modification scale is incompatible with the instance scale");
  }
  return CommonUnits{common, common / base.scale, common / mod_scale};
}

Alternative rescaled(const Alternative& a, Coord mult) {
  Alternative out = a;
  for (Coord& c : out.coords) {
    if (std::abs(c) > kCoordCap / mult) throw InputError("rescaled coordinate overflows");
    c *= mult;
  }
  return out;
}

/// Builds the replaced instance at the common scale; nullopt when
/// validation dropped a point for domination (the axiom statements
/// implicitly preserve Pareto inputs). Duplicates are tolerated only when
/// allow_dedup is set. `replacements` must already be in common units.
std::optional<Instance> replace_and_validate(const Instance& base, int replaced_index,
                                             const std::vector<Alternative>& replacements,
                                             const CommonUnits& units, bool allow_dedup,
                                             std::string* why) {
  std::vector<Alternative> points;
  points.reserve(base.n() - 1 + replacements.size());
  for (int i = 0; i < base.n(); ++i) {
    if (i != replaced_index) points.push_back(rescaled(base.alt(i), units.base_mult));
  }
  points.insert(points.end(), replacements.begin(), replacements.end());
  ValidationReport report;
  Instance modified;
  try {
    modified = make_instance(base.name + "-mod", std::move(points), {}, units.scale,
                             ValidationMode::lenient, &report);
  } catch (const InputError& error) {
    *why = error.what();
    return std::nullopt;
  }
  if (report.dominated_removed > 0) {
    *why = "modification made an alternative dominated";
    return std::nullopt;
  }
  if (report.duplicates_removed > 0 && !allow_dedup) {
    *why = "modification duplicated an existing alternative";
    return std::nullopt;
  }
  return modified;
}

AxiomVerdict not_applicable(std::string detail) {
  return AxiomVerdict{VerdictKind::not_applicable, std::nullopt, std::move(detail)};
}

AxiomVerdict replacement_verdict(const Instance& base, const OptimalSet& base_opt,
                                 Instance modified, const Alternative& replacement,
                                 Coord replacement_scale, MeasureId measure, int k,
                                 const Limits& limits, const std::string& replacement_name) {
  const int target = [&] {
    for (int i = 0; i < modified.n(); ++i) {
      if (matches(modified, i, replacement, replacement_scale)) return i;
    }
    throw InternalError("replacement vanished from the validated instance");
  }();

  OptimalSet mod_opt = all_optimal(modified, measure, k, limits);
  const bool holds = any_slate_contains(mod_opt.slates, target);

  Witness witness;
  witness.base_value = Rational(base_opt.value, base.scale);
  witness.base_optimal = base_opt.slates;
  witness.modified_value = Rational(mod_opt.value, modified.scale);
  witness.modified_optimal = std::move(mod_opt.slates);
  witness.note = holds ? "an optimal slate of the modified instance contains " + replacement_name
                       : "no optimal slate of the modified instance contains " + replacement_name;
  witness.modified = std::move(modified);
  return AxiomVerdict{holds ? VerdictKind::holds : VerdictKind::violated, std::move(witness), ""};
}

}  // namespace

AxiomVerdict check_monotonicity(const AxiomCase& axiom_case, const Limits& limits) {
  if (axiom_case.axiom != Axiom::monotonicity || !axiom_case.modification.has_value() ||
      axiom_case.modification->replacements.size() != 1) {
    throw InputError("monotonicity case requires exactly one replacement alternative");
  }
  const Instance& base = axiom_case.instance;
  const Modification& mod = *axiom_case.modification;
  const CommonUnits units = common_units(base, mod);
  const int x_index = find_point(base, mod.replaced, units.scale / units.mod_mult);
  if (x_index < 0) throw InputError("replaced alternative is not in the instance");
  const Alternative y = rescaled(mod.replacements.front(), units.mod_mult);

  if (!dominates(y, rescaled(base.alt(x_index), units.base_mult))) {
    return not_applicable("replacement does not dominate the replaced alternative");
  }
  OptimalSet base_opt = all_optimal(base, axiom_case.measure, axiom_case.k, limits);
  if (!any_slate_contains(base_opt.slates, x_index)) {
    return not_applicable("replaced alternative is not in any optimal slate");
  }
  std::string why;
  auto modified = replace_and_validate(base, x_index, {y}, units, false, &why);
  if (!modified) return not_applicable(why);
  return replacement_verdict(base, base_opt, std::move(*modified), y, units.scale,
                             axiom_case.measure, axiom_case.k, limits, "the improved alternative");
}

AxiomVerdict check_extremism(const AxiomCase& axiom_case, const Limits& limits) {
  if (axiom_case.axiom != Axiom::extremism || !axiom_case.modification.has_value()) {
    throw InputError("extremism case requires a modification");
  }
  const Instance& base = axiom_case.instance;
  const Modification& mod = *axiom_case.modification;
  const CommonUnits units = common_units(base, mod);
  const int x_index = find_point(base, mod.replaced, units.scale / units.mod_mult);
  if (x_index < 0) throw InputError("replaced alternative is not in the instance");
  const int objective = mod.pushed_objective;
  if (objective < 0 || objective >= base.d()) throw InputError("pushed objective out of range");
  if (mod.push_amount <= 0) throw InputError("push amount must be positive");

  Coord extreme = base.alt(0).coords[objective];
  for (int i = 1; i < base.n(); ++i) {
    const Coord c = base.alt(i).coords[objective];
    extreme = mod.direction == PushDirection::up ? std::max(extreme, c) : std::min(extreme, c);
  }
  if (base.alt(x_index).coords[objective] != extreme) {
    return not_applicable("alternative is not extremal in the pushed objective");
  }

  OptimalSet base_opt = all_optimal(base, axiom_case.measure, axiom_case.k, limits);
  if (!any_slate_contains(base_opt.slates, x_index)) {
    return not_applicable("pushed alternative is not in any optimal slate");
  }

  Alternative pushed = rescaled(base.alt(x_index), units.base_mult);
  if (mod.push_amount > kCoordCap / units.mod_mult) throw InputError("push amount overflows");
  const Coord push = mod.push_amount * units.mod_mult;
  const Coord delta = mod.direction == PushDirection::up ? push : -push;
  if (std::abs(pushed.coords[objective]) > kCoordCap - push) {
    throw InputError("push overflows the coordinate cap");
  }
  pushed.coords[objective] += delta;

  std::string why;
  auto modified = replace_and_validate(base, x_index, {pushed}, units, false, &why);
  if (!modified) return not_applicable(why);
  return replacement_verdict(base, base_opt, std::move(*modified), pushed, units.scale,
                             axiom_case.measure, axiom_case.k, limits, "the pushed alternative");
}

AxiomVerdict check_eps_split(const AxiomCase& axiom_case, const Limits& limits) {
  if (axiom_case.axiom != Axiom::eps_split || !axiom_case.modification.has_value() ||
      axiom_case.modification->replacements.size() != 2 ||
      !axiom_case.modification->epsilon.has_value()) {
    throw InputError("eps-split case requires two replacements and an epsilon");
  }
  const Instance& base = axiom_case.instance;
  const Modification& mod = *axiom_case.modification;
  const CommonUnits units = common_units(base, mod);
  const Coord mod_scale = units.scale / units.mod_mult;
  const Rational eps = *mod.epsilon;
  if (eps <= 0) throw InputError("eps-split epsilon must be positive");
  const int x_index = find_point(base, mod.replaced, mod_scale);
  if (x_index < 0) throw InputError("replaced alternative is not in the instance");
  const Alternative x_common = rescaled(base.alt(x_index), units.base_mult);
  std::vector<Alternative> splits;
  for (const Alternative& split : mod.replacements) {
    if (split.dimension() != base.d()) throw InputError("split point dimension mismatch");
    splits.push_back(rescaled(split, units.mod_mult));
    if (Rational(manhattan(x_common, splits.back()), units.scale) >= eps) {
      throw InputError("split point is not within epsilon of the replaced alternative");
    }
  }

  OptimalSet base_opt = all_optimal(base, axiom_case.measure, axiom_case.k, limits);

  std::string why;
  auto modified_opt = replace_and_validate(base, x_index, splits, units, true, &why);
  if (!modified_opt) return not_applicable(why);
  Instance modified = std::move(*modified_opt);
  if (modified.n() < axiom_case.k) {
    return not_applicable("split instance has fewer than k alternatives");
  }

  OptimalSet mod_opt = all_optimal(modified, axiom_case.measure, axiom_case.k, limits);

  auto is_split_point = [&](int index) {
    return matches(modified, index, mod.replacements[0], mod_scale) ||
           matches(modified, index, mod.replacements[1], mod_scale);
  };
  auto base_index_of = [&](int index) {
    for (int i = 0; i < base.n(); ++i) {
      if (same_point(base, i, modified, index)) return i;
    }
    return -1;
  };
  auto optimal_in_base = [&](std::vector<std::int32_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (static_cast<int>(members.size()) != axiom_case.k) return false;
    const Slate slate{std::move(members)};
    return evaluate_measure(axiom_case.measure, base, slate) == base_opt.value;
  };

  bool holds = true;
  std::string failure_note;
  for (const Slate& slate : mod_opt.slates) {
    // Clause (i): the slate maps entirely into the base instance and is
    // optimal there.
    std::vector<std::int32_t> mapped;
    bool all_in_base = true;
    for (std::int32_t m : slate.members) {
      const int b = base_index_of(m);
      if (b < 0) {
        all_in_base = false;
        break;
      }
      mapped.push_back(b);
    }
    if (all_in_base && optimal_in_base(mapped)) continue;

    // Clause (ii): swapping the split copies back for the original must
    // yield an optimal base slate.
    std::vector<std::int32_t> swapped{x_index};
    bool mappable = true;
    for (std::int32_t m : slate.members) {
      if (is_split_point(m)) continue;
      const int b = base_index_of(m);
      if (b < 0) {
        mappable = false;
        break;
      }
      swapped.push_back(b);
    }
    if (mappable && optimal_in_base(swapped)) continue;

    holds = false;
    failure_note = "an optimal slate of the split instance matches neither axiom clause";
    break;
  }

  Witness witness;
  witness.base_value = Rational(base_opt.value, base.scale);
  witness.base_optimal = base_opt.slates;
  witness.modified_value = Rational(mod_opt.value, modified.scale);
  witness.modified_optimal = std::move(mod_opt.slates);
  witness.note = holds ? "every optimal slate of the split instance satisfies clause (i) or (ii)"
                       : failure_note;
  witness.modified = std::move(modified);
  return AxiomVerdict{holds ? VerdictKind::holds : VerdictKind::violated, std::move(witness), ""};
}

std::optional<int> find_standout(const Instance& instance) {
  if (instance.n() < 2) return std::nullopt;
  std::optional<int> found;
  for (int x = 0; x < instance.n(); ++x) {
    Dist weakest_lead = std::numeric_limits<Dist>::max();
    Dist strongest_against = 0;
    for (int a = 0; a < instance.n(); ++a) {
      if (a == x) continue;
      weakest_lead = std::min(weakest_lead, directed(instance.alt(x), instance.alt(a)));
      strongest_against = std::max(strongest_against, directed(instance.alt(a), instance.alt(x)));
    }
    if (weakest_lead > strongest_against) {
      if (found.has_value()) throw InternalError("two standout alternatives found");
      found = x;
    }
  }
  return found;
}

std::optional<int> find_outlier(const Instance& instance) {
  if (instance.n() < 3) return std::nullopt;
  std::optional<int> found;
  for (int x = 0; x < instance.n(); ++x) {
    Dist nearest = std::numeric_limits<Dist>::max();
    for (int a = 0; a < instance.n(); ++a) {
      if (a != x) nearest = std::min(nearest, manhattan(instance.alt(x), instance.alt(a)));
    }
    Dist widest_rest = 0;
    for (int y = 0; y < instance.n(); ++y) {
      for (int z = y + 1; z < instance.n(); ++z) {
        if (y == x || z == x) continue;
        widest_rest = std::max(widest_rest, manhattan(instance.alt(y), instance.alt(z)));
      }
    }
    if (nearest > widest_rest) {
      if (found.has_value()) throw InternalError("two outlier alternatives found");
      found = x;
    }
  }
  return found;
}

AxiomVerdict check_consistency(const Instance& instance, int k, MeasureId measure,
                               SpecialKind kind, const Limits& limits) {
  const std::optional<int> special =
      kind == SpecialKind::standout ? find_standout(instance) : find_outlier(instance);
  if (!special.has_value()) {
    return not_applicable(kind == SpecialKind::standout ? "no standout alternative"
                                                        : "no outlier alternative");
  }
  if (kind == SpecialKind::outlier && k < 2) {
    return not_applicable("outlier consistency is stated for k >= 2");
  }
  OptimalSet opt = all_optimal(instance, measure, k, limits);
  const bool holds = std::all_of(opt.slates.begin(), opt.slates.end(),
                                 [&](const Slate& s) { return s.contains(*special); });
  Witness witness;
  witness.base_value = Rational(opt.value, instance.scale);
  witness.base_optimal = std::move(opt.slates);
  witness.note = std::string(kind == SpecialKind::standout ? "standout" : "outlier") +
                 " alternative has index " + std::to_string(*special);
  return AxiomVerdict{holds ? VerdictKind::holds : VerdictKind::violated, std::move(witness), ""};
}

AxiomVerdict check_axiom(const AxiomCase& axiom_case, const Limits& limits) {
  switch (axiom_case.axiom) {
    case Axiom::monotonicity: return check_monotonicity(axiom_case, limits);
    case Axiom::eps_split: return check_eps_split(axiom_case, limits);
    case Axiom::extremism: return check_extremism(axiom_case, limits);
    case Axiom::standout:
      return check_consistency(axiom_case.instance, axiom_case.k, axiom_case.measure,
                               SpecialKind::standout, limits);
    case Axiom::outlier:
      return check_consistency(axiom_case.instance, axiom_case.k, axiom_case.measure,
                               SpecialKind::outlier, limits);
  }
  throw InternalError("unknown axiom");
}

Rational eps_split_sufficient_epsilon(const Instance& instance, int k, const Limits& limits) {
  SolveRequest request{instance, MeasureId::uniformity, k, SolverId::automatic, false, limits};
  const Dist best_uniformity = solve(request).optimal_value;

  std::vector<Dist> distances;
  for (int i = 0; i < instance.n(); ++i) {
    for (int j = i + 1; j < instance.n(); ++j) {
      distances.push_back(manhattan(instance.alt(i), instance.alt(j)));
    }
  }
  std::sort(distances.begin(), distances.end());
  distances.erase(std::unique(distances.begin(), distances.end()), distances.end());

  Rational bound(best_uniformity, 3 * instance.scale);
  for (std::size_t i = 1; i < distances.size(); ++i) {
    bound = std::min(bound, Rational(distances[i] - distances[i - 1], 2 * instance.scale));
  }
  return bound * Rational(999'999, 1'000'000);
}

namespace {

AxiomCase random_replacement_case(Rng& rng, Axiom axiom, MeasureId measure,
                                  const Limits& limits) {
  const int family = static_cast<int>(rng.below(3));
  const int n = static_cast<int>(rng.range(4, 8));
  Instance instance = family == 0   ? random_pareto_2d(rng, n, 12)
                      : family == 1 ? random_lift_4d(rng, n, 12)
                                    : random_plane_3d(rng, n, 12);
  const int k_lo = measure == MeasureId::uniformity ? 2 : 1;
  const int k = static_cast<int>(rng.range(k_lo, std::min(4, instance.n())));

  AxiomCase axiom_case{axiom, measure, instance, k, std::nullopt};
  OptimalSet opt = all_optimal(instance, measure, k, limits);
  const Slate& slate = opt.slates[rng.below(opt.slates.size())];

  if (axiom == Axiom::monotonicity) {
    const int x = slate.members[rng.below(slate.members.size())];
    Alternative y = instance.alt(x);
    bool bumped = false;
    while (!bumped) {
      for (Coord& c : y.coords) {
        const Coord bump = rng.range(0, 2);
        c += bump;
        bumped = bumped || bump > 0;
      }
    }
    axiom_case.modification = Modification{instance.alt(x), {y}, std::nullopt, -1, 0,
                                           PushDirection::up};
    return axiom_case;
  }

  // Extremism: look for a selected alternative extremal in some objective.
  for (std::int32_t member : slate.members) {
    for (int objective = 0; objective < instance.d(); ++objective) {
      Coord lo = instance.alt(0).coords[objective];
      Coord hi = lo;
      for (int i = 1; i < instance.n(); ++i) {
        lo = std::min(lo, instance.alt(i).coords[objective]);
        hi = std::max(hi, instance.alt(i).coords[objective]);
      }
      const Coord value = instance.alt(member).coords[objective];
      if (value == hi || value == lo) {
        axiom_case.modification =
            Modification{instance.alt(member),
                         {},
                         std::nullopt,
                         objective,
                         rng.range(1, 5),
                         value == hi ? PushDirection::up : PushDirection::down};
        return axiom_case;
      }
    }
  }
  // No extremal selected alternative: emit a case the checker will mark
  // not-applicable.
  axiom_case.modification = Modification{instance.alt(slate.members.front()), {}, std::nullopt, 0,
                                         1, PushDirection::up};
  return axiom_case;
}

AxiomCase random_eps_split_case(Rng& rng, MeasureId measure, const Limits& limits) {
  const int family = static_cast<int>(rng.below(2));
  const int n = static_cast<int>(rng.range(4, 7));
  Instance instance =
      family == 0 ? random_pareto_2d(rng, n, 10) : random_lift_4d(rng, n, 10);
  const int k_lo = measure == MeasureId::uniformity ? 2 : 1;
  const int k = static_cast<int>(rng.range(k_lo, std::min(3, instance.n())));

  Rational eps = measure == MeasureId::uniformity
                     ? eps_split_sufficient_epsilon(instance, k, limits)
                     : Rational(2 * instance.d() + 2, instance.scale);

  const int x = static_cast<int>(rng.below(instance.n()));
  auto draw_split = [&] {
    Alternative p = instance.alt(x);
    for (Coord& c : p.coords) c += rng.range(-1, 1);
    if (Rational(manhattan(instance.alt(x), p), instance.scale) >= eps) {
      return instance.alt(x);  // offsets too large for this epsilon
    }
    return p;
  };
  AxiomCase axiom_case{Axiom::eps_split, measure, instance, k, std::nullopt};
  axiom_case.modification = Modification{instance.alt(x),
                                         {draw_split(), draw_split()},
                                         eps,
                                         -1,
                                         0,
                                         PushDirection::up};
  return axiom_case;
}

}  // namespace

TrialStats run_random_axiom_trials(Axiom axiom, MeasureId measure, int trials,
                                   std::uint64_t seed, const Limits& limits) {
  Rng rng(seed);
  TrialStats stats;
  for (int trial = 0; trial < trials; ++trial) {
    AxiomCase axiom_case;
    switch (axiom) {
      case Axiom::monotonicity:
      case Axiom::extremism:
        axiom_case = random_replacement_case(rng, axiom, measure, limits);
        break;
      case Axiom::eps_split:
        axiom_case = random_eps_split_case(rng, measure, limits);
        break;
      case Axiom::standout:
      case Axiom::outlier: {
        const int n = static_cast<int>(rng.range(5, 9));
        const bool lifted = rng.below(2) == 1;
        axiom_case.axiom = axiom;
        axiom_case.measure = measure;
        axiom_case.instance = axiom == Axiom::standout
                                  ? random_with_standout(rng, n, lifted)
                                  : random_with_outlier(rng, n, lifted);
        axiom_case.k = static_cast<int>(rng.range(2, std::min(4, axiom_case.instance.n())));
        break;
      }
    }
    const AxiomVerdict verdict = check_axiom(axiom_case, limits);
    switch (verdict.kind) {
      case VerdictKind::holds: ++stats.holds; break;
      case VerdictKind::violated:
        ++stats.violated;
        if (stats.first_violation.empty()) {
          stats.first_violation = "trial " + std::to_string(trial) + " of seed " +
                                  std::to_string(seed) + ": " +
                                  (verdict.witness ? verdict.witness->note : verdict.detail);
        }
        break;
      case VerdictKind::not_applicable: ++stats.not_applicable; break;
    }
  }
  return stats;
}

}  // namespace pruning
