#include "qtl/suite.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "qtl/enumerate.hpp"
#include "qtl/hom.hpp"
#include "qtl/json_io.hpp"
#include "qtl/topology.hpp"

namespace qtl {
namespace {

enum CheckId : int {
  kCorpusAxioms,
  kIdealsMatchBruteFilter,
  kAllIdealsPrincipal,
  kIdealOpsMatchLiteralForms,
  kClassificationImplications,
  kDistinguishedStronglyIrreducible,
  kStronglyIrreducibleSpectrumHkp,
  kHkpIffKuratowski,
  kKuratowskiIffClosedBasis,
  kUpsetMeetCollapse,
  kPointClosureIsUpset,
  kSpecializationMatchesContainment,
  kAlwaysT0,
  kT1IffPointsWithinMax,
  kT1IffAntichain,
  kT1MaxCorrelation,
  kSoberIffCondition,
  kDistinguishedSober,
  kMaxWithinSpectrumImpliesQc,
  kDistinguishedQuasiCompact,
  kNoFipGap,
  kQcCharacterization,
  kNoetherianChains,
  kZeroPointImpliesConnected,
  kProperSpectraSpectral,
  kDisconnectionYieldsIdempotent,
  kHomContractionProperty,
  kHomContinuity,
  kHomKernelUpsetHomeo,
  kHomDensity,
  kHomComposition,
  kCheckCount,
};

struct CheckSpec {
  const char* name;
  bool informational;
};

constexpr CheckSpec kCheckSpecs[kCheckCount] = {
    {"corpus-axioms", false},
    {"ideals-match-brute-filter", false},
    {"all-ideals-principal", false},
    {"ideal-ops-match-literal-forms", false},
    {"classification-implications", false},
    {"distinguished-ideals-strongly-irreducible", false},
    {"strongly-irreducible-spectrum-hkp", false},
    {"hkp-iff-kuratowski", false},
    {"kuratowski-iff-closed-basis", false},
    {"upset-meet-collapse", false},
    {"point-closure-is-upset", false},
    {"specialization-matches-containment", false},
    {"always-t0", false},
    {"t1-iff-points-within-max", false},
    {"t1-iff-antichain", false},
    {"t1-within-max-correlation", true},
    {"sober-iff-generic-point-condition", false},
    {"proper-prime-strongly-irreducible-sober", false},
    {"max-within-spectrum-implies-qc", false},
    {"distinguished-spectra-quasi-compact", false},
    {"no-finite-intersection-gap", false},
    {"qc-characterization", false},
    {"noetherian-ascending-chains", false},
    {"zero-point-implies-connected", false},
    {"proper-spectra-spectral", false},
    {"disconnection-yields-idempotent", false},
    {"hom-contraction-property-matches-induced-map", false},
    {"hom-induced-continuity", false},
    {"hom-kernel-upset-homeomorphism", false},
    {"hom-density-criterion", false},
    {"hom-composition", false},
};

constexpr size_t kFragmentDetailCap = 2;
constexpr size_t kReportDetailCap = 6;

/// Tallies for the two readings of the T1 law, reported without judging.
struct CorrelationTally {
  std::int64_t t1_and_within = 0;
  std::int64_t t1_only = 0;
  std::int64_t within_only = 0;
  std::int64_t neither = 0;

  void add(bool t1, bool within) {
    (t1 ? (within ? t1_and_within : t1_only) : (within ? within_only : neither)) += 1;
  }
  CorrelationTally& operator+=(const CorrelationTally& o) {
    t1_and_within += o.t1_and_within;
    t1_only += o.t1_only;
    within_only += o.within_only;
    neither += o.neither;
    return *this;
  }
  std::string render(const char* rhs_name) const {
    std::ostringstream out;
    out << "T1&" << rhs_name << "=" << t1_and_within << ", T1-only=" << t1_only << ", "
        << rhs_name << "-only=" << within_only << ", neither=" << neither;
    return out.str();
  }
};

/// One task's share of the results; aggregated in task order so the outcome
/// is independent of the worker count.
struct Fragment {
  std::array<std::int64_t, kCheckCount> cases{};
  std::array<std::int64_t, kCheckCount> failures{};
  std::vector<std::pair<int, std::string>> details;
  std::optional<Counterexample> first;
  std::int64_t spectra_seen = 0;
  CorrelationTally points_within_max;
  CorrelationTally max_within_points;
};

class Recorder {
 public:
  Recorder(Fragment& fragment, const Quantale& q) : fragment_(fragment), q_(q) {}

  void pass(int check) { fragment_.cases[static_cast<size_t>(check)] += 1; }

  void fail(int check, const std::string& selector, const std::string& detail) {
    fragment_.cases[static_cast<size_t>(check)] += 1;
    fragment_.failures[static_cast<size_t>(check)] += 1;
    std::int64_t already = 0;
    for (const auto& [id, text] : fragment_.details) {
      if (id == check) ++already;
    }
    if (already < static_cast<std::int64_t>(kFragmentDetailCap)) {
      std::string text = q_.name();
      if (!selector.empty()) text += " [" + selector + "]";
      text += ": " + detail;
      fragment_.details.emplace_back(check, std::move(text));
    }
    if (!fragment_.first) {
      Counterexample ce;
      ce.property = kCheckSpecs[static_cast<size_t>(check)].name;
      ce.selector = selector;
      ce.detail = detail;
      ce.quantale = quantale_to_json(q_);
      fragment_.first = std::move(ce);
    }
  }

  void check(int check, const std::string& selector, bool ok, const std::string& detail) {
    if (ok) {
      pass(check);
    } else {
      fail(check, selector, detail);
    }
  }

  /// Runs the predicate, translating a thrown Error into a failure. Checks
  /// over lawful instances should never throw; when one does, that is a
  /// finding in itself.
  void guarded(int check, const std::string& selector, const std::function<bool()>& body,
               const std::string& detail) {
    try {
      check_result(check, selector, body(), detail);
    } catch (const Error& e) {
      fail(check, selector, detail + " (error: " + std::string(e.what()) + ")");
    }
  }

 private:
  void check_result(int id, const std::string& selector, bool ok, const std::string& detail) {
    check(id, selector, ok, detail);
  }

  Fragment& fragment_;
  const Quantale& q_;
};

struct SpectrumCase {
  Spectrum spectrum;
  SubbasisTopology space;
  bool named = false;
};

std::vector<SmallSet> brute_ideal_carriers(const Quantale& q) {
  const Lattice& l = q.lattice();
  const int n = q.size();
  std::vector<SmallSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    SmallSet s;
    for (int x = 0; x < n; ++x) {
      if (bits & (std::uint64_t{1} << x)) s.insert(x);
    }
    bool ok = true;
    for (int x : s) {
      for (int y = 0; y < n && ok; ++y) {
        if (l.leq(y, x) && !s.contains(y)) ok = false;
      }
      if (!ok) break;
      for (int y : s) {
        if (!s.contains(l.join(x, y))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

/// Smallest brute ideal containing the seed: intersection of all of them.
SmallSet brute_generated(const std::vector<SmallSet>& ideals, SmallSet seed, SmallSet universe) {
  SmallSet acc = universe;
  for (const SmallSet& s : ideals) {
    if (seed.subset_of(s)) acc &= s;
  }
  return acc;
}

void run_ideal_checks(Recorder& rec, const Quantale& q, const std::vector<Ideal>& ideals,
                      const std::vector<IdealClassification>& flags) {
  const Lattice& l = q.lattice();
  const std::vector<SmallSet> brute = brute_ideal_carriers(q);

  {
    std::vector<std::uint64_t> got, expect;
    for (const Ideal& i : ideals) got.push_back(i.carrier().bits());
    for (const SmallSet& s : brute) expect.push_back(s.bits());
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    rec.check(kIdealsMatchBruteFilter, "", got == expect,
              "ideal listing disagrees with the brute-force subset filter");
  }

  for (const SmallSet& s : brute) {
    std::vector<int> members(s.begin(), s.end());
    int g = members[0];
    for (int x : members) g = l.join(g, x);
    rec.check(kAllIdealsPrincipal, "", s == l.downset(g),
              "an ideal is not the downset of its join");
  }

  for (const Ideal& a : ideals) {
    for (const Ideal& b : ideals) {
      rec.guarded(
          kIdealOpsMatchLiteralForms, "",
          [&] {
            const Ideal pair_arr[] = {a, b};
            const Ideal join = ideal_join(q, pair_arr);
            const Ideal meet = ideal_meet(q, pair_arr);
            const Ideal prod = ideal_product(q, a, b);
            const Ideal flipped = ideal_product(q, b, a);
            return prod.carrier().subset_of(meet.carrier()) && prod == flipped &&
                   join.carrier() == (SmallSet(a.carrier()) | b.carrier() |
                                      Ideal::principal(q, l.join(a.generator(), b.generator()))
                                          .carrier()) &&
                   meet.carrier() == (SmallSet(a.carrier()) & b.carrier());
          },
          "join/meet/product disagree with their order-theoretic descriptions");
    }
  }
  for (const Ideal& a : ideals) {
    for (const Ideal& b : ideals) {
      for (const Ideal& c : ideals) {
        rec.guarded(
            kIdealOpsMatchLiteralForms, "",
            [&] {
              const Ideal bc[] = {b, c};
              const Ideal left = ideal_product(q, a, ideal_join(q, bc));
              const Ideal parts[] = {ideal_product(q, a, b), ideal_product(q, a, c)};
              if (left != ideal_join(q, parts)) return false;
              return ideal_product(q, ideal_product(q, a, b), c) ==
                     ideal_product(q, a, ideal_product(q, b, c));
            },
            "ideal product is not associative/distributive over ideal joins");
      }
    }
  }
  const SmallSet universe = l.universe();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << q.size()); ++bits) {
    SmallSet seed;
    for (int x = 0; x < q.size(); ++x) {
      if (bits & (std::uint64_t{1} << x)) seed.insert(x);
    }
    rec.guarded(
        kIdealOpsMatchLiteralForms, "",
        [&] { return generated_ideal(q, seed).carrier() == brute_generated(brute, seed, universe); },
        "generated ideal differs from the smallest brute-force ideal over the seed");
  }

  for (size_t i = 0; i < ideals.size(); ++i) {
    const IdealClassification& f = flags[i];
    bool ok = f.minimal_prime == (f.minimal && f.prime);
    ok = ok && (!f.strongly_irreducible || f.irreducible);
    ok = ok && (!f.maximal || (f.prime && f.irreducible));
    ok = ok && (!f.prime || f.primary);
    if (!f.proper) {
      ok = ok && !f.maximal && !f.minimal && !f.prime && !f.minimal_prime && !f.primary &&
           !f.irreducible && !f.strongly_irreducible;
    }
    rec.check(kClassificationImplications, "", ok,
              "classification flags of <" + l.label(ideals[i].generator()) +
                  "> break an implication between the classes");
    if (f.maximal || f.prime || f.minimal_prime) {
      rec.check(kDistinguishedStronglyIrreducible, "", f.strongly_irreducible,
                "<" + l.label(ideals[i].generator()) +
                    "> is maximal/prime/minimal-prime but not strongly irreducible");
    }
  }

  {
    bool ok = true;
    for (size_t i = 0; i < ideals.size() && ok; ++i) {
      for (size_t j = 0; j < ideals.size() && ok; ++j) {
        if (ideals[i].carrier().proper_subset_of(ideals[j].carrier()) &&
            ideals[j].carrier().proper_subset_of(ideals[i].carrier())) {
          ok = false;
        }
      }
    }
    // Strict inclusion on finitely many ideals cannot climb forever; the
    // longest strictly ascending chain is bounded by the ideal count.
    std::vector<int> depth(ideals.size(), 1);
    std::vector<size_t> order(ideals.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return ideals[x].carrier().count() < ideals[y].carrier().count();
    });
    int longest = ideals.empty() ? 0 : 1;
    for (size_t oi : order) {
      for (size_t oj : order) {
        if (ideals[oj].carrier().proper_subset_of(ideals[oi].carrier())) {
          depth[oi] = std::max(depth[oi], depth[oj] + 1);
        }
      }
      longest = std::max(longest, depth[oi]);
    }
    ok = ok && longest <= static_cast<int>(ideals.size());
    rec.check(kNoetherianChains, "", ok, "an ascending chain of ideals failed to stabilize");
  }
}

void run_spectrum_checks(Recorder& rec, Fragment& fragment, const Quantale& q,
                         const std::vector<Ideal>& ideals,
                         const std::vector<IdealClassification>& flags, const SpectrumCase& sc,
                         std::uint64_t seed) {
  const Spectrum& spec = sc.spectrum;
  const SubbasisTopology& space = sc.space;
  const std::string& sel = spec.selector;
  const Lattice& l = q.lattice();

  const bool hkp = satisfies_hkp(q, spec);
  KuratowskiOptions kopts;
  kopts.seed = seed;
  const KuratowskiResult kur = is_kuratowski_upset(q, spec, kopts);
  rec.check(kHkpIffKuratowski, sel, hkp == kur.holds,
            std::string("prime-style splitting says ") + (hkp ? "yes" : "no") +
                " but the closure-operator check says " + (kur.holds ? "yes" : "no") +
                (kur.sampled ? " (sampled)" : ""));
  rec.guarded(
      kKuratowskiIffClosedBasis, sel, [&] { return kur.holds == is_closed_basis(q, spec); },
      "closure-operator check and closed-basis check disagree");

  if (sc.named && sel == ideal_class_name(IdealClass::StronglyIrreducible)) {
    rec.check(kStronglyIrreducibleSpectrumHkp, sel, hkp,
              "the strongly irreducible spectrum fails the splitting property");
  }

  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << ideals.size()); ++bits) {
    std::vector<Ideal> family;
    for (size_t i = 0; i < ideals.size(); ++i) {
      if (bits & (std::uint64_t{1} << i)) family.push_back(ideals[i]);
    }
    rec.guarded(
        kUpsetMeetCollapse, sel,
        [&] {
          const Ideal collapsed[] = {ideal_meet(q, family)};
          return up_set(q, spec, family) == up_set(q, spec, collapsed);
        },
        "up-set of a family differs from the up-set of its meet");
  }

  for (int p = 0; p < space.point_count(); ++p) {
    rec.guarded(
        kPointClosureIsUpset, sel,
        [&] {
          const Ideal one[] = {spec.points[static_cast<size_t>(p)]};
          const SmallSet closure = space.point_closure(p);
          return closure == up_set(q, spec, one) && is_irreducible(space, closure);
        },
        "closure of the point <" + l.label(spec.points[static_cast<size_t>(p)].generator()) +
            "> is not its irreducible up-set");
  }

  for (int a = 0; a < space.point_count(); ++a) {
    for (int b = 0; b < space.point_count(); ++b) {
      const bool specializes = space.point_closure(a).contains(b);
      const bool contains = spec.points[static_cast<size_t>(a)].carrier().subset_of(
          spec.points[static_cast<size_t>(b)].carrier());
      rec.check(kSpecializationMatchesContainment, sel, specializes == contains,
                "specialization between points <" +
                    l.label(spec.points[static_cast<size_t>(a)].generator()) + "> and <" +
                    l.label(spec.points[static_cast<size_t>(b)].generator()) +
                    "> disagrees with ideal containment");
    }
  }

  rec.check(kAlwaysT0, sel, is_T0(space), "spectrum is not T0");

  const bool t1 = is_T1(space);
  bool points_within_max = true;
  for (const Ideal& p : spec.points) {
    if (!flags[static_cast<size_t>(p.generator())].maximal) points_within_max = false;
  }
  bool max_within_points = true;
  for (size_t i = 0; i < ideals.size(); ++i) {
    if (flags[i].maximal && spec.index_of(ideals[i]) < 0) max_within_points = false;
  }
  bool antichain = true;
  for (const Ideal& a : spec.points) {
    for (const Ideal& b : spec.points) {
      if (a.carrier().proper_subset_of(b.carrier())) antichain = false;
    }
  }
  if (sc.named) {
    rec.check(kT1IffPointsWithinMax, sel, t1 == points_within_max,
              std::string("T1 is ") + (t1 ? "true" : "false") +
                  " but \"every point is a maximal ideal\" is " +
                  (points_within_max ? "true" : "false"));
    fragment.points_within_max.add(t1, points_within_max);
    fragment.max_within_points.add(t1, max_within_points);
    fragment.cases[kT1MaxCorrelation] += 1;
  }
  rec.check(kT1IffAntichain, sel, t1 == antichain,
            "T1 disagrees with the points forming an antichain");

  rec.guarded(
      kSoberIffCondition, sel, [&] { return is_sober(space) == sobriety_condition(q, space); },
      "direct soberness check disagrees with the generic-point condition");

  if (sc.named &&
      (sel == ideal_class_name(IdealClass::Proper) || sel == ideal_class_name(IdealClass::Prime) ||
       sel == ideal_class_name(IdealClass::StronglyIrreducible))) {
    rec.guarded(kDistinguishedSober, sel, [&] { return is_sober(space); },
                "a distinguished spectrum is not sober");
  }

  rec.guarded(
      kMaxWithinSpectrumImpliesQc, sel,
      [&] { return !max_within_points || is_quasi_compact(space); },
      "every maximal ideal is a point, yet the space is not quasi-compact");

  if (sc.named && sel != ideal_class_name(IdealClass::MinimalPrime)) {
    rec.guarded(kDistinguishedQuasiCompact, sel, [&] { return is_quasi_compact(space); },
                "a distinguished spectrum is not quasi-compact");
  }

  rec.guarded(
      kNoFipGap, sel, [&] { return !subbasis_fip_witness(space).has_value(); },
      "found subbasic closed sets with the finite intersection property and empty total "
      "intersection");

  rec.guarded(kQcCharacterization, sel, [&] { return qc_characterization_holds(q, space); },
              "quasi-compactness disagrees with its maximal-point characterization");

  const Ideal zero = zero_ideal(q);
  rec.guarded(
      kZeroPointImpliesConnected, sel,
      [&] { return spec.index_of(zero) < 0 || is_connected(space); },
      "the zero ideal is a point, yet the space is disconnected");

  if (sc.named && sel == ideal_class_name(IdealClass::Proper)) {
    rec.guarded(kProperSpectraSpectral, sel, [&] { return is_spectral(space); },
                "the proper-ideal spectrum is not spectral");
    rec.check(kZeroPointImpliesConnected, sel, q.size() < 2 || spec.index_of(zero) >= 0,
              "the zero ideal is missing from the proper-ideal spectrum");
  }

  bool preconditions = q.size() >= 2 && max_within_points;
  if (preconditions) {
    preconditions = jacobson_radical(q) == zero;
  }
  if (preconditions) {
    rec.guarded(
        kDisconnectionYieldsIdempotent, sel,
        [&] {
          const auto witness = strong_disconnection(space, DisconnectionMode::Pair);
          if (!witness) return true;
          const int e = extract_idempotent(q, space, *witness);
          return q.mul(e, e) == e && e != q.bottom() && e != q.top();
        },
        "a pair disconnection did not yield a nontrivial idempotent");
  }

  fragment.spectra_seen += 1;
}

Fragment run_instance_task(const Quantale& q, std::uint64_t seed) {
  Fragment fragment;
  Recorder rec(fragment, q);

  try {
    q.verify_axioms();
    rec.pass(kCorpusAxioms);
  } catch (const Error& e) {
    rec.fail(kCorpusAxioms, "", e.what());
    return fragment;  // everything downstream assumes a lawful instance
  }

  const std::vector<Ideal> ideals = all_ideals(q);
  std::vector<IdealClassification> flags(ideals.size());
  for (size_t i = 0; i < ideals.size(); ++i) {
    flags[static_cast<size_t>(ideals[i].generator())] = classify(q, ideals[i]);
  }

  run_ideal_checks(rec, q, ideals, flags);

  std::vector<SpectrumCase> cases;
  for (IdealClass cls :
       {IdealClass::Proper, IdealClass::Maximal, IdealClass::Prime, IdealClass::MinimalPrime,
        IdealClass::Primary, IdealClass::Irreducible, IdealClass::StronglyIrreducible}) {
    Spectrum s = spectrum(q, cls);
    SubbasisTopology space = SubbasisTopology::build(q, s);
    cases.push_back({std::move(s), std::move(space), true});
  }
  std::vector<Ideal> proper;
  for (size_t i = 0; i < ideals.size(); ++i) {
    if (flags[static_cast<size_t>(ideals[i].generator())].proper) proper.push_back(ideals[i]);
  }
  if (proper.size() <= 6) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << proper.size()); ++bits) {
      std::vector<Ideal> chosen;
      for (size_t i = 0; i < proper.size(); ++i) {
        if (bits & (std::uint64_t{1} << i)) chosen.push_back(proper[i]);
      }
      Spectrum s = custom_spectrum(q, std::move(chosen));
      SubbasisTopology space = SubbasisTopology::build(q, s);
      cases.push_back({std::move(s), std::move(space), false});
    }
  }

  for (const SpectrumCase& sc : cases) {
    run_spectrum_checks(rec, fragment, q, ideals, flags, sc, seed);
  }
  return fragment;
}

Fragment run_hom_pair_task(const Quantale& a, const Quantale& b,
                           const std::vector<QuantaleHom>& homs) {
  Fragment fragment;
  Recorder rec(fragment, a);

  for (const QuantaleHom& hom : homs) {
    for (IdealClass cls :
         {IdealClass::Proper, IdealClass::Maximal, IdealClass::Prime, IdealClass::MinimalPrime,
          IdealClass::Primary, IdealClass::Irreducible, IdealClass::StronglyIrreducible}) {
      const std::string sel = ideal_class_name(cls);
      const Spectrum src = spectrum(a, cls);
      const Spectrum tgt = spectrum(b, cls);

      bool defined = true;
      try {
        induced_map(hom, src, tgt);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ContractionEscapes) throw;
        defined = false;
      }
      rec.guarded(
          kHomContractionProperty, sel,
          [&] { return has_contraction_property(cls, hom) == defined; },
          "contraction-property answer disagrees with induced-map definedness");
      if (!defined) continue;

      const SubbasisTopology src_space = SubbasisTopology::build(a, src);
      const SubbasisTopology tgt_space = SubbasisTopology::build(b, tgt);

      rec.guarded(
          kHomContinuity, sel,
          [&] {
            return is_continuous(hom, src_space, tgt_space) &&
                   continuity_identity_holds(hom, src, tgt);
          },
          "induced spectrum map is not continuous (or its subbasis description fails)");

      if (hom.is_surjective() && saturated_above_kernel(hom)) {
        rec.guarded(
            kHomKernelUpsetHomeo, sel,
            [&] {
              return homeo_onto_kernel_upset(hom, src_space, tgt_space) &&
                     closure_image_identity_holds(hom, src_space, tgt);
            },
            "a saturated surjection fails to identify the target spectrum with the points above "
            "its kernel");
      }

      if (!src.points.empty()) {
        rec.guarded(
            kHomDensity, sel,
            [&] {
              const bool dense = induced_image_dense(hom, src_space, tgt);
              const bool criterion = density_criterion(hom, src);
              if (dense && !criterion) return false;
              const bool zero_is_target_point = tgt.index_of(zero_ideal(b)) >= 0;
              if (zero_is_target_point) return dense == criterion;
              return true;
            },
            "induced-image density disagrees with the kernel-below-all-points criterion");
      }
    }
  }
  return fragment;
}

Fragment run_composition_task(const Quantale& a, const Quantale& b, const Quantale& c,
                              const std::vector<QuantaleHom>& inner_homs,
                              const std::vector<QuantaleHom>& outer_homs) {
  Fragment fragment;
  Recorder rec(fragment, a);

  for (const QuantaleHom& inner : inner_homs) {
    for (const QuantaleHom& outer : outer_homs) {
      rec.guarded(
          kHomComposition, "",
          [&] {
            const QuantaleHom chained = compose(outer, inner);
            for (int x = 0; x < a.size(); ++x) {
              if (chained.apply(x) != outer.apply(inner.apply(x))) return false;
            }
            for (IdealClass cls : {IdealClass::Proper, IdealClass::Prime, IdealClass::Maximal}) {
              const Spectrum sa = spectrum(a, cls);
              const Spectrum sb = spectrum(b, cls);
              const Spectrum sc = spectrum(c, cls);
              InducedMap f, g, h;
              try {
                f = induced_map(inner, sa, sb);
                g = induced_map(outer, sb, sc);
                h = induced_map(chained, sa, sc);
              } catch (const Error& e) {
                if (e.code() != ErrorCode::ContractionEscapes) throw;
                continue;
              }
              for (size_t i = 0; i < h.point_map.size(); ++i) {
                if (h.point_map[i] != f.point_map[static_cast<size_t>(g.point_map[i])]) {
                  return false;
                }
              }
            }
            return true;
          },
          "composite map does not act like the two maps applied in turn");
    }
  }
  return fragment;
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& opts) {
  SuiteReport report;
  report.max_size = opts.max_size;
  report.seed = opts.seed;

  std::vector<Quantale> corpus = corpus_up_to(opts.max_size);
  if (opts.inject_mutant) {
    int victim = -1;
    for (size_t i = 0; i < corpus.size(); ++i) {
      if (corpus[i].size() >= 2) victim = static_cast<int>(i);
    }
    if (victim < 0) {
      throw Error(ErrorCode::InvalidInput,
                  "mutant injection needs a corpus instance with at least two elements");
    }
    const Quantale& original = corpus[static_cast<size_t>(victim)];
    std::vector<int> table = original.mul_table();
    // Corrupting bottom * top breaks the unit law with a pinned witness.
    table[static_cast<size_t>(original.bottom()) * original.size() + original.top()] =
        original.top();
    corpus[static_cast<size_t>(victim)] =
        Quantale::unchecked(original.lattice(), std::move(table), original.name());
  }
  report.quantale_count = static_cast<int>(corpus.size());

  std::vector<size_t> small_indices;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].size() <= 3) small_indices.push_back(i);
  }
  std::vector<std::vector<std::vector<QuantaleHom>>> homs(
      small_indices.size(), std::vector<std::vector<QuantaleHom>>(small_indices.size()));
  int hom_count = 0;
  for (size_t i = 0; i < small_indices.size(); ++i) {
    for (size_t j = 0; j < small_indices.size(); ++j) {
      homs[i][j] = enumerate_homs(corpus[small_indices[i]], corpus[small_indices[j]]);
      hom_count += static_cast<int>(homs[i][j].size());
    }
  }
  report.hom_count = hom_count;

  std::vector<std::function<Fragment()>> tasks;
  for (const Quantale& q : corpus) {
    tasks.push_back([&q, seed = opts.seed] { return run_instance_task(q, seed); });
  }
  for (size_t i = 0; i < small_indices.size(); ++i) {
    for (size_t j = 0; j < small_indices.size(); ++j) {
      tasks.push_back([&corpus, &homs, &small_indices, i, j] {
        return run_hom_pair_task(corpus[small_indices[i]], corpus[small_indices[j]], homs[i][j]);
      });
    }
  }
  for (size_t i = 0; i < small_indices.size(); ++i) {
    for (size_t j = 0; j < small_indices.size(); ++j) {
      for (size_t k = 0; k < small_indices.size(); ++k) {
        if (homs[i][j].empty() || homs[j][k].empty()) continue;
        tasks.push_back([&corpus, &homs, &small_indices, i, j, k] {
          return run_composition_task(corpus[small_indices[i]], corpus[small_indices[j]],
                                      corpus[small_indices[k]], homs[i][j], homs[j][k]);
        });
      }
    }
  }

  std::vector<Fragment> results(tasks.size());
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = tasks[i]();
    }
  };
  int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  report.checks.resize(kCheckCount);
  for (int c = 0; c < kCheckCount; ++c) {
    report.checks[static_cast<size_t>(c)].name = kCheckSpecs[c].name;
    report.checks[static_cast<size_t>(c)].informational = kCheckSpecs[c].informational;
  }
  CorrelationTally proof_reading, statement_reading;
  std::int64_t spectra = 0;
  std::array<std::int64_t, kCheckCount> dropped_details{};
  for (const Fragment& fragment : results) {
    for (int c = 0; c < kCheckCount; ++c) {
      report.checks[static_cast<size_t>(c)].cases += fragment.cases[static_cast<size_t>(c)];
      report.checks[static_cast<size_t>(c)].failures += fragment.failures[static_cast<size_t>(c)];
    }
    for (const auto& [check, text] : fragment.details) {
      auto& details = report.checks[static_cast<size_t>(check)].details;
      if (details.size() < kReportDetailCap) {
        details.push_back(text);
      } else {
        dropped_details[static_cast<size_t>(check)] += 1;
      }
    }
    if (fragment.first && !report.first_counterexample) {
      report.first_counterexample = fragment.first;
    }
    proof_reading += fragment.points_within_max;
    statement_reading += fragment.max_within_points;
    spectra += fragment.spectra_seen;
  }
  for (int c = 0; c < kCheckCount; ++c) {
    if (dropped_details[static_cast<size_t>(c)] > 0) {
      report.checks[static_cast<size_t>(c)].details.push_back(
          "... and " + std::to_string(dropped_details[static_cast<size_t>(c)]) +
          " more failure(s)");
    }
  }
  report.spectrum_count = static_cast<int>(spectra);
  report.checks[kT1MaxCorrelation].details.push_back(
      "points-within-max: " + proof_reading.render("within"));
  report.checks[kT1MaxCorrelation].details.push_back(
      "max-within-points: " + statement_reading.render("included"));

  report.passed = true;
  for (const CheckOutcome& c : report.checks) {
    if (!c.informational && c.failures > 0) report.passed = false;
  }
  return report;
}

nlohmann::ordered_json suite_report_to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["max_size"] = r.max_size;
  j["seed"] = r.seed;
  j["quantales"] = r.quantale_count;
  j["spectra"] = r.spectrum_count;
  j["homs"] = r.hom_count;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckOutcome& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["cases"] = c.cases;
    jc["failures"] = c.failures;
    jc["informational"] = c.informational;
    jc["details"] = c.details;
    j["checks"].push_back(std::move(jc));
  }
  if (r.first_counterexample) {
    nlohmann::ordered_json ce;
    ce["property"] = r.first_counterexample->property;
    ce["selector"] = r.first_counterexample->selector;
    ce["detail"] = r.first_counterexample->detail;
    ce["quantale"] = r.first_counterexample->quantale;
    j["first_counterexample"] = std::move(ce);
  } else {
    j["first_counterexample"] = nullptr;
  }
  j["passed"] = r.passed;
  return j;
}

std::string suite_report_to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "theorem suite over the enumerated corpus up to size " << r.max_size << " (seed "
      << r.seed << ")\n";
  out << "  instances: " << r.quantale_count << ", spectra: " << r.spectrum_count
      << ", homomorphisms: " << r.hom_count << "\n";
  for (const CheckOutcome& c : r.checks) {
    const char* status = c.informational ? "INFO" : (c.failures == 0 ? "PASS" : "FAIL");
    out << "  [" << status << "] " << c.name << ": " << c.cases << " case(s)";
    if (c.failures > 0) out << ", " << c.failures << " failure(s)";
    out << "\n";
    for (const std::string& d : c.details) out << "      " << d << "\n";
  }
  if (r.first_counterexample) {
    out << "  first counterexample: " << r.first_counterexample->property;
    if (!r.first_counterexample->selector.empty()) {
      out << " [" << r.first_counterexample->selector << "]";
    }
    out << " on " << r.first_counterexample->quantale["name"].get<std::string>() << ": "
        << r.first_counterexample->detail << "\n";
  }
  out << (r.passed ? "  suite PASSED\n" : "  suite FAILED\n");
  return out.str();
}

}  // namespace qtl
