#include "qtl/topology.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace qtl {
namespace {

void check_space_owner(const Quantale& q, const SubbasisTopology& t) {
  if (t.spectrum().owner != q.fingerprint()) {
    throw Error(ErrorCode::MixedQuantales,
                "topology was built over a different quantale than \"" + q.name() + "\"");
  }
}

SmallSet points_containing(const Spectrum& spectrum, SmallSet ideal_carrier) {
  SmallSet out;
  for (int p = 0; p < spectrum.size(); ++p) {
    if (ideal_carrier.subset_of(spectrum.points[static_cast<size_t>(p)].carrier())) {
      out.insert(p);
    }
  }
  return out;
}

}  // namespace

SubbasisTopology SubbasisTopology::build(const Quantale& q, const Spectrum& spectrum) {
  if (spectrum.owner != q.fingerprint()) {
    throw Error(ErrorCode::MixedQuantales,
                "spectrum was built over a different quantale than \"" + q.name() + "\"");
  }
  SubbasisTopology t;
  t.m_ = spectrum.size();
  t.spectrum_ = spectrum;

  std::unordered_set<std::uint64_t> seen;
  for (const Ideal& i : all_ideals(q)) {
    SmallSet pts = points_containing(spectrum, i.carrier());
    if (seen.insert(pts.bits()).second) {
      t.subbasis_.push_back(SubbasicSet{pts, i});
    }
  }
  if (seen.insert(0).second) {
    t.subbasis_.push_back(SubbasicSet{SmallSet{}, std::nullopt});
  }

  t.point_closure_.resize(static_cast<size_t>(t.m_));
  for (int p = 0; p < t.m_; ++p) {
    SmallSet cl = t.points_universe();
    for (const SubbasicSet& b : t.subbasis_) {
      if (b.points.contains(p)) cl &= b.points;
    }
    t.point_closure_[static_cast<size_t>(p)] = cl;
  }
  return t;
}

SubbasisTopology SubbasisTopology::from_point_sets(int point_count,
                                                   std::vector<SmallSet> subbasis) {
  if (point_count < 0 || point_count > kMaxCarrier) {
    throw Error(ErrorCode::SizeCap, "point count outside the supported range");
  }
  SubbasisTopology t;
  t.m_ = point_count;
  std::unordered_set<std::uint64_t> seen;
  for (SmallSet s : subbasis) {
    if (!s.subset_of(SmallSet::full(point_count))) {
      throw Error(ErrorCode::ForeignElement, "subbasic set mentions points outside the space");
    }
    if (seen.insert(s.bits()).second) t.subbasis_.push_back(SubbasicSet{s, std::nullopt});
  }
  if (seen.insert(0).second) t.subbasis_.push_back(SubbasicSet{SmallSet{}, std::nullopt});

  t.point_closure_.resize(static_cast<size_t>(point_count));
  for (int p = 0; p < point_count; ++p) {
    SmallSet cl = t.points_universe();
    for (const SubbasicSet& b : t.subbasis_) {
      if (b.points.contains(p)) cl &= b.points;
    }
    t.point_closure_[static_cast<size_t>(p)] = cl;
  }
  return t;
}

SmallSet SubbasisTopology::closure(SmallSet a) const {
  if (!a.subset_of(points_universe())) {
    throw Error(ErrorCode::ForeignElement, "closure of a set outside the space");
  }
  SmallSet out;
  for (int p : a) out |= point_closure_[static_cast<size_t>(p)];
  return out;
}

std::vector<SmallSet> SubbasisTopology::closed_sets() const {
  if (m_ > kClosedSetEnumerationCap) {
    throw Error(ErrorCode::SizeCap,
                "closed-set enumeration over " + std::to_string(m_) + " points (cap " +
                    std::to_string(kClosedSetEnumerationCap) + ")");
  }
  // In a finite space every closed set is a union of point closures and
  // every union of point closures is closed, so sweep all point subsets.
  const std::uint64_t limit = std::uint64_t{1} << m_;
  std::vector<std::uint64_t> union_of(static_cast<size_t>(limit), 0);
  std::unordered_set<std::uint64_t> seen;
  std::vector<SmallSet> out;
  seen.insert(0);
  out.push_back(SmallSet{});
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const int low = std::countr_zero(mask);
    union_of[mask] =
        union_of[mask & (mask - 1)] | point_closure_[static_cast<size_t>(low)].bits();
    if (seen.insert(union_of[mask]).second) out.push_back(SmallSet(union_of[mask]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SmallSet up_set(const Quantale& q, const Spectrum& spectrum, std::span<const Ideal> ideals) {
  if (spectrum.owner != q.fingerprint()) {
    throw Error(ErrorCode::MixedQuantales, "spectrum belongs to a different quantale");
  }
  if (ideals.empty()) return SmallSet{};
  SmallSet meet_carrier = q.lattice().universe();
  for (const Ideal& i : ideals) {
    if (i.owner() != q.fingerprint()) {
      throw Error(ErrorCode::MixedQuantales, "ideal belongs to a different quantale");
    }
    meet_carrier &= i.carrier();
  }
  return points_containing(spectrum, meet_carrier);
}

bool satisfies_hkp(const Quantale& q, const Spectrum& spectrum) {
  if (spectrum.owner != q.fingerprint()) {
    throw Error(ErrorCode::MixedQuantales, "spectrum belongs to a different quantale");
  }
  const std::vector<Ideal> ideals = all_ideals(q);
  for (size_t a = 0; a < ideals.size(); ++a) {
    for (size_t b = a; b < ideals.size(); ++b) {
      const SmallSet meet = ideals[a].carrier() & ideals[b].carrier();
      for (const Ideal& s : spectrum.points) {
        if (meet.subset_of(s.carrier()) && !ideals[a].carrier().subset_of(s.carrier()) &&
            !ideals[b].carrier().subset_of(s.carrier())) {
          return false;
        }
      }
    }
  }
  return true;
}

KuratowskiResult is_kuratowski_upset(const Quantale& q, const Spectrum& spectrum,
                                     const KuratowskiOptions& opts) {
  if (spectrum.owner != q.fingerprint()) {
    throw Error(ErrorCode::MixedQuantales, "spectrum belongs to a different quantale");
  }
  const std::vector<Ideal> ideals = all_ideals(q);
  const int k = static_cast<int>(ideals.size());

  // Which ideals are points, and under which point index.
  std::vector<int> point_of(static_cast<size_t>(k), -1);
  SmallSet point_ideals;
  for (int i = 0; i < k; ++i) {
    const int p = spectrum.index_of(ideals[static_cast<size_t>(i)]);
    if (p >= 0) {
      point_of[static_cast<size_t>(i)] = p;
      point_ideals.insert(i);
    }
  }
  std::vector<int> ideal_of_point(static_cast<size_t>(spectrum.size()), -1);
  for (int i = 0; i < k; ++i) {
    if (point_of[static_cast<size_t>(i)] >= 0) {
      ideal_of_point[static_cast<size_t>(point_of[static_cast<size_t>(i)])] = i;
    }
  }

  // up(X) for a set X of ideal indices: points containing the meet of X.
  auto up = [&](SmallSet x) -> SmallSet {
    if (x.empty()) return SmallSet{};
    SmallSet meet = q.lattice().universe();
    for (int i : x) meet &= ideals[static_cast<size_t>(i)].carrier();
    return points_containing(spectrum, meet);
  };
  auto as_ideal_set = [&](SmallSet pts) -> SmallSet {
    SmallSet out;
    for (int p : pts) out.insert(ideal_of_point[static_cast<size_t>(p)]);
    return out;
  };
  auto as_point_set = [&](SmallSet x) -> SmallSet {
    SmallSet out;
    for (int i : x) out.insert(point_of[static_cast<size_t>(i)]);
    return out;
  };

  // One X: empty-to-empty (trivially exercised), extensivity when X is a set
  // of points, idempotence always.
  auto check_single = [&](SmallSet x) -> bool {
    const SmallSet u = up(x);
    if (x.empty() && !u.empty()) return false;
    if (x.subset_of(point_ideals) && !as_point_set(x).subset_of(u)) return false;
    if (up(as_ideal_set(u)) != u) return false;
    return true;
  };
  auto check_pair = [&](SmallSet x, SmallSet y) -> bool {
    return up(x | y) == (up(x) | up(y));
  };

  KuratowskiResult result;
  result.holds = true;
  const std::uint64_t subsets = std::uint64_t{1} << k;
  if (k < 32 && subsets * subsets <= opts.pair_budget) {
    for (std::uint64_t xb = 0; xb < subsets && result.holds; ++xb) {
      if (!check_single(SmallSet(xb))) result.holds = false;
      for (std::uint64_t yb = xb; yb < subsets && result.holds; ++yb) {
        if (!check_pair(SmallSet(xb), SmallSet(yb))) result.holds = false;
      }
    }
    return result;
  }

  result.sampled = true;
  std::mt19937_64 rng(opts.seed);
  const std::uint64_t mask = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  // Deterministic corners first: empty, full, singletons and their pairs.
  std::vector<SmallSet> corners{SmallSet{}, SmallSet(mask)};
  for (int i = 0; i < k; ++i) corners.push_back(SmallSet::single(i));
  for (const SmallSet& x : corners) {
    if (!check_single(x)) result.holds = false;
    for (const SmallSet& y : corners) {
      if (!check_pair(x, y)) result.holds = false;
    }
    if (!result.holds) return result;
  }
  for (std::uint64_t i = 0; i < opts.samples && result.holds; ++i) {
    const SmallSet x(rng() & mask), y(rng() & mask);
    if (!check_single(x) || !check_single(y) || !check_pair(x, y)) result.holds = false;
  }
  return result;
}

bool is_closed_basis(const Quantale& q, const Spectrum& spectrum) {
  if (spectrum.owner != q.fingerprint()) {
    throw Error(ErrorCode::MixedQuantales, "spectrum belongs to a different quantale");
  }
  // The subbasic family is a basis of closed sets exactly when it is closed
  // under finite unions, and the only candidate witness for the union of two
  // up-sets is the up-set of the meet ideal: up(I) | up(J) always sits
  // inside up(meet(I, J)), so demand equality for every pair.
  const std::vector<Ideal> ideals = all_ideals(q);
  for (size_t a = 0; a < ideals.size(); ++a) {
    const SmallSet ua = points_containing(spectrum, ideals[a].carrier());
    for (size_t b = a; b < ideals.size(); ++b) {
      const SmallSet ub = points_containing(spectrum, ideals[b].carrier());
      const SmallSet umeet =
          points_containing(spectrum, ideals[a].carrier() & ideals[b].carrier());
      if (umeet != (ua | ub)) return false;
    }
  }
  return true;
}

bool is_T0(const SubbasisTopology& t) {
  for (int p = 0; p < t.point_count(); ++p) {
    for (int r = p + 1; r < t.point_count(); ++r) {
      if (t.point_closure(p) == t.point_closure(r)) return false;
    }
  }
  return true;
}

bool is_T1(const SubbasisTopology& t) {
  for (int p = 0; p < t.point_count(); ++p) {
    if (t.point_closure(p) != SmallSet::single(p)) return false;
  }
  return true;
}

bool is_irreducible(const SubbasisTopology& t, SmallSet c) {
  if (!t.is_closed(c)) {
    throw Error(ErrorCode::NotClosed, "irreducibility is only defined for closed sets");
  }
  if (c.empty()) return false;

  std::vector<SmallSet> proper_closed;
  for (const SmallSet& d : t.closed_sets()) {
    if (d.proper_subset_of(c)) proper_closed.push_back(d);
  }
  if (proper_closed.size() <= 2048) {
    for (size_t a = 0; a < proper_closed.size(); ++a) {
      for (size_t b = a; b < proper_closed.size(); ++b) {
        if ((proper_closed[a] | proper_closed[b]) == c) return false;
      }
    }
    return true;
  }
  // Equivalent on finite spaces: c is a union of its point closures, and an
  // irreducible set cannot split into two proper closed parts, so some
  // single point closure must already be all of c.
  for (int p : c) {
    if (t.point_closure(p) == c) return true;
  }
  return false;
}

std::vector<SmallSet> irreducible_closed_sets(const SubbasisTopology& t) {
  std::vector<SmallSet> out;
  for (const SmallSet& c : t.closed_sets()) {
    if (is_irreducible(t, c)) out.push_back(c);
  }
  return out;
}

bool is_sober(const SubbasisTopology& t) {
  for (const SmallSet& c : irreducible_closed_sets(t)) {
    int generic_points = 0;
    for (int p : c) {
      if (t.point_closure(p) == c) ++generic_points;
    }
    if (generic_points != 1) return false;
  }
  return true;
}

bool sobriety_condition(const Quantale& q, const SubbasisTopology& t) {
  check_space_owner(q, t);
  const Spectrum& spectrum = t.spectrum();
  for (const SubbasicSet& b : t.subbasis()) {
    if (b.points.empty() || !is_irreducible(t, b.points)) continue;
    SmallSet meet = q.lattice().universe();
    for (int p : b.points) meet &= spectrum.points[static_cast<size_t>(p)].carrier();
    const Ideal k = Ideal::from_carrier(q, meet);
    if (spectrum.index_of(k) < 0) return false;
  }
  return true;
}

std::optional<std::vector<int>> subbasis_fip_witness(const SubbasisTopology& t) {
  // Distinct subbasic point sets, remembering one index each.
  std::vector<std::pair<SmallSet, int>> sets;
  {
    std::unordered_set<std::uint64_t> seen;
    for (size_t i = 0; i < t.subbasis().size(); ++i) {
      const SmallSet s = t.subbasis()[i].points;
      if (seen.insert(s.bits()).second) sets.emplace_back(s, static_cast<int>(i));
    }
  }
  const int s = static_cast<int>(sets.size());
  if (s > 20) {
    // A family of closed sets in a finite space is finite, hence is a finite
    // subfamily of itself: the finite intersection property already forces a
    // nonempty total intersection. No witness can exist.
    return std::nullopt;
  }
  const std::uint64_t limit = std::uint64_t{1} << s;
  std::vector<std::uint64_t> inter(static_cast<size_t>(limit), t.points_universe().bits());
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const int low = std::countr_zero(mask);
    inter[mask] = inter[mask & (mask - 1)] & sets[static_cast<size_t>(low)].first.bits();
    const bool empty_total = inter[mask] == 0;
    // Finite family: the finite intersection property is equivalent to the
    // total intersection being nonempty (the family is a finite subfamily of
    // itself), so a witness would need both conditions at once.
    const bool has_fip = inter[mask] != 0;
    if (empty_total && has_fip) {
      std::vector<int> family;
      for (int b = 0; b < s; ++b) {
        if (mask & (std::uint64_t{1} << b)) family.push_back(sets[static_cast<size_t>(b)].second);
      }
      return family;
    }
  }
  return std::nullopt;
}

bool is_quasi_compact(const SubbasisTopology& t) {
  if (t.point_count() == 0) return true;  // empty space: nothing to cover
  std::vector<SmallSet> opens;
  bool enumerated = false;
  try {
    std::unordered_set<std::uint64_t> seen;
    for (const SmallSet& c : t.closed_sets()) {
      const SmallSet o = c.complement(t.point_count());
      if (seen.insert(o.bits()).second) opens.push_back(o);
    }
    enumerated = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCap) throw;
  }

  if (enumerated && opens.size() <= 16) {
    // Every covering subfamily must admit a finite subcover; hunt for one
    // greedily. (Each is already finite, so the greedy pass must succeed.)
    const std::uint64_t limit = std::uint64_t{1} << opens.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      SmallSet unioned;
      for (size_t i = 0; i < opens.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) unioned |= opens[i];
      }
      if (unioned != t.points_universe()) continue;
      SmallSet covered;
      bool progressed = true;
      while (covered != t.points_universe() && progressed) {
        progressed = false;
        int best = -1, best_gain = 0;
        for (size_t i = 0; i < opens.size(); ++i) {
          if (!(mask & (std::uint64_t{1} << i))) continue;
          const int gain = (opens[i] - covered).count();
          if (gain > best_gain) {
            best_gain = gain;
            best = static_cast<int>(i);
          }
        }
        if (best >= 0) {
          covered |= opens[static_cast<size_t>(best)];
          progressed = true;
        }
      }
      if (covered != t.points_universe()) return false;
    }
    return true;
  }

  // Alexander-style fallback through the subbasis: quasi-compact exactly
  // when no subbasic closed family has the finite intersection property yet
  // empty total intersection.
  return !subbasis_fip_witness(t).has_value();
}

bool qc_characterization_holds(const Quantale& q, const SubbasisTopology& t) {
  check_space_owner(q, t);
  const Spectrum& spectrum = t.spectrum();
  const bool lhs = is_quasi_compact(t);

  std::vector<Ideal> maximal_points;
  for (const Ideal& p : spectrum.points) {
    bool dominated = false;
    for (const Ideal& r : spectrum.points) {
      if (r != p && p.carrier().proper_subset_of(r.carrier())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal_points.push_back(p);
  }

  bool dominates = true;
  for (const Ideal& p : spectrum.points) {
    bool found = false;
    for (const Ideal& m : maximal_points) {
      if (p.carrier().subset_of(m.carrier())) {
        found = true;
        break;
      }
    }
    if (!found) {
      dominates = false;
      break;
    }
  }

  const Spectrum max_subspace = custom_spectrum(q, maximal_points);
  const bool rhs = dominates && is_quasi_compact(SubbasisTopology::build(q, max_subspace));
  return lhs == rhs;
}

bool is_spectral(const SubbasisTopology& t) {
  if (!is_quasi_compact(t) || !is_T0(t) || !is_sober(t)) return false;

  std::vector<SmallSet> opens;
  {
    std::unordered_set<std::uint64_t> seen;
    for (const SmallSet& c : t.closed_sets()) {
      const SmallSet o = c.complement(t.point_count());
      if (seen.insert(o.bits()).second) opens.push_back(o);
    }
  }
  if (opens.size() > 4096) {
    throw Error(ErrorCode::SizeCap, "open lattice too large to certify spectrality");
  }

  // Quasi-compact opens, each certified on its own subspace.
  std::unordered_set<std::uint64_t> qc_open_bits;
  std::vector<SmallSet> qc_opens;
  for (const SmallSet& o : opens) {
    std::vector<int> local_of(static_cast<size_t>(t.point_count()), -1);
    int locals = 0;
    for (int p : o) local_of[static_cast<size_t>(p)] = locals++;
    std::vector<SmallSet> restricted;
    restricted.reserve(t.subbasis().size());
    for (const SubbasicSet& b : t.subbasis()) {
      SmallSet r;
      for (int p : b.points & o) r.insert(local_of[static_cast<size_t>(p)]);
      restricted.push_back(r);
    }
    if (is_quasi_compact(SubbasisTopology::from_point_sets(locals, std::move(restricted)))) {
      qc_open_bits.insert(o.bits());
      qc_opens.push_back(o);
    }
  }

  // They must form a basis of opens closed under finite intersections.
  if (!qc_open_bits.contains(t.points_universe().bits())) return false;
  for (const SmallSet& o : opens) {
    SmallSet from_basis;
    for (const SmallSet& b : qc_opens) {
      if (b.subset_of(o)) from_basis |= b;
    }
    if (from_basis != o) return false;
  }
  for (size_t a = 0; a < qc_opens.size(); ++a) {
    for (size_t b = a; b < qc_opens.size(); ++b) {
      if (!qc_open_bits.contains((qc_opens[a] & qc_opens[b]).bits())) return false;
    }
  }
  return true;
}

bool is_connected(const SubbasisTopology& t) {
  const int m = t.point_count();
  if (m == 0) return true;  // empty space: connected by convention
  // Two points sharing a specialization edge lie in every clopen set
  // together, and each component of this graph is clopen, so connectivity
  // of the graph decides connectivity of the space.
  std::vector<int> root(static_cast<size_t>(m));
  for (int p = 0; p < m; ++p) root[static_cast<size_t>(p)] = p;
  auto find = [&](int x) {
    while (root[static_cast<size_t>(x)] != x) {
      root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
      x = root[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int p = 0; p < m; ++p) {
    for (int r : t.point_closure(p)) {
      root[static_cast<size_t>(find(p))] = find(r);
    }
  }
  int components = 0;
  for (int p = 0; p < m; ++p) {
    if (find(p) == p) ++components;
  }
  return components <= 1;
}

std::optional<DisconnectionWitness> strong_disconnection(const SubbasisTopology& t,
                                                         DisconnectionMode mode) {
  const SmallSet universe = t.points_universe();
  const auto& sub = t.subbasis();

  if (mode == DisconnectionMode::Pair) {
    for (size_t a = 0; a < sub.size(); ++a) {
      if (sub[a].points.empty()) continue;
      for (size_t b = a + 1; b < sub.size(); ++b) {
        if (sub[b].points.empty()) continue;
        if (sub[a].points.intersects(sub[b].points)) continue;
        if ((sub[a].points | sub[b].points) != universe) continue;
        DisconnectionWitness w;
        w.mode = DisconnectionMode::Pair;
        w.left = sub[a].witness;
        w.right = sub[b].witness;
        w.left_points = sub[a].points;
        w.right_points = sub[b].points;
        return w;
      }
    }
    return std::nullopt;
  }

  // Family mode: two disjoint subfamilies of the nonempty subbasic sets.
  // (A shared member would have to be the empty set, which contributes
  // nothing, so disjointness loses no witnesses.)
  std::vector<int> candidates;
  for (size_t i = 0; i < sub.size(); ++i) {
    if (!sub[i].points.empty()) candidates.push_back(static_cast<int>(i));
  }
  const int s = static_cast<int>(candidates.size());
  if (s > 12) {
    throw Error(ErrorCode::SizeCap,
                "family disconnection search over " + std::to_string(s) + " subbasic sets");
  }
  const std::uint32_t limit = std::uint32_t{1} << s;
  for (std::uint32_t am = 1; am < limit; ++am) {
    SmallSet left;
    for (int i = 0; i < s; ++i) {
      if (am & (1u << i)) left |= sub[static_cast<size_t>(candidates[static_cast<size_t>(i)])].points;
    }
    if (left.empty()) continue;
    const std::uint32_t rest = (limit - 1) & ~am;
    // Enumerate subsets of the complement mask.
    for (std::uint32_t bm = rest; bm != 0; bm = (bm - 1) & rest) {
      SmallSet right;
      for (int i = 0; i < s; ++i) {
        if (bm & (1u << i)) {
          right |= sub[static_cast<size_t>(candidates[static_cast<size_t>(i)])].points;
        }
      }
      if (right.empty() || left.intersects(right)) continue;
      if ((left | right) != universe) continue;
      DisconnectionWitness w;
      w.mode = DisconnectionMode::Family;
      for (int i = 0; i < s; ++i) {
        if (am & (1u << i)) w.left_family.push_back(candidates[static_cast<size_t>(i)]);
        if (bm & (1u << i)) w.right_family.push_back(candidates[static_cast<size_t>(i)]);
      }
      w.left_points = left;
      w.right_points = right;
      return w;
    }
  }
  return std::nullopt;
}

int extract_idempotent(const Quantale& q, const SubbasisTopology& t,
                       const DisconnectionWitness& witness) {
  check_space_owner(q, t);
  if (witness.mode != DisconnectionMode::Pair || !witness.left || !witness.right) {
    throw Error(ErrorCode::InvalidInput,
                "idempotent extraction needs a pair-mode witness with both ideals");
  }
  if (q.size() < 2) {
    throw Error(ErrorCode::PreconditionViolated,
                "the one-element quantale has no proper ideals to disconnect");
  }
  const Ideal radical = jacobson_radical(q);
  if (radical != zero_ideal(q)) {
    throw Error(ErrorCode::PreconditionViolated,
                "Jacobson radical is the ideal generated by \"" +
                    q.lattice().label(radical.generator()) + "\", not the zero ideal",
                {radical.generator()});
  }
  const Spectrum& spectrum = t.spectrum();
  for (const Ideal& m : qtl::spectrum(q, IdealClass::Maximal).points) {
    if (spectrum.index_of(m) < 0) {
      throw Error(ErrorCode::PreconditionViolated,
                  "maximal ideal generated by \"" + q.lattice().label(m.generator()) +
                      "\" is not a point of the spectrum",
                  {m.generator()});
    }
  }

  const Ideal& left = *witness.left;
  const Ideal& right = *witness.right;
  const Ideal both[] = {left, right};
  // Replay the witnessed split, then the facts the construction rests on.
  const SmallSet lp = up_set(q, spectrum, std::span<const Ideal>(&both[0], 1));
  const SmallSet rp = up_set(q, spectrum, std::span<const Ideal>(&both[1], 1));
  if (lp.empty() || rp.empty() || lp.intersects(rp) ||
      (lp | rp) != t.points_universe()) {
    throw Error(ErrorCode::InvalidInput, "witness pair does not disconnect the spectrum",
                {left.generator(), right.generator()});
  }
  if (ideal_join(q, both) != whole_ideal(q)) {
    throw Error(ErrorCode::LogicError, "disconnection pair does not join to the whole quantale",
                {left.generator(), right.generator()});
  }
  if (ideal_product(q, left, right) != zero_ideal(q)) {
    throw Error(ErrorCode::LogicError, "disconnection pair product is not the zero ideal",
                {left.generator(), right.generator()});
  }

  for (int x : left.carrier()) {
    if (x == q.bottom()) continue;
    for (int y : right.carrier()) {
      if (y == q.bottom()) continue;
      if (q.lattice().join(x, y) != q.top()) continue;
      // x = x * (x v y) = x^2 v (x * y) = x^2, and x * y lands in the zero
      // product, so x is idempotent; it is nonzero by choice and below a
      // proper ideal, hence not top.
      if (q.mul(x, x) != x) {
        throw Error(ErrorCode::LogicError, "unit pair failed to produce an idempotent", {x, y});
      }
      if (x == q.bottom() || x == q.top()) {
        throw Error(ErrorCode::LogicError, "extracted idempotent is trivial", {x});
      }
      return x;
    }
  }
  throw Error(ErrorCode::NoUnitPair,
              "no nonzero pair across the disconnection joins to the top",
              {left.generator(), right.generator()});
}

}  // namespace qtl
