#include "qtl/hom.hpp"

#include <algorithm>
#include <unordered_set>

namespace qtl {
namespace {

void check_shape(const Quantale& source, const Quantale& target, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.size()) {
    throw Error(ErrorCode::InvalidInput,
                "map has " + std::to_string(map.size()) + " entries for a source of size " +
                    std::to_string(source.size()));
  }
  for (size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 0 || map[i] >= target.size()) {
      throw Error(ErrorCode::InvalidInput,
                  "map entry " + std::to_string(map[i]) + " at index " + std::to_string(i) +
                      " is outside the target carrier",
                  {static_cast<int>(i)});
    }
  }
}

}  // namespace

QuantaleHom::QuantaleHom(Quantale source, Quantale target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

QuantaleHom QuantaleHom::build(Quantale source, Quantale target, std::vector<int> map) {
  check_shape(source, target, map);
  const Lattice& s = source.lattice();
  const Lattice& t = target.lattice();
  auto f = [&](int x) { return map[static_cast<size_t>(x)]; };

  if (f(source.bottom()) != target.bottom()) {
    throw Error(ErrorCode::BottomNotPreserved,
                "bottom maps to \"" + t.label(f(source.bottom())) + "\"");
  }
  for (int x = 0; x < source.size(); ++x) {
    for (int y = 0; y < source.size(); ++y) {
      if (s.leq(x, y) && !t.leq(f(x), f(y))) {
        throw Error(ErrorCode::HomAxiomViolation,
                    "monotonicity fails at \"" + s.label(x) + "\" <= \"" + s.label(y) + "\"",
                    {x, y});
      }
    }
  }
  for (int x = 0; x < source.size(); ++x) {
    for (int y = x; y < source.size(); ++y) {
      if (f(s.join(x, y)) != t.join(f(x), f(y))) {
        throw Error(ErrorCode::HomAxiomViolation,
                    "join of \"" + s.label(x) + "\" and \"" + s.label(y) + "\" is not preserved",
                    {x, y});
      }
      if (f(s.meet(x, y)) != t.meet(f(x), f(y))) {
        throw Error(ErrorCode::HomAxiomViolation,
                    "meet of \"" + s.label(x) + "\" and \"" + s.label(y) + "\" is not preserved",
                    {x, y});
      }
      if (f(source.mul(x, y)) != target.mul(f(x), f(y))) {
        throw Error(ErrorCode::HomAxiomViolation,
                    "product of \"" + s.label(x) + "\" and \"" + s.label(y) +
                        "\" is not preserved",
                    {x, y});
      }
    }
  }
  return QuantaleHom(std::move(source), std::move(target), std::move(map));
}

int QuantaleHom::apply(int x) const {
  if (x < 0 || x >= source_.size()) {
    throw Error(ErrorCode::ForeignElement, "element " + std::to_string(x) + " outside the source");
  }
  return map_[static_cast<size_t>(x)];
}

SmallSet QuantaleHom::image() const {
  SmallSet out;
  for (int v : map_) out.insert(v);
  return out;
}

bool QuantaleHom::is_injective() const {
  return image().count() == source_.size();
}

bool QuantaleHom::is_surjective() const {
  return image().count() == target_.size();
}

Ideal QuantaleHom::kernel() const {
  SmallSet carrier;
  for (int x = 0; x < source_.size(); ++x) {
    if (map_[static_cast<size_t>(x)] == target_.bottom()) carrier.insert(x);
  }
  return Ideal::from_carrier(source_, carrier);
}

Ideal QuantaleHom::contract(const Ideal& target_ideal) const {
  if (target_ideal.owner() != target_.fingerprint()) {
    throw Error(ErrorCode::MixedQuantales, "contracted ideal lives in a different quantale");
  }
  SmallSet carrier;
  for (int x = 0; x < source_.size(); ++x) {
    if (target_ideal.contains(map_[static_cast<size_t>(x)])) carrier.insert(x);
  }
  return Ideal::from_carrier(source_, carrier);
}

bool hom_axioms_ok(const Quantale& source, const Quantale& target, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.size()) return false;
  for (int v : map) {
    if (v < 0 || v >= target.size()) return false;
  }
  auto f = [&](int x) { return map[static_cast<size_t>(x)]; };
  if (f(source.bottom()) != target.bottom()) return false;
  const Lattice& s = source.lattice();
  const Lattice& t = target.lattice();
  for (int x = 0; x < source.size(); ++x) {
    for (int y = x; y < source.size(); ++y) {
      if (f(s.join(x, y)) != t.join(f(x), f(y))) return false;
      if (f(s.meet(x, y)) != t.meet(f(x), f(y))) return false;
      if (f(source.mul(x, y)) != target.mul(f(x), f(y))) return false;
    }
  }
  return true;
}

std::vector<QuantaleHom> enumerate_homs(const Quantale& source, const Quantale& target,
                                        std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < source.size(); ++i) {
    if (total > budget / static_cast<std::uint64_t>(target.size())) {
      throw Error(ErrorCode::SizeCap, "homomorphism search space exceeds the budget");
    }
    total *= static_cast<std::uint64_t>(target.size());
  }

  std::vector<QuantaleHom> out;
  std::vector<int> map(static_cast<size_t>(source.size()), 0);
  while (true) {
    if (hom_axioms_ok(source, target, map)) {
      out.push_back(QuantaleHom::build(source, target, map));
    }
    int i = source.size() - 1;
    while (i >= 0 && map[static_cast<size_t>(i)] == target.size() - 1) {
      map[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++map[static_cast<size_t>(i)];
  }
  return out;
}

bool has_contraction_property(IdealClass cls, const QuantaleHom& hom) {
  for (const Ideal& p : spectrum(hom.target(), cls).points) {
    if (!classification_has(classify(hom.source(), hom.contract(p)), cls)) return false;
  }
  return true;
}

InducedMap induced_map(const QuantaleHom& hom, const Spectrum& source_spectrum,
                       const Spectrum& target_spectrum, bool allow_mismatched_selectors) {
  if (source_spectrum.owner != hom.source().fingerprint()) {
    throw Error(ErrorCode::MixedQuantales, "source spectrum belongs to a different quantale");
  }
  if (target_spectrum.owner != hom.target().fingerprint()) {
    throw Error(ErrorCode::MixedQuantales, "target spectrum belongs to a different quantale");
  }
  if (!allow_mismatched_selectors && source_spectrum.selector != target_spectrum.selector) {
    throw Error(ErrorCode::InvalidInput,
                "spectra use selectors \"" + source_spectrum.selector + "\" and \"" +
                    target_spectrum.selector + "\"; pass the explicit flag to mix them");
  }
  InducedMap out;
  out.point_map.reserve(target_spectrum.points.size());
  for (const Ideal& p : target_spectrum.points) {
    const Ideal pulled = hom.contract(p);
    const int idx = source_spectrum.index_of(pulled);
    if (idx < 0) {
      throw Error(ErrorCode::ContractionEscapes,
                  "contraction of the point generated by \"" +
                      hom.target().lattice().label(p.generator()) +
                      "\" is not a point of the source spectrum",
                  {p.generator()});
    }
    out.point_map.push_back(idx);
  }
  return out;
}

bool is_continuous(const QuantaleHom& hom, const SubbasisTopology& source_space,
                   const SubbasisTopology& target_space) {
  const InducedMap f = induced_map(hom, source_space.spectrum(), target_space.spectrum());
  for (const SmallSet& closed : source_space.closed_sets()) {
    SmallSet preimage;
    for (int p = 0; p < target_space.point_count(); ++p) {
      if (closed.contains(f.point_map[static_cast<size_t>(p)])) preimage.insert(p);
    }
    if (!target_space.is_closed(preimage)) return false;
  }
  return true;
}

bool continuity_identity_holds(const QuantaleHom& hom, const Spectrum& source_spectrum,
                               const Spectrum& target_spectrum) {
  const InducedMap f = induced_map(hom, source_spectrum, target_spectrum);
  for (const Ideal& i : all_ideals(hom.source())) {
    const Ideal one[] = {i};
    const SmallSet upstream = up_set(hom.source(), source_spectrum, one);
    SmallSet preimage;
    for (size_t p = 0; p < f.point_map.size(); ++p) {
      if (upstream.contains(f.point_map[p])) preimage.insert(static_cast<int>(p));
    }
    SmallSet pushed;
    for (int x : i.carrier()) pushed.insert(hom.apply(x));
    const Ideal generated[] = {generated_ideal(hom.target(), pushed)};
    if (preimage != up_set(hom.target(), target_spectrum, generated)) return false;
  }
  return true;
}

bool homeo_onto_kernel_upset(const QuantaleHom& hom, const SubbasisTopology& source_space,
                             const SubbasisTopology& target_space) {
  if (!hom.is_surjective()) {
    throw Error(ErrorCode::NotSurjective, "kernel-upset comparison needs a surjective map");
  }
  const Spectrum& source_spectrum = source_space.spectrum();
  const InducedMap f = induced_map(hom, source_spectrum, target_space.spectrum());

  SmallSet hit;
  for (int idx : f.point_map) hit.insert(idx);
  if (static_cast<int>(f.point_map.size()) != hit.count()) return false;

  const Ideal ker[] = {hom.kernel()};
  const SmallSet above_kernel = up_set(hom.source(), source_spectrum, ker);
  if (hit != above_kernel) return false;

  std::unordered_set<std::uint64_t> subspace_closed;
  for (const SmallSet& c : source_space.closed_sets()) {
    subspace_closed.insert((c & above_kernel).bits());
  }
  for (const SmallSet& c : target_space.closed_sets()) {
    SmallSet image;
    for (int p : c) image.insert(f.point_map[static_cast<size_t>(p)]);
    if (!subspace_closed.contains(image.bits())) return false;
  }
  return true;
}

bool induced_image_dense(const QuantaleHom& hom, const SubbasisTopology& source_space,
                         const Spectrum& target_spectrum) {
  const InducedMap f = induced_map(hom, source_space.spectrum(), target_spectrum);
  SmallSet image;
  for (int idx : f.point_map) image.insert(idx);
  return source_space.closure(image) == source_space.points_universe();
}

bool density_criterion(const QuantaleHom& hom, const Spectrum& source_spectrum) {
  if (source_spectrum.owner != hom.source().fingerprint()) {
    throw Error(ErrorCode::MixedQuantales, "source spectrum belongs to a different quantale");
  }
  if (source_spectrum.points.empty()) {
    throw Error(ErrorCode::EmptySpectrum, "no points to meet in the source spectrum");
  }
  SmallSet meet = hom.source().lattice().universe();
  for (const Ideal& p : source_spectrum.points) meet &= p.carrier();
  return hom.kernel().carrier().subset_of(meet);
}

bool saturated_above_kernel(const QuantaleHom& hom) {
  const Ideal ker = hom.kernel();
  for (const Ideal& j : all_ideals(hom.source())) {
    if (!ker.carrier().subset_of(j.carrier())) continue;
    SmallSet pushed;
    for (int x : j.carrier()) pushed.insert(hom.apply(x));
    const Ideal round_trip = hom.contract(generated_ideal(hom.target(), pushed));
    if (round_trip.carrier() != j.carrier()) return false;
  }
  return true;
}

bool closure_image_identity_holds(const QuantaleHom& hom, const SubbasisTopology& source_space,
                                  const Spectrum& target_spectrum) {
  const Spectrum& source_spectrum = source_space.spectrum();
  const InducedMap f = induced_map(hom, source_spectrum, target_spectrum);
  for (const Ideal& i : all_ideals(hom.target())) {
    const Ideal one[] = {i};
    const SmallSet downstream = up_set(hom.target(), target_spectrum, one);
    SmallSet image;
    for (int p : downstream) image.insert(f.point_map[static_cast<size_t>(p)]);
    const Ideal pulled[] = {hom.contract(i)};
    if (source_space.closure(image) != up_set(hom.source(), source_spectrum, pulled)) return false;
  }
  return true;
}

QuantaleHom compose(const QuantaleHom& outer, const QuantaleHom& inner) {
  if (inner.target().fingerprint() != outer.source().fingerprint()) {
    throw Error(ErrorCode::MixedQuantales, "composition through mismatched middle quantales");
  }
  std::vector<int> map;
  map.reserve(inner.map().size());
  for (int v : inner.map()) map.push_back(outer.map()[static_cast<size_t>(v)]);
  return QuantaleHom::build(inner.source(), outer.target(), std::move(map));
}

}  // namespace qtl
