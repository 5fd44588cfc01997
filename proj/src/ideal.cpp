#include "qtl/ideal.hpp"

#include <algorithm>

namespace qtl {
namespace {

void check_owner(const Quantale& q, const Ideal& ideal) {
  if (ideal.owner() != q.fingerprint()) {
    throw Error(ErrorCode::MixedQuantales,
                "ideal was built over a different quantale than \"" + q.name() + "\"");
  }
}

/// Close a set under binary joins, then downward. Every ideal-valued
/// operation here is defined through this shape: collect atoms of the
/// description, saturate.
SmallSet join_and_down_closure(const Quantale& q, SmallSet seed) {
  const Lattice& lat = q.lattice();
  SmallSet closed = seed;
  for (bool grew = true; grew;) {
    grew = false;
    for (int x : closed) {
      for (int y : closed) {
        const int j = lat.join(x, y);
        if (!closed.contains(j)) {
          closed.insert(j);
          grew = true;
        }
      }
    }
  }
  SmallSet down;
  for (int x : closed) down |= lat.downset(x);
  return down;
}

}  // namespace

bool is_ideal(const Quantale& q, SmallSet carrier) {
  const Lattice& lat = q.lattice();
  if (carrier.empty() || !carrier.subset_of(lat.universe())) return false;
  for (int x : carrier) {
    if (!lat.downset(x).subset_of(carrier)) return false;
    for (int y : carrier) {
      if (!carrier.contains(lat.join(x, y))) return false;
    }
  }
  return true;
}

Ideal Ideal::from_carrier(const Quantale& q, SmallSet carrier) {
  const Lattice& lat = q.lattice();
  if (carrier.empty()) {
    throw Error(ErrorCode::EmptyGeneratorSet, "an ideal cannot be empty");
  }
  if (!carrier.subset_of(lat.universe())) {
    throw Error(ErrorCode::ForeignElement, "carrier contains indices outside the quantale");
  }
  for (int x : carrier) {
    if (!lat.downset(x).subset_of(carrier)) {
      throw Error(ErrorCode::InvalidInput,
                  "subset is not downward closed at \"" + lat.label(x) + "\"", {x});
    }
    for (int y : carrier) {
      if (!carrier.contains(lat.join(x, y))) {
        throw Error(ErrorCode::InvalidInput,
                    "subset is not closed under the join of \"" + lat.label(x) + "\" and \"" +
                        lat.label(y) + "\"",
                    {x, y});
      }
    }
  }

  Ideal out;
  out.carrier_ = carrier;
  out.generator_ = lat.join_set(carrier);
  out.owner_ = q.fingerprint();
  // Finite principality: the carrier must be exactly the downset of its
  // join. This is a theorem, not an assumption, so confirm it.
  if (lat.downset(out.generator_) != carrier) {
    throw Error(ErrorCode::LogicError, "ideal carrier is not the downset of its join",
                {out.generator_});
  }
  return out;
}

Ideal Ideal::principal(const Quantale& q, int x) {
  return from_carrier(q, q.lattice().downset(x));
}

Ideal generated_ideal(const Quantale& q, SmallSet gens) {
  if (gens.empty()) {
    throw Error(ErrorCode::EmptyGeneratorSet, "generated ideal needs at least one generator");
  }
  if (!gens.subset_of(q.lattice().universe())) {
    throw Error(ErrorCode::ForeignElement, "generator outside the quantale");
  }
  SmallSet products;
  for (int a = 0; a < q.size(); ++a) {
    for (int s : gens) products.insert(q.mul(a, s));
  }
  Ideal out = Ideal::from_carrier(q, join_and_down_closure(q, products));
  // Since top is the unit, the products include the generators themselves,
  // and the result collapses to the principal ideal on their join.
  if (out.generator() != q.lattice().join_set(gens)) {
    throw Error(ErrorCode::LogicError, "generated ideal disagrees with the principal shortcut");
  }
  return out;
}

Ideal ideal_join(const Quantale& q, std::span<const Ideal> ideals) {
  SmallSet unioned;
  for (const Ideal& i : ideals) {
    check_owner(q, i);
    unioned |= i.carrier();
  }
  unioned.insert(q.bottom());  // empty family joins to the zero ideal
  return Ideal::from_carrier(q, join_and_down_closure(q, unioned));
}

Ideal ideal_meet(const Quantale& q, std::span<const Ideal> ideals) {
  SmallSet common = q.lattice().universe();
  for (const Ideal& i : ideals) {
    check_owner(q, i);
    common &= i.carrier();
  }
  return Ideal::from_carrier(q, common);
}

Ideal ideal_product(const Quantale& q, const Ideal& a, const Ideal& b) {
  check_owner(q, a);
  check_owner(q, b);
  SmallSet products;
  for (int x : a.carrier()) {
    for (int y : b.carrier()) products.insert(q.mul(x, y));
  }
  return Ideal::from_carrier(q, join_and_down_closure(q, products));
}

Ideal zero_ideal(const Quantale& q) { return Ideal::principal(q, q.bottom()); }
Ideal whole_ideal(const Quantale& q) { return Ideal::principal(q, q.top()); }

std::vector<Ideal> all_ideals(const Quantale& q) {
  std::vector<Ideal> out;
  out.reserve(q.size());
  for (int x = 0; x < q.size(); ++x) out.push_back(Ideal::principal(q, x));
  return out;
}

IdealClassification classify(const Quantale& q, const Ideal& ideal) {
  check_owner(q, ideal);
  const Lattice& lat = q.lattice();
  const SmallSet car = ideal.carrier();
  IdealClassification flags;

  flags.proper = car != lat.universe();
  if (!flags.proper) return flags;  // the whole quantale: everything false by convention

  const std::vector<Ideal> ideals = all_ideals(q);
  const Ideal zero = zero_ideal(q);

  flags.maximal = true;
  for (const Ideal& j : ideals) {
    if (car.proper_subset_of(j.carrier()) && j.carrier() != lat.universe()) {
      flags.maximal = false;
      break;
    }
  }

  flags.minimal = ideal != zero;
  if (flags.minimal) {
    for (const Ideal& j : ideals) {
      if (j != zero && j.carrier().proper_subset_of(car)) {
        flags.minimal = false;
        break;
      }
    }
  }

  flags.prime = true;
  for (int x = 0; x < q.size() && flags.prime; ++x) {
    for (int y = 0; y < q.size(); ++y) {
      if (car.contains(q.mul(x, y)) && !car.contains(x) && !car.contains(y)) {
        flags.prime = false;
        break;
      }
    }
  }

  flags.minimal_prime = flags.minimal && flags.prime;

  flags.primary = true;
  for (int x = 0; x < q.size() && flags.primary; ++x) {
    for (int y = 0; y < q.size(); ++y) {
      if (car.contains(q.mul(x, y)) && !car.contains(x) &&
          !q.power_closure(y).intersects(car)) {
        flags.primary = false;
        break;
      }
    }
  }

  flags.irreducible = true;
  for (const Ideal& j : ideals) {
    if (!flags.irreducible) break;
    for (const Ideal& k : ideals) {
      if ((j.carrier() & k.carrier()) == car && j != ideal && k != ideal) {
        flags.irreducible = false;
        break;
      }
    }
  }

  flags.strongly_irreducible = true;
  for (const Ideal& j : ideals) {
    if (!flags.strongly_irreducible) break;
    for (const Ideal& k : ideals) {
      if ((j.carrier() & k.carrier()).subset_of(car) && !j.carrier().subset_of(car) &&
          !k.carrier().subset_of(car)) {
        flags.strongly_irreducible = false;
        break;
      }
    }
  }

  return flags;
}

Ideal jacobson_radical(const Quantale& q) {
  std::vector<Ideal> maximal;
  for (const Ideal& i : all_ideals(q)) {
    if (classify(q, i).maximal) maximal.push_back(i);
  }
  if (maximal.empty()) {
    throw Error(ErrorCode::NoProperIdeals,
                "\"" + q.name() + "\" has no maximal ideals to intersect");
  }
  return ideal_meet(q, maximal);
}

const char* ideal_class_name(IdealClass c) {
  switch (c) {
    case IdealClass::Proper: return "proper";
    case IdealClass::Maximal: return "maximal";
    case IdealClass::Prime: return "prime";
    case IdealClass::MinimalPrime: return "minimal_prime";
    case IdealClass::Primary: return "primary";
    case IdealClass::Irreducible: return "irreducible";
    case IdealClass::StronglyIrreducible: return "strongly_irreducible";
  }
  return "?";
}

IdealClass ideal_class_from_name(const std::string& name) {
  for (IdealClass c :
       {IdealClass::Proper, IdealClass::Maximal, IdealClass::Prime, IdealClass::MinimalPrime,
        IdealClass::Primary, IdealClass::Irreducible, IdealClass::StronglyIrreducible}) {
    if (name == ideal_class_name(c)) return c;
  }
  throw Error(ErrorCode::InvalidInput, "unknown ideal class \"" + name + "\"");
}

bool classification_has(const IdealClassification& flags, IdealClass c) {
  switch (c) {
    case IdealClass::Proper: return flags.proper;
    case IdealClass::Maximal: return flags.maximal;
    case IdealClass::Prime: return flags.prime;
    case IdealClass::MinimalPrime: return flags.minimal_prime;
    case IdealClass::Primary: return flags.primary;
    case IdealClass::Irreducible: return flags.irreducible;
    case IdealClass::StronglyIrreducible: return flags.strongly_irreducible;
  }
  return false;
}

int Spectrum::index_of(const Ideal& p) const {
  for (int i = 0; i < size(); ++i) {
    if (points[static_cast<size_t>(i)] == p) return i;
  }
  return -1;
}

Spectrum spectrum(const Quantale& q, IdealClass c) {
  Spectrum out;
  out.selector = ideal_class_name(c);
  out.owner = q.fingerprint();
  for (const Ideal& i : all_ideals(q)) {
    if (classification_has(classify(q, i), c)) out.points.push_back(i);
  }
  return out;
}

Spectrum custom_spectrum(const Quantale& q, std::vector<Ideal> points, bool include_zero) {
  Spectrum out;
  out.selector = include_zero ? "zero-plus-custom" : "custom";
  out.owner = q.fingerprint();
  if (include_zero) points.push_back(zero_ideal(q));
  for (const Ideal& p : points) {
    check_owner(q, p);
    if (p.carrier() == q.lattice().universe()) {
      throw Error(ErrorCode::ImproperPoint,
                  "the whole quantale cannot be a point of a spectrum", {p.generator()});
    }
  }
  std::sort(points.begin(), points.end(),
            [](const Ideal& a, const Ideal& b) { return a.generator() < b.generator(); });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  out.points = std::move(points);
  return out;
}

}  // namespace qtl
