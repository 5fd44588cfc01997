#include "qtl/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace qtl {
namespace {

/// Deterministic topological order of the closed relation: repeatedly place
/// the lowest-index element whose strict predecessors are all placed. Bottom
/// lands first and top last. Running it on an already-sorted carrier yields
/// the identity, so serialized lattices reload with stable indices.
std::vector<int> topo_order(int n, const std::vector<SmallSet>& down) {
  std::vector<int> order;
  order.reserve(n);
  SmallSet placed;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int x = 0; x < n; ++x) {
      if (placed.contains(x)) continue;
      SmallSet strict_below = down[x];
      strict_below.erase(x);
      if (strict_below.subset_of(placed)) {
        pick = x;
        break;
      }
    }
    if (pick < 0) return {};  // cycle; caller reports NotAPartialOrder
    placed.insert(pick);
    order.push_back(pick);
  }
  return order;
}

}  // namespace

Lattice::Build Lattice::build_with_perm(std::vector<std::string> labels,
                                        const std::vector<std::pair<int, int>>& leq_pairs,
                                        int size_cap) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw Error(ErrorCode::EmptyCarrier, "a lattice needs at least one element");
  if (size_cap > kMaxCarrier) size_cap = kMaxCarrier;
  if (n > size_cap) {
    throw Error(ErrorCode::SizeCap, "carrier of size " + std::to_string(n) +
                                        " exceeds the cap of " + std::to_string(size_cap));
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorCode::InvalidInput, "duplicate element label \"" + l + "\"");
      }
    }
  }

  // Reflexive-transitive closure of the supplied pairs, as upset masks.
  std::vector<SmallSet> up(n);
  for (int x = 0; x < n; ++x) up[x].insert(x);
  for (auto [i, j] : leq_pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw Error(ErrorCode::InvalidInput,
                  "order pair (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") outside carrier of size " + std::to_string(n),
                  {i, j});
    }
    up[i].insert(j);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      SmallSet reach = up[x];
      for (int y : up[x]) reach |= up[y];
      if (reach != up[x]) {
        up[x] = reach;
        changed = true;
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    for (int y : up[x]) {
      if (y != x && up[y].contains(x)) {
        throw Error(ErrorCode::NotAPartialOrder,
                    "elements \"" + labels[x] + "\" and \"" + labels[y] +
                        "\" are below each other",
                    {x, y});
      }
    }
  }

  std::vector<SmallSet> down(n);
  for (int x = 0; x < n; ++x)
    for (int y : up[x]) down[y].insert(x);

  std::vector<int> order = topo_order(n, down);
  if (order.empty()) {
    throw Error(ErrorCode::LogicError, "topological sort failed on an acyclic relation");
  }

  Build out;
  Lattice& lat = out.lattice;
  lat.n_ = n;
  out.perm.assign(n, -1);
  for (int pos = 0; pos < n; ++pos) out.perm[order[pos]] = pos;

  lat.labels_.resize(n);
  lat.up_.assign(n, SmallSet{});
  lat.down_.assign(n, SmallSet{});
  for (int x = 0; x < n; ++x) {
    lat.labels_[out.perm[x]] = std::move(labels[x]);
    for (int y : up[x]) lat.up_[out.perm[x]].insert(out.perm[y]);
    for (int y : down[x]) lat.down_[out.perm[x]].insert(out.perm[y]);
  }

  lat.compute_tables();
  lat.verify_lattice_identities();
  return out;
}

Lattice Lattice::build(std::vector<std::string> labels,
                       const std::vector<std::pair<int, int>>& leq_pairs, int size_cap) {
  return build_with_perm(std::move(labels), leq_pairs, size_cap).lattice;
}

void Lattice::compute_tables() {
  const int n = n_;
  join_.assign(static_cast<size_t>(n) * n, 0);
  meet_.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      // Least upper bound: the unique minimal element of upset(x) & upset(y).
      SmallSet ub = up_[x] & up_[y];
      int lub = -1;
      for (int c : ub) {
        if ((down_[c] & ub) == SmallSet::single(c)) {
          if (lub >= 0) {
            throw Error(ErrorCode::NotALattice,
                        "\"" + labels_[x] + "\" and \"" + labels_[y] +
                            "\" have no least upper bound",
                        {x, y});
          }
          lub = c;
        }
      }
      SmallSet lb = down_[x] & down_[y];
      int glb = -1;
      for (int c : lb) {
        if ((up_[c] & lb) == SmallSet::single(c)) {
          if (glb >= 0) {
            throw Error(ErrorCode::NotALattice,
                        "\"" + labels_[x] + "\" and \"" + labels_[y] +
                            "\" have no greatest lower bound",
                        {x, y});
          }
          glb = c;
        }
      }
      if (lub < 0 || glb < 0) {
        // upset/downset intersections are nonempty only in bounded orders.
        throw Error(ErrorCode::NotALattice,
                    "\"" + labels_[x] + "\" and \"" + labels_[y] +
                        "\" have no common " + (lub < 0 ? "upper" : "lower") + " bound",
                    {x, y});
      }
      join_[static_cast<size_t>(x) * n + y] = join_[static_cast<size_t>(y) * n + x] =
          static_cast<std::uint8_t>(lub);
      meet_[static_cast<size_t>(x) * n + y] = meet_[static_cast<size_t>(y) * n + x] =
          static_cast<std::uint8_t>(glb);
    }
  }

  // The canonical order puts bottom at 0 and top at n-1; make sure.
  if (meet_set(universe()) != 0 || join_set(universe()) != n - 1) {
    throw Error(ErrorCode::LogicError, "canonical order does not start at bottom");
  }
}

void Lattice::verify_lattice_identities() const {
  const int n = n_;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (join(x, y) != join(y, x) || meet(x, y) != meet(y, x)) {
        throw Error(ErrorCode::LogicError, "join/meet tables are not commutative", {x, y});
      }
      if (join(x, meet(x, y)) != x || meet(x, join(x, y)) != x) {
        throw Error(ErrorCode::LogicError, "absorption fails", {x, y});
      }
      for (int z = 0; z < n; ++z) {
        if (join(join(x, y), z) != join(x, join(y, z)) ||
            meet(meet(x, y), z) != meet(x, meet(y, z))) {
          throw Error(ErrorCode::LogicError, "join/meet tables are not associative", {x, y, z});
        }
      }
    }
  }
}

int Lattice::join_set(SmallSet s) const {
  int acc = bottom();
  for (int x : s) acc = join(acc, x);
  return acc;
}

int Lattice::meet_set(SmallSet s) const {
  int acc = top();
  for (int x : s) acc = meet(acc, x);
  return acc;
}

SmallSet Lattice::coatoms() const {
  SmallSet out;
  for (int x = 0; x < n_; ++x) {
    if (covers(x, top())) out.insert(x);
  }
  return out;
}

bool Lattice::covers(int x, int y) const {
  if (x == y || !leq(x, y)) return false;
  SmallSet between = up_[x] & down_[y];
  return between.count() == 2;  // exactly {x, y}
}

}  // namespace qtl
