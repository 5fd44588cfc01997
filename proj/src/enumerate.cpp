#include "qtl/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace qtl {
namespace {

/// The search is exponential in size^2; past this the corpus is no longer
/// something a test suite should sweep.
constexpr int kEnumerationSizeCap = 6;

/// Isomorphism-class key: the lexicographically least relabeling of the
/// order matrix over all permutations of the carrier.
std::vector<std::uint8_t> lattice_key(const Lattice& lat) {
  const int n = lat.size();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  do {
    std::vector<std::uint8_t> cur(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (lat.leq(i, j)) {
          cur[static_cast<size_t>(perm[static_cast<size_t>(i)]) * n +
              perm[static_cast<size_t>(j)]] = 1;
        }
      }
    }
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::vector<int>> lattice_automorphisms(const Lattice& lat) {
  const int n = lat.size();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (lat.leq(i, j) != lat.leq(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)])) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<Lattice> all_lattices_of_size(int size) {
  if (size < 1) throw Error(ErrorCode::InvalidInput, "lattice size must be at least 1");
  if (size > kEnumerationSizeCap) {
    throw Error(ErrorCode::SizeCap, "lattice enumeration is capped at size " +
                                        std::to_string(kEnumerationSizeCap));
  }
  std::vector<std::string> labels(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) labels[static_cast<size_t>(i)] = "e" + std::to_string(i);

  if (size == 1) return {Lattice::build(labels, {})};

  // Every finite lattice admits a labeling along a linear extension with 0
  // at the bottom and size-1 at the top, so relations are only ever drawn
  // from pairs (i, j) with i < j; bottom/top comparabilities are forced and
  // only interior pairs remain free.
  std::vector<std::pair<int, int>> forced;
  for (int i = 1; i < size; ++i) forced.emplace_back(0, i);
  for (int i = 1; i + 1 < size; ++i) forced.emplace_back(i, size - 1);
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 1; i + 1 < size; ++i) {
    for (int j = i + 1; j + 1 < size; ++j) free_pairs.emplace_back(i, j);
  }

  std::vector<Lattice> out;
  std::set<std::vector<std::uint8_t>> seen;
  const std::uint64_t limit = std::uint64_t{1} << free_pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::pair<int, int>> pairs = forced;
    for (size_t b = 0; b < free_pairs.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) pairs.push_back(free_pairs[b]);
    }
    try {
      Lattice lat = Lattice::build(labels, pairs);
      if (seen.insert(lattice_key(lat)).second) out.push_back(std::move(lat));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotALattice) throw;
    }
  }
  return out;
}

void enumerate_quantales(int size, const std::function<bool(const Quantale&)>& sink,
                         const EnumerateOptions& options) {
  int emitted = 0;
  for (const Lattice& lat : all_lattices_of_size(size)) {
    const auto autos = lattice_automorphisms(lat);

    // Free cells sit strictly between bottom and top; the unit law pins the
    // top row and distributivity over the empty join pins the bottom row,
    // and each product can only land inside the down-set of the meet
    // (monotonicity in each argument squeezes it there).
    std::vector<std::pair<int, int>> cells;
    std::vector<std::vector<int>> choices;
    for (int x = 1; x + 1 < size; ++x) {
      for (int y = x; y + 1 < size; ++y) {
        cells.emplace_back(x, y);
        std::vector<int> c;
        for (int v : lat.downset(lat.meet(x, y))) c.push_back(v);
        choices.push_back(std::move(c));
      }
    }

    std::vector<size_t> pick(cells.size(), 0);
    for (;;) {
      std::vector<int> table(static_cast<size_t>(size) * size);
      for (int x = 0; x < size; ++x) {
        table[static_cast<size_t>(x) * size + (size - 1)] = x;
        table[static_cast<size_t>(size - 1) * size + x] = x;
        table[static_cast<size_t>(x) * size] = 0;
        table[static_cast<size_t>(x)] = 0;
      }
      for (size_t i = 0; i < cells.size(); ++i) {
        const int v = choices[i][pick[i]];
        table[static_cast<size_t>(cells[i].first) * size + cells[i].second] = v;
        table[static_cast<size_t>(cells[i].second) * size + cells[i].first] = v;
      }

      bool is_representative = true;
      if (options.dedup_isomorphic) {
        for (const auto& perm : autos) {
          if (permuted_table(table, perm) < table) {
            is_representative = false;
            break;
          }
        }
      }
      if (is_representative) {
        try {
          Quantale q = Quantale::build(lat, table,
                                       "enum:" + std::to_string(size) + ":" +
                                           std::to_string(emitted));
          ++emitted;
          if (!sink(q)) return;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::AxiomViolation) throw;
        }
      }

      size_t i = 0;
      while (i < pick.size() && pick[i] + 1 == choices[i].size()) {
        pick[i] = 0;
        ++i;
      }
      if (i == pick.size()) break;
      ++pick[i];
    }
  }
}

std::vector<Quantale> all_quantales_of_size(int size, const EnumerateOptions& options) {
  std::vector<Quantale> out;
  enumerate_quantales(
      size,
      [&](const Quantale& q) {
        out.push_back(q);
        return true;
      },
      options);
  return out;
}

std::vector<Quantale> corpus_up_to(int max_size, const EnumerateOptions& options) {
  std::vector<Quantale> out;
  for (int n = 1; n <= max_size; ++n) {
    for (Quantale& q : all_quantales_of_size(n, options)) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace qtl
