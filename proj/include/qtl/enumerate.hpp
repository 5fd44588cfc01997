#pragma once

#include <functional>
#include <vector>

#include "qtl/quantale.hpp"

namespace qtl {

/// Exhaustive-search knobs. With dedup_isomorphic on (the default) exactly
/// one representative per isomorphism class comes out; with it off, every
/// valid multiplication table over each canonical lattice is emitted, which
/// is what counting cross-checks want.
struct EnumerateOptions {
  bool dedup_isomorphic = true;
};

/// All lattices with the given carrier size, one per isomorphism class,
/// with elements in a fixed linear extension (0 = bottom, size-1 = top) and
/// labels "e0", "e1", ... Size is capped well below the carrier limit
/// because the search is exponential in size^2.
std::vector<Lattice> all_lattices_of_size(int size);

/// Streams every quantale of the given size in a deterministic order,
/// named "enum:<size>:<index>". The sink returns false to stop early.
void enumerate_quantales(int size, const std::function<bool(const Quantale&)>& sink,
                         const EnumerateOptions& options = {});

std::vector<Quantale> all_quantales_of_size(int size, const EnumerateOptions& options = {});

/// Sizes 1 through max_size, concatenated in size order.
std::vector<Quantale> corpus_up_to(int max_size, const EnumerateOptions& options = {});

}  // namespace qtl
