#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "qtl/hom.hpp"
#include "qtl/quantale.hpp"

namespace qtl {

/// Document shape:
///   {
///     "name":     optional string,
///     "elements": ["label", ...],
///     "leq":      [[i, j], ...]   covering pairs or any generating relation,
///     "mul":      [[int, ...], ...]  full size x size table
///   }
/// Indices refer to positions in "elements". The element order of the file
/// need not be sorted; construction relabels to the canonical order, so a
/// document written by quantale_to_json parses back unchanged.
Quantale quantale_from_json(const nlohmann::json& doc, int size_cap = kMaxCarrier);

/// Canonical emission: elements in carrier order, "leq" reduced to covering
/// pairs, "mul" in full.
nlohmann::ordered_json quantale_to_json(const Quantale& q);

/// Parses the file as JSON and builds the quantale. File-system and JSON
/// syntax problems surface as ParseError.
Quantale load_quantale(const std::string& path, int size_cap = kMaxCarrier);

/// Document shape: {"source": spec, "target": spec, "map": [int, ...]},
/// where each spec string is handed to the resolver (the CLI resolves
/// generator specs and file paths through resolve_quantale below) and map
/// lists the image of each source element in the target's canonical order.
QuantaleHom hom_from_json(const nlohmann::json& doc,
                          const std::function<Quantale(const std::string&)>& resolve);

QuantaleHom load_hom(const std::string& path,
                     const std::function<Quantale(const std::string&)>& resolve);

nlohmann::ordered_json hom_to_json(const QuantaleHom& hom);

/// Turns a command-line quantale spec into an instance:
///   gen:chain:N      chain with N elements
///   gen:powerset:K   subsets of a K-element set
///   gen:zn:N         divisibility structure of the integers modulo N
///   anything else    path to a JSON document
Quantale resolve_quantale(const std::string& spec, int size_cap = kMaxCarrier);

}  // namespace qtl
