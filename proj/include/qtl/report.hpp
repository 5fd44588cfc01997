#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtl/hom.hpp"
#include "qtl/topology.hpp"

namespace qtl {

enum class KuratowskiMode { Auto, Exhaustive, Sampled };

struct TopologyReportOptions {
  DisconnectionMode disconnection_mode = DisconnectionMode::Pair;
  KuratowskiMode kuratowski_mode = KuratowskiMode::Auto;
  std::uint64_t seed = 0;
};

/// Everything the topology command reports about one spectrum. Fields that
/// depend on enumerating the closed-set lattice degrade to "not evaluated"
/// (empty optional, rendered as null) when the space exceeds the enumeration
/// cap; the reason lands in notes.
/// Disconnection witness rendered down to labels: generator labels of the
/// two ideals in pair mode, generator labels of the subbasic witnesses of
/// the two subfamilies in family mode.
struct DisconnectionReport {
  DisconnectionMode mode = DisconnectionMode::Pair;
  std::string left, right;
  std::vector<std::string> left_labels, right_labels;
};

struct TopologyReport {
  std::string quantale;
  std::string selector;
  int points = 0;
  bool t0 = false;
  bool t1 = false;
  std::optional<bool> sober;
  std::optional<bool> quasi_compact;
  bool connected = false;
  std::optional<bool> spectral;
  bool hkp = false;
  bool kuratowski = false;
  bool kuratowski_sampled = false;
  std::optional<DisconnectionReport> disconnection;
  bool disconnection_evaluated = true;
  std::optional<std::string> idempotent;
  std::vector<std::string> notes;
};

TopologyReport build_topology_report(const Quantale& q, const Spectrum& spectrum,
                                     const TopologyReportOptions& opts = {});

/// JSON shape, keys in this order:
///   selector, points (count), T0, T1, sober, quasi_compact, connected,
///   spectral, hkp, kuratowski, strong_disconnection.
/// Unevaluated fields are null. strong_disconnection is null when absent; a
/// pair witness is {"I": generator label, "J": generator label, "idempotent":
/// element label or null}; a family witness is {"A": [labels], "B": [labels],
/// "idempotent": null}.
nlohmann::ordered_json topology_report_to_json(const TopologyReport& r);
std::string topology_report_to_text(const TopologyReport& r);

struct IdealReportEntry {
  std::string generator;
  std::vector<std::string> elements;
  IdealClassification flags;
};

struct IdealsReport {
  std::string quantale;
  std::string selector;
  std::vector<IdealReportEntry> ideals;
  /// Generator label of the meet of all maximal ideals; empty when the
  /// quantale has no proper ideal at all.
  std::optional<std::string> jacobson_radical;
};

IdealsReport build_ideals_report(const Quantale& q, IdealClass cls);
nlohmann::ordered_json ideals_report_to_json(const IdealsReport& r);
std::string ideals_report_to_text(const IdealsReport& r);

}  // namespace qtl
