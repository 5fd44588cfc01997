#include "qtl/report.hpp"

#include <limits>
#include <sstream>

namespace qtl {
namespace {

KuratowskiOptions kuratowski_options_for(const TopologyReportOptions& opts) {
  KuratowskiOptions k;
  k.seed = opts.seed;
  switch (opts.kuratowski_mode) {
    case KuratowskiMode::Auto:
      break;
    case KuratowskiMode::Exhaustive:
      // Still bounded: past 2^13 ideal subsets squared the sweep would not
      // finish, so oversized spectra fall back to sampling with a note.
      k.pair_budget = std::uint64_t{1} << 26;
      break;
    case KuratowskiMode::Sampled:
      k.pair_budget = 0;
      break;
  }
  return k;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string tri_state(const std::optional<bool>& b) {
  return b ? yes_no(*b) : "not evaluated";
}

}  // namespace

TopologyReport build_topology_report(const Quantale& q, const Spectrum& spectrum,
                                     const TopologyReportOptions& opts) {
  const SubbasisTopology space = SubbasisTopology::build(q, spectrum);
  TopologyReport r;
  r.quantale = q.name();
  r.selector = spectrum.selector;
  r.points = space.point_count();
  r.t0 = is_T0(space);
  r.t1 = is_T1(space);
  r.connected = is_connected(space);

  if (r.points == 0) {
    r.notes.push_back(
        "empty spectrum: by convention it counts as T0, T1, sober, quasi-compact, "
        "connected, and spectral");
  }

  try {
    r.sober = is_sober(space);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCap) throw;
    r.notes.push_back("soberness not evaluated: " + std::string(e.what()));
  }
  try {
    r.quasi_compact = is_quasi_compact(space);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCap) throw;
    r.notes.push_back("quasi-compactness not evaluated: " + std::string(e.what()));
  }
  try {
    r.spectral = is_spectral(space);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCap) throw;
    r.notes.push_back("spectrality not evaluated: " + std::string(e.what()));
  }

  r.hkp = satisfies_hkp(q, spectrum);
  const KuratowskiResult kr = is_kuratowski_upset(q, spectrum, kuratowski_options_for(opts));
  r.kuratowski = kr.holds;
  r.kuratowski_sampled = kr.sampled;
  if (kr.sampled) {
    r.notes.push_back("kuratowski checked on sampled ideal subsets (seed " +
                      std::to_string(opts.seed) + "); a pass is evidence, not proof");
  }

  std::optional<DisconnectionWitness> witness;
  try {
    witness = strong_disconnection(space, opts.disconnection_mode);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCap) throw;
    r.disconnection_evaluated = false;
    r.notes.push_back("strong disconnection not evaluated: " + std::string(e.what()));
  }
  if (witness) {
    DisconnectionReport d;
    d.mode = witness->mode;
    if (witness->mode == DisconnectionMode::Pair) {
      d.left = q.lattice().label(witness->left->generator());
      d.right = q.lattice().label(witness->right->generator());
      try {
        r.idempotent = q.lattice().label(extract_idempotent(q, space, *witness));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PreconditionViolated && e.code() != ErrorCode::NoUnitPair) {
          throw;
        }
        r.notes.push_back("no idempotent extracted: " + std::string(e.what()));
      }
    } else {
      auto labels_of = [&](const std::vector<int>& family) {
        std::vector<std::string> out;
        out.reserve(family.size());
        for (int idx : family) {
          out.push_back(
              q.lattice().label(space.subbasis()[static_cast<size_t>(idx)].witness->generator()));
        }
        return out;
      };
      d.left_labels = labels_of(witness->left_family);
      d.right_labels = labels_of(witness->right_family);
      r.notes.push_back("family disconnections carry no idempotent extraction");
    }
    r.disconnection = std::move(d);
  }
  return r;
}

nlohmann::ordered_json topology_report_to_json(const TopologyReport& r) {
  nlohmann::ordered_json j;
  j["selector"] = r.selector;
  j["points"] = r.points;
  j["T0"] = r.t0;
  j["T1"] = r.t1;
  j["sober"] = r.sober ? nlohmann::ordered_json(*r.sober) : nlohmann::ordered_json(nullptr);
  j["quasi_compact"] =
      r.quasi_compact ? nlohmann::ordered_json(*r.quasi_compact) : nlohmann::ordered_json(nullptr);
  j["connected"] = r.connected;
  j["spectral"] =
      r.spectral ? nlohmann::ordered_json(*r.spectral) : nlohmann::ordered_json(nullptr);
  j["hkp"] = r.hkp;
  j["kuratowski"] = r.kuratowski;
  if (!r.disconnection) {
    j["strong_disconnection"] = nullptr;
  } else if (r.disconnection->mode == DisconnectionMode::Pair) {
    nlohmann::ordered_json d;
    d["I"] = r.disconnection->left;
    d["J"] = r.disconnection->right;
    d["idempotent"] =
        r.idempotent ? nlohmann::ordered_json(*r.idempotent) : nlohmann::ordered_json(nullptr);
    j["strong_disconnection"] = std::move(d);
  } else {
    nlohmann::ordered_json d;
    d["A"] = r.disconnection->left_labels;
    d["B"] = r.disconnection->right_labels;
    d["idempotent"] = nullptr;
    j["strong_disconnection"] = std::move(d);
  }
  return j;
}

std::string topology_report_to_text(const TopologyReport& r) {
  std::ostringstream out;
  out << "topology of the \"" << r.selector << "\" spectrum of " << r.quantale << "\n";
  out << "  points:        " << r.points << "\n";
  out << "  T0:            " << yes_no(r.t0) << "\n";
  out << "  T1:            " << yes_no(r.t1) << "\n";
  out << "  sober:         " << tri_state(r.sober) << "\n";
  out << "  quasi-compact: " << tri_state(r.quasi_compact) << "\n";
  out << "  connected:     " << yes_no(r.connected) << "\n";
  out << "  spectral:      " << tri_state(r.spectral) << "\n";
  out << "  hkp:           " << yes_no(r.hkp) << "\n";
  out << "  kuratowski:    " << yes_no(r.kuratowski)
      << (r.kuratowski_sampled ? " (sampled)" : "") << "\n";
  out << "  strong disconnection: ";
  if (!r.disconnection_evaluated) {
    out << "not evaluated\n";
  } else if (!r.disconnection) {
    out << "none\n";
  } else if (r.disconnection->mode == DisconnectionMode::Pair) {
    out << "ideals <" << r.disconnection->left << "> and <" << r.disconnection->right << ">\n";
    out << "  idempotent:    " << (r.idempotent ? *r.idempotent : std::string("none")) << "\n";
  } else {
    out << "families {";
    for (size_t i = 0; i < r.disconnection->left_labels.size(); ++i) {
      out << (i ? ", " : "") << "<" << r.disconnection->left_labels[i] << ">";
    }
    out << "} and {";
    for (size_t i = 0; i < r.disconnection->right_labels.size(); ++i) {
      out << (i ? ", " : "") << "<" << r.disconnection->right_labels[i] << ">";
    }
    out << "}\n";
  }
  for (const std::string& note : r.notes) out << "  note: " << note << "\n";
  return out.str();
}

IdealsReport build_ideals_report(const Quantale& q, IdealClass cls) {
  IdealsReport r;
  r.quantale = q.name();
  r.selector = ideal_class_name(cls);
  for (const Ideal& ideal : all_ideals(q)) {
    const IdealClassification flags = classify(q, ideal);
    if (!classification_has(flags, cls)) continue;
    IdealReportEntry entry;
    entry.generator = q.lattice().label(ideal.generator());
    for (int x : ideal.carrier()) entry.elements.push_back(q.lattice().label(x));
    entry.flags = flags;
    r.ideals.push_back(std::move(entry));
  }
  try {
    r.jacobson_radical = q.lattice().label(jacobson_radical(q).generator());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoProperIdeals) throw;
  }
  return r;
}

nlohmann::ordered_json ideals_report_to_json(const IdealsReport& r) {
  nlohmann::ordered_json j;
  j["quantale"] = r.quantale;
  j["selector"] = r.selector;
  j["count"] = r.ideals.size();
  j["ideals"] = nlohmann::ordered_json::array();
  for (const IdealReportEntry& e : r.ideals) {
    nlohmann::ordered_json entry;
    entry["generator"] = e.generator;
    entry["elements"] = e.elements;
    entry["proper"] = e.flags.proper;
    entry["maximal"] = e.flags.maximal;
    entry["minimal"] = e.flags.minimal;
    entry["prime"] = e.flags.prime;
    entry["minimal_prime"] = e.flags.minimal_prime;
    entry["primary"] = e.flags.primary;
    entry["irreducible"] = e.flags.irreducible;
    entry["strongly_irreducible"] = e.flags.strongly_irreducible;
    j["ideals"].push_back(std::move(entry));
  }
  j["jacobson_radical"] = r.jacobson_radical ? nlohmann::ordered_json(*r.jacobson_radical)
                                             : nlohmann::ordered_json(nullptr);
  return j;
}

std::string ideals_report_to_text(const IdealsReport& r) {
  std::ostringstream out;
  out << r.ideals.size() << " \"" << r.selector << "\" ideal(s) of " << r.quantale << "\n";
  for (const IdealReportEntry& e : r.ideals) {
    out << "  <" << e.generator << "> = {";
    for (size_t i = 0; i < e.elements.size(); ++i) out << (i ? ", " : "") << e.elements[i];
    out << "}";
    std::vector<std::string> tags;
    if (e.flags.maximal) tags.push_back("maximal");
    if (e.flags.minimal) tags.push_back("minimal");
    if (e.flags.prime) tags.push_back("prime");
    if (e.flags.minimal_prime) tags.push_back("minimal-prime");
    if (e.flags.primary) tags.push_back("primary");
    if (e.flags.irreducible) tags.push_back("irreducible");
    if (e.flags.strongly_irreducible) tags.push_back("strongly-irreducible");
    if (!tags.empty()) {
      out << "  [";
      for (size_t i = 0; i < tags.size(); ++i) out << (i ? ", " : "") << tags[i];
      out << "]";
    }
    out << "\n";
  }
  out << "  jacobson radical: "
      << (r.jacobson_radical ? "<" + *r.jacobson_radical + ">" : std::string("none")) << "\n";
  return out.str();
}

}  // namespace qtl
