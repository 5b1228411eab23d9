#pragma once

#include <string>
#include <vector>

#include "liepack/arthur.hpp"
#include "liepack/sheafk.hpp"

namespace liepack {

/// A rendered result: a human-readable table (or matrix with legend) plus a
/// machine block carrying the same data as indented key-value lines.
struct Report {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool has_matrix = false;
  IntMatrix matrix;
  std::vector<std::string> legend;
  std::vector<std::string> machine; // pre-indented "key: value" lines

  std::string human() const {
    std::string out = title + "\n";
    if (has_matrix) {
      for (size_t k = 0; k < legend.size(); ++k)
        out += "  [" + std::to_string(k) + "] " + legend[k] + "\n";
      for (const auto &row : matrix) {
        out += " ";
        for (long long x : row) {
          std::string c = std::to_string(x);
          out += std::string(3 - std::min<size_t>(c.size(), 2), ' ') + c;
        }
        out += "\n";
      }
      return out;
    }
    std::vector<size_t> width(header.size(), 0);
    auto widen = [&](const std::vector<std::string> &cells) {
      for (size_t k = 0; k < cells.size() && k < width.size(); ++k)
        width[k] = std::max(width[k], cells[k].size());
    };
    widen(header);
    for (const auto &r : rows)
      widen(r);
    auto emit = [&](const std::vector<std::string> &cells) {
      std::string line = "  ";
      for (size_t k = 0; k < cells.size(); ++k) {
        if (k)
          line += " | ";
        line += cells[k] + std::string(width[k] - cells[k].size(), ' ');
      }
      while (!line.empty() && line.back() == ' ')
        line.pop_back();
      out += line + "\n";
    };
    if (!header.empty())
      emit(header);
    for (const auto &r : rows)
      emit(r);
    return out;
  }

  std::string machine_block() const {
    std::string out;
    for (const std::string &line : machine)
      out += line + "\n";
    return out;
  }

  std::string render(bool machine_only) const {
    if (machine_only)
      return machine_block();
    return human() + machine_block();
  }
};

/// The fixture map from complete geometric parameters on the rho-poset to the
/// representations they classify (one per real form of the inner class).
inline std::string pi_label(StratumId s, int character) {
  switch (s) {
  case StratumId::N:
    return "triv of G_s";
  case StratumId::S:
    return "sgn of G_s";
  case StratumId::U:
    return character == 0 ? "discrete series of G_s" : "triv of G_c";
  }
  return "?";
}

inline std::string complete_param_name(StratumId s, int character,
                                       const StratumPoset &poset) {
  return "(" + stratum_name(s) + "," +
         character_name(find_stratum(poset, s), character) + ")";
}

inline Report params_enumerate_report(const BasedRootDatum &group,
                                      const Gaussian &a) {
  Report r;
  r.title = "Langlands parameters for " + group.name() + " at a = " + a.str();
  r.header = {"lambda", "y", "split form", "compact form", "centralizer"};
  r.machine = {"report: params.enumerate", "group: " + group.name(),
               "a: " + a.str(), "rows:"};
  for (const LanglandsParameter &p : enumerate_parameters(group, a)) {
    std::string split = "-", compact = "-";
    for (const PacketLabel &l : packet_labels({p, 0}))
      (l.real_form == "split" ? split : compact) = l.description;
    std::vector<std::string> row = {cartan_str(p.lambda), y_str(p), split,
                                    compact, centralizer_label(p)};
    r.rows.push_back(row);
    r.machine.push_back("  row:");
    r.machine.push_back("    lambda: " + row[0]);
    r.machine.push_back("    y: " + row[1]);
    r.machine.push_back("    split: " + row[2]);
    r.machine.push_back("    compact: " + row[3]);
    r.machine.push_back("    centralizer: " + row[4]);
  }
  return r;
}

inline Report params_classify_report(const BasedRootDatum &group,
                                     const Gaussian &a) {
  Report r;
  r.title = "Parameter classification for " + group.name() + " at a = " +
            a.str();
  r.header = {"y", "tempered", "discrete series", "component group"};
  r.machine = {"report: params.classify", "group: " + group.name(),
               "a: " + a.str(), "rows:"};
  for (const LanglandsParameter &p : enumerate_parameters(group, a)) {
    std::vector<std::string> row = {
        y_str(p), is_tempered(p) ? "yes" : "no",
        is_discrete_series_packet(p) ? "yes" : "no", component_group(p).str()};
    r.rows.push_back(row);
    r.machine.push_back("  row:");
    r.machine.push_back("    y: " + row[0]);
    r.machine.push_back("    tempered: " + row[1]);
    r.machine.push_back("    discrete_series: " + row[2]);
    r.machine.push_back("    component_group: " + row[3]);
  }
  return r;
}

inline Report geo_stratify_report(const StratumPoset &poset) {
  Report r;
  r.title = "Stratification of X(O,G^L) for " + poset.group.name() +
            " at lambda = " + cartan_str(poset.lambda);
  r.header = {"stratum", "dim", "pi_1", "boundary"};
  r.machine = {"report: geo.stratify", "group: " + poset.group.name(),
               "lambda: " + cartan_str(poset.lambda), "strata:"};
  for (const Stratum &s : poset.strata) {
    std::string boundary;
    for (size_t k = 0; k < s.boundary.size(); ++k)
      boundary += (k ? "," : "") + stratum_name(s.boundary[k]);
    if (boundary.empty())
      boundary = "-";
    std::vector<std::string> row = {stratum_name(s.id),
                                    std::to_string(s.dimension),
                                    s.fundamental_group.str(), boundary};
    r.rows.push_back(row);
    r.machine.push_back("  stratum:");
    r.machine.push_back("    name: " + row[0]);
    r.machine.push_back("    dim: " + row[1]);
    r.machine.push_back("    pi_1: " + row[2]);
    r.machine.push_back("    boundary: " + row[3]);
  }
  r.machine.push_back("complete_parameters:");
  std::string params_line;
  for (const CompleteGeometricParameter &cp : complete_parameters_of(poset)) {
    std::string name = complete_param_name(cp.stratum, cp.character, poset);
    r.machine.push_back("  param: " + name);
    params_line += (params_line.empty() ? "" : " ") + name;
  }
  r.rows.push_back({"complete", params_line, "", ""});
  return r;
}

inline Report kgroup_matrix_report(const StratumPoset &poset, bool geometric) {
  ChangeOfBasis m = geometric ? m_g_matrix(poset) : m_r_matrix(poset);
  Report r;
  r.title = std::string(geometric ? "m_g" : "m_r") + " for " +
            poset.group.name() + " at lambda = " + cartan_str(poset.lambda);
  r.has_matrix = true;
  r.matrix = m.matrix;
  for (const CompleteGeometricParameter &cp : m.index)
    r.legend.push_back(complete_param_name(cp.stratum, cp.character, poset));
  r.machine = {std::string("report: kgroup.") + (geometric ? "mg" : "mr"),
               "lambda: " + cartan_str(poset.lambda), "basis:"};
  for (const std::string &l : r.legend)
    r.machine.push_back("  param: " + l);
  r.machine.push_back("matrix:");
  for (const auto &row : r.matrix) {
    std::string line = "  row:";
    for (long long x : row)
      line += " " + std::to_string(x);
    r.machine.push_back(line);
  }
  return r;
}

inline Report kgroup_cc_report(const StratumPoset &poset) {
  Report r;
  r.title = "Characteristic cycles for " + poset.group.name() +
            " at lambda = " + cartan_str(poset.lambda);
  r.header = {"P(param)"};
  for (const Stratum &s : poset.strata)
    r.header.push_back("T*_" + stratum_name(s.id));
  r.machine = {"report: kgroup.cc", "lambda: " + cartan_str(poset.lambda),
               "cycles:"};
  for (const CompleteGeometricParameter &cp : complete_parameters_of(poset)) {
    CharacteristicCycle cc =
        characteristic_cycle(poset, cp.stratum, cp.character);
    std::vector<std::string> row = {
        complete_param_name(cp.stratum, cp.character, poset)};
    std::string mults;
    for (long long m : cc.multiplicities) {
      row.push_back(std::to_string(m));
      mults += (mults.empty() ? "" : " ") + std::to_string(m);
    }
    r.rows.push_back(row);
    r.machine.push_back("  cycle:");
    r.machine.push_back("    param: " + row[0]);
    r.machine.push_back("    multiplicities: " + mults);
  }
  return r;
}

inline Report kgroup_packet_report(const StratumPoset &poset, StratumId s) {
  Report r;
  r.title = "Microlocal Arthur packet at " + stratum_name(s);
  r.header = {"param", "representation"};
  r.machine = {"report: kgroup.packet", "stratum: " + stratum_name(s),
               "members:"};
  for (const CompleteGeometricParameter &cp :
       arthur_microlocal_packet(poset, s)) {
    std::vector<std::string> row = {
        complete_param_name(cp.stratum, cp.character, poset),
        pi_label(cp.stratum, cp.character)};
    r.rows.push_back(row);
    r.machine.push_back("  member:");
    r.machine.push_back("    param: " + row[0]);
    r.machine.push_back("    pi: " + row[1]);
  }
  return r;
}

inline void descriptor_into(Report &r, const CoadjointDescriptor &d) {
  r.header = {"xi", "orbit"};
  for (const auto &[xi, p] : d.entries) {
    r.rows.push_back({xi.str(), p.str()});
    r.machine.push_back("  entry:");
    r.machine.push_back("    xi: " + xi.str());
    r.machine.push_back("    orbit: " + p.str());
  }
}

inline Report orbit_bind_report(const InductionDatum &datum) {
  CoadjointDescriptor d = bind(datum);
  Report r;
  r.title = "Bind through Levi " + datum.levi.str();
  r.machine = {"report: orbit.bind", "levi: " + datum.levi.str(),
               "ambient: " + std::to_string(d.ambient), "entries:"};
  descriptor_into(r, d);
  return r;
}

inline Report orbit_minimal_report(const CoadjointDescriptor &desc) {
  InductionDatum d = minimal_datum(desc);
  Report r;
  r.title = "Minimal induction datum";
  r.header = {"block", "orbit", "xi"};
  r.machine = {"report: orbit.minimal", "levi: " + d.levi.str(), "blocks:"};
  for (size_t k = 0; k < d.orbits.size(); ++k) {
    std::vector<std::string> row = {std::to_string(d.levi.blocks()[k]),
                                    d.orbits[k].str(), d.xi[k].str()};
    r.rows.push_back(row);
    r.machine.push_back("  block:");
    r.machine.push_back("    size: " + row[0]);
    r.machine.push_back("    orbit: " + row[1]);
    r.machine.push_back("    xi: " + row[2]);
  }
  return r;
}

inline Report orbit_rigid_report(const Partition &p, int n) {
  bool rigid = is_birationally_rigid(p, n);
  Report r;
  r.title = "Rigidity of orbit " + p.str() + " in gl" + std::to_string(n);
  r.header = {"orbit", "rigid"};
  r.rows.push_back({p.str(), rigid ? "yes" : "no"});
  r.machine = {"report: orbit.rigid", "orbit: " + p.str(),
               std::string("rigid: ") + (rigid ? "yes" : "no")};
  return r;
}

inline std::string real_entry_str(const RealCoadjointDescriptor::Entry &e) {
  return "(" + e.on_x.str() + "," + e.on_ix.str() + ")";
}

inline Report duality_map_report(const ArthurParameter &psi) {
  RealCoadjointDescriptor d = duality_map(psi);
  Report r;
  r.title = "Duality image D(psi)";
  r.header = {"iota(xi) [X,iX]", "orbit"};
  r.machine = {"report: duality.map",
               "class: " + arthur_class_name(classify_arthur(psi)),
               std::string("nilpotent: ") + (d.is_nilpotent() ? "yes" : "no"),
               "entries:"};
  for (const auto &e : d.entries) {
    r.rows.push_back({real_entry_str(e), e.type.str()});
    r.machine.push_back("  entry:");
    r.machine.push_back("    value: " + real_entry_str(e));
    r.machine.push_back("    orbit: " + e.type.str());
  }
  return r;
}

inline Report duality_split_report(const ArthurParameter &psi) {
  LeviSplit s = split_at_levi(psi);
  Report r;
  r.title = "Levi splitting of psi";
  r.header = {"block", "q-part", "xi1"};
  r.machine = {"report: duality.split", "levi: " + s.levi.str(), "blocks:"};
  for (size_t k = 0; k < s.q_blocks.size(); ++k) {
    std::vector<std::string> row = {std::to_string(s.levi.blocks()[k]),
                                    s.q_blocks[k].str(), s.xi1[k].str()};
    r.rows.push_back(row);
    r.machine.push_back("  block:");
    r.machine.push_back("    size: " + row[0]);
    r.machine.push_back("    q: " + row[1]);
    r.machine.push_back("    xi1: " + row[2]);
  }
  return r;
}

/// The two unipotent Arthur parameters on the rho-poset of the rank-1 inner
/// class: psi+ (j trivial) and psi- (j = -Id composed with delta).
inline ArthurParameter unipotent_psi_plus() {
  BasedRootDatum dual = BasedRootDatum::sl(2);
  return ArthurParameter{dual, Partition({2}), cartan_zero(2), cartan_zero(2),
                         ExtendedElement{perm_identity(2), cartan_zero(2),
                                         true}};
}

inline ArthurParameter unipotent_psi_minus() {
  BasedRootDatum dual = BasedRootDatum::sl(2);
  CartanVector minus_id{Gaussian(Rational(1, 2)), Gaussian(Rational(1, 2))};
  return ArthurParameter{dual, Partition({2}), cartan_zero(2), cartan_zero(2),
                         ExtendedElement{perm_identity(2), minus_id, true}};
}

inline Report unipotent_packet_report(bool plus) {
  ArthurParameter psi = plus ? unipotent_psi_plus() : unipotent_psi_minus();
  LanglandsParameter phi = phi_of_psi(psi);
  StratumPoset poset = stratify_orbit(BasedRootDatum::pgl(2), phi.lambda);
  // phi lands on the closed stratum matching its y-class: the spherical
  // square root is the north pole, the other one the south pole.
  CartanVector sph_ref{Gaussian(Rational(1, 4)), Gaussian(Rational(-1, 4))};
  bool spherical =
      phi.group.exponent_is_trivial(phi.y.torus_exponent - sph_ref);
  StratumId s = spherical ? StratumId::N : StratumId::S;
  Report r = kgroup_packet_report(poset, s);
  r.title = std::string("Arthur packet of psi") + (plus ? "+" : "-");
  r.machine[0] = std::string("report: arthur.packet.psi") + (plus ? "+" : "-");
  return r;
}

inline std::vector<Report> report_pgl2_all() {
  BasedRootDatum pgl2 = BasedRootDatum::pgl(2);
  CartanVector rho = rho_vector(2);
  StratumPoset poset = stratify_orbit(pgl2, rho);
  std::vector<Report> out;
  out.push_back(params_enumerate_report(pgl2, Gaussian(Rational(1, 2))));
  out.push_back(geo_stratify_report(poset));
  out.push_back(kgroup_matrix_report(poset, true));
  out.push_back(kgroup_matrix_report(poset, false));
  out.push_back(kgroup_cc_report(poset));
  out.push_back(unipotent_packet_report(true));
  out.push_back(unipotent_packet_report(false));
  return out;
}

} // namespace liepack
