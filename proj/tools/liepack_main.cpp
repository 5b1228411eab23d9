#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liepack/report.hpp"
#include "liepack/selftest.hpp"

namespace {

using namespace liepack;

std::vector<std::string> split_on(const std::string &s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

CartanVector parse_cartan(const std::string &spec, int n) {
  if (spec == "rho")
    return rho_vector(n);
  CartanVector v;
  for (const std::string &tok : split_on(spec, ','))
    v.push_back(Gaussian::parse(tok));
  if (v.size() == 1 && n > 1)
    v.assign(static_cast<size_t>(n), v[0]); // broadcast a scalar
  if (static_cast<int>(v.size()) != n)
    throw DimensionMismatch("expected " + std::to_string(n) + " coordinates");
  return v;
}

struct Options {
  std::string group = "pgl2";
  std::string a = "1/2";
  std::string lambda = "rho";
  std::string stratum = "N";
  std::string levi;
  std::string orbits;
  std::string xi;
  std::string entries;
  std::string orbit;
  std::string q = "1";
  std::string chol = "0";
  std::string canti = "0";
  bool json = false;
  bool all = false;
};

void emit(const Report &r, bool json) { std::cout << r.render(json); }

StratumId parse_stratum(const std::string &s) {
  if (s == "N")
    return StratumId::N;
  if (s == "S")
    return StratumId::S;
  if (s == "U")
    return StratumId::U;
  throw ParseError("unknown stratum '" + s + "'");
}

InductionDatum parse_datum(const Options &opt) {
  std::vector<int> blocks;
  for (const std::string &tok : split_on(opt.levi, ','))
    blocks.push_back(std::stoi(tok));
  std::vector<Partition> orbits;
  for (const std::string &tok : split_on(opt.orbits, ';'))
    orbits.push_back(Partition::parse(tok));
  std::vector<Gaussian> xi(orbits.size());
  if (!opt.xi.empty()) {
    xi.clear();
    for (const std::string &tok : split_on(opt.xi, ';'))
      xi.push_back(Gaussian::parse(tok));
  }
  return InductionDatum{LeviBlocks(blocks), std::move(orbits), std::move(xi)};
}

CoadjointDescriptor parse_descriptor(const std::string &entries) {
  CoadjointDescriptor d;
  for (const std::string &tok : split_on(entries, ';')) {
    size_t colon = tok.find(':');
    if (colon == std::string::npos)
      throw ParseError("entry must look like xi:parts");
    d.entries.emplace_back(Gaussian::parse(tok.substr(0, colon)),
                           Partition::parse(tok.substr(colon + 1)));
    d.ambient += d.entries.back().second.total();
  }
  std::sort(d.entries.begin(), d.entries.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  return d;
}

ArthurParameter parse_arthur(const Options &opt) {
  BasedRootDatum group = BasedRootDatum::from_name(opt.group);
  BasedRootDatum dual = group.dual();
  return make_arthur(dual, Partition::parse(opt.q),
                     parse_cartan(opt.chol, dual.dim()),
                     parse_cartan(opt.canti, dual.dim()));
}

int run_verify() {
  bool ok = true;
  for (const auto &[name, pass] : selftest::run_all()) {
    std::cout << (pass ? "PASS" : "FAIL") << " " << name << "\n";
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact parameter combinatorics of the Langlands classification,"
               " microlocal Arthur packets, and orbit-method duality"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine block only");

  auto add_group = [&](CLI::App *cmd) {
    cmd->add_option("--group", opt.group, "group name (pgl2, gl2, ..., gl5)");
  };

  CLI::App *params = app.add_subcommand("params", "Langlands parameters");
  params->require_subcommand(1);
  CLI::App *penum = params->add_subcommand("enumerate", "list classes");
  CLI::App *pclass = params->add_subcommand("classify", "classify classes");
  for (CLI::App *cmd : {penum, pclass}) {
    add_group(cmd);
    cmd->add_option("--a", opt.a, "infinitesimal character parameter");
  }

  CLI::App *geo = app.add_subcommand("geo", "geometric parameters");
  geo->require_subcommand(1);
  CLI::App *stratify = geo->add_subcommand("stratify", "orbit stratification");
  add_group(stratify);
  stratify->add_option("--lambda", opt.lambda, "rho or coordinate list");

  CLI::App *kgroup = app.add_subcommand("kgroup", "K-theory of the poset");
  kgroup->require_subcommand(1);
  CLI::App *kmg = kgroup->add_subcommand("mg", "geometric change of basis");
  CLI::App *kmr = kgroup->add_subcommand("mr", "representation change of basis");
  CLI::App *kcc = kgroup->add_subcommand("cc", "characteristic cycles");
  CLI::App *kpacket = kgroup->add_subcommand("packet", "microlocal packet");
  for (CLI::App *cmd : {kmg, kmr, kcc, kpacket}) {
    add_group(cmd);
    cmd->add_option("--lambda", opt.lambda, "rho or coordinate list");
  }
  kpacket->add_option("--stratum", opt.stratum, "N, S or U");

  CLI::App *orbit = app.add_subcommand("orbit", "nilpotent orbit induction");
  orbit->require_subcommand(1);
  CLI::App *obind = orbit->add_subcommand("bind", "birational induction");
  obind->add_option("--levi", opt.levi, "block sizes, e.g. 2,1")->required();
  obind->add_option("--orbits", opt.orbits, "partitions, e.g. 1,1;1")
      ->required();
  obind->add_option("--xi", opt.xi, "central values, e.g. 0;i");
  CLI::App *ominimal = orbit->add_subcommand("minimal", "minimal datum");
  ominimal->add_option("--entries", opt.entries, "descriptor, e.g. 0:2,1;i:1")
      ->required();
  CLI::App *origid = orbit->add_subcommand("rigid", "birational rigidity");
  add_group(origid);
  origid->add_option("--orbit", opt.orbit, "partition, e.g. 2,2")->required();

  CLI::App *duality = app.add_subcommand("duality", "Arthur duality map");
  duality->require_subcommand(1);
  CLI::App *dmap = duality->add_subcommand("map", "compute D(psi)");
  CLI::App *dsplit = duality->add_subcommand("split", "Levi splitting");
  for (CLI::App *cmd : {dmap, dsplit}) {
    add_group(cmd);
    cmd->add_option("--q", opt.q, "SL(2)-part partition");
    cmd->add_option("--chol", opt.chol, "holomorphic C*-exponent");
    cmd->add_option("--canti", opt.canti, "antiholomorphic C*-exponent");
  }

  CLI::App *report = app.add_subcommand("report", "worked-example reports");
  report->require_subcommand(1);
  CLI::App *rpgl2 = report->add_subcommand("pgl2", "the rank-1 worked example");
  rpgl2->add_flag("--all", opt.all, "every block of the worked example");

  CLI::App *verify = app.add_subcommand("verify", "run property suites");
  verify->require_subcommand(1);
  verify->add_subcommand("all", "all acceptance properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*penum || *pclass) {
      BasedRootDatum g = BasedRootDatum::from_name(opt.group);
      Gaussian a = Gaussian::parse(opt.a);
      emit(*penum ? params_enumerate_report(g, a)
                  : params_classify_report(g, a),
           opt.json);
    } else if (*stratify || *kmg || *kmr || *kcc || *kpacket) {
      BasedRootDatum g = BasedRootDatum::from_name(opt.group);
      StratumPoset poset = stratify_orbit(g, parse_cartan(opt.lambda, g.dim()));
      if (*stratify)
        emit(geo_stratify_report(poset), opt.json);
      else if (*kmg)
        emit(kgroup_matrix_report(poset, true), opt.json);
      else if (*kmr)
        emit(kgroup_matrix_report(poset, false), opt.json);
      else if (*kcc)
        emit(kgroup_cc_report(poset), opt.json);
      else
        emit(kgroup_packet_report(poset, parse_stratum(opt.stratum)),
             opt.json);
    } else if (*obind) {
      emit(orbit_bind_report(parse_datum(opt)), opt.json);
    } else if (*ominimal) {
      emit(orbit_minimal_report(parse_descriptor(opt.entries)), opt.json);
    } else if (*origid) {
      BasedRootDatum g = BasedRootDatum::from_name(opt.group);
      emit(orbit_rigid_report(Partition::parse(opt.orbit), g.dim()), opt.json);
    } else if (*dmap) {
      emit(duality_map_report(parse_arthur(opt)), opt.json);
    } else if (*dsplit) {
      emit(duality_split_report(parse_arthur(opt)), opt.json);
    } else if (*rpgl2) {
      std::vector<Report> blocks = report_pgl2_all();
      if (!opt.all)
        blocks.resize(1);
      for (size_t k = 0; k < blocks.size(); ++k)
        std::cout << (k ? "\n" : "") << blocks[k].render(opt.json);
    } else if (*verify) {
      return run_verify();
    }
  } catch (const Error &e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
