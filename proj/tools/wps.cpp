// Command-line front end: parse a weight tuple, run the pipelines, print
// human-readable or JSON reports. Exit codes: 0 success, 1 parse error,
// 2 unknown sector key.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wps/report.hpp"

using nlohmann::json;
using namespace wps;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Int> parse_weights(const std::string& s) {
  std::vector<Int> q;
  for (const std::string& part : split(s, ',')) {
    if (part.empty()) throw std::invalid_argument("empty weight entry");
    q.push_back(int_from_string(part));
  }
  return q;
}

// Class spec: "1" (unit), "D" / "D^m" (all-ones divisor power), or a
// comma-separated coefficient list giving a single divisor factor over
// the sector's surviving rays. A leading "s*" scales by the rational s.
SectorClass parse_class(const std::string& spec, int nsurv) {
  SectorClass c;
  std::string body = spec;
  auto star = body.find('*');
  if (star != std::string::npos) {
    c.scalar = Rat::parse(body.substr(0, star));
    body = body.substr(star + 1);
  }
  if (body == "1") return c;
  if (body == "D") return SectorClass{c.scalar, SectorClass::divisor_power(nsurv, 1).factors};
  if (body.rfind("D^", 0) == 0) {
    int m = std::stoi(body.substr(2));
    return SectorClass{c.scalar, SectorClass::divisor_power(nsurv, m).factors};
  }
  EquivariantDivisor d;
  for (const std::string& part : split(body, ',')) d.coeffs.push_back(Rat::parse(part));
  if (static_cast<int>(d.coeffs.size()) != nsurv)
    throw std::invalid_argument("class '" + spec + "': expected " + std::to_string(nsurv) +
                                " coefficients (one per surviving ray)");
  c.factors.push_back(std::move(d));
  return c;
}

void print_unknown_sector(const Census& census, const std::string& name) {
  std::cerr << "unknown sector '" << name << "'. valid names:\n";
  for (const std::string& s : census.valid_names()) std::cerr << "  " << s << "\n";
}

int cmd_fan(const Census& census, bool as_json) {
  Report r = build_report(census);
  if (as_json) {
    json j;
    j["weights"] = json::parse(report_to_json(r, false))["weights"];
    j["fan"] = json::parse(report_to_json(r, false))["fan"];
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (r.reduced) {
    std::cout << "normalized to (";
    for (size_t i = 0; i < r.weights_normalized.size(); ++i)
      std::cout << (i ? "," : "") << r.weights_normalized[i].get_str();
    std::cout << ")\n";
  }
  for (size_t i = 0; i < r.rays.size(); ++i) {
    std::cout << "v" << i << " = (";
    for (size_t j = 0; j < r.rays[i].size(); ++j)
      std::cout << (j ? "," : "") << r.rays[i][j].get_str();
    std::cout << ")\n";
  }
  std::cout << "C0 =\n";
  for (int i = 0; i < r.c0.rows(); ++i) {
    std::cout << "  [";
    for (int j = 0; j < r.c0.cols(); ++j) std::cout << (j ? " " : "") << r.c0.at(i, j).get_str();
    std::cout << "]\n";
  }
  return 0;
}

int cmd_sectors(const Census& census, bool as_json) {
  Report r = build_report(census);
  if (as_json) {
    json j = json::parse(report_to_json(r, false));
    std::cout << json{{"weights", j["weights"]}, {"sectors", j["sectors"]}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "twisted sectors (" << r.sectors.size() << "):\n";
  for (const auto& s : r.sectors) {
    std::cout << "  " << s.alias << ": " << s.key << "  P(";
    for (size_t i = 0; i < s.quotient_padded.size(); ++i)
      std::cout << (i ? "," : "") << s.quotient_padded[i].get_str();
    std::cout << ")  d=" << s.d.get_str() << " dim=" << s.dim << " iota=" << s.iota.str() << "\n";
  }
  return 0;
}

int cmd_betti(const Census& census, bool as_json) {
  Report r = build_report(census);
  if (as_json) {
    json j = json::parse(report_to_json(r, false));
    std::cout << json{{"weights", j["weights"]}, {"betti", j["betti"]}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "orbifold betti table (total " << r.betti_total.get_str() << "):\n";
  for (const auto& [deg, dim] : r.betti) std::cout << "  H^{" << deg.str() << "} : " << dim << "\n";
  return 0;
}

int cmd_ring(const Census& census, bool as_json, std::uint64_t seed) {
  Report r = build_report(census);
  CupTable ct = cup_table(census.fan, seed);

  auto label_of = [&](int k) { return ct.basis[k].label; };
  if (as_json) {
    json j = json::parse(report_to_json(r, false));
    json cup = json::array();
    for (const auto& [ij, terms] : ct.constants)
      for (const auto& [k, coeff] : terms)
        cup.push_back({{"b1", label_of(ij.first)},
                       {"b2", label_of(ij.second)},
                       {"b3", label_of(k)},
                       {"coeff", coeff.wire()}});
    std::cout << json{{"weights", j["weights"]}, {"ring", j["ring"]}, {"cup", std::move(cup)}}.dump(2)
              << "\n";
    return 0;
  }
  std::cout << "ordinary ring: l = [";
  for (size_t i = 0; i < r.l.size(); ++i) std::cout << (i ? "," : "") << r.l[i].get_str();
  std::cout << "]\n";
  for (const auto& e : r.ring)
    std::cout << "  xi_" << e.i << " * xi_" << e.j << " = " << e.e.str() << " * xi_" << e.i + e.j
              << "\n";
  std::cout << "cup products (basis: sector * D-power; omitted products are 0):\n";
  for (const auto& [ij, terms] : ct.constants) {
    if (ij.first > ij.second) continue;  // commutative; print one orientation
    for (const auto& [k, coeff] : terms) {
      std::cout << "  " << label_of(ij.first) << " u " << label_of(ij.second) << " = ";
      if (coeff != Rat(1)) std::cout << coeff.str() << " * ";
      std::cout << label_of(k) << "\n";
    }
  }
  return 0;
}

int cmd_threepoint(const Census& census, const std::string& triple_arg, const std::string& g1_arg,
                   const std::string& g2_arg, const std::string& g3_arg, const std::string& classes_arg,
                   bool as_json, std::uint64_t seed) {
  std::vector<std::string> names;
  if (!triple_arg.empty()) {
    names = split(triple_arg, ',');
    if (names.size() != 3) {
      std::cerr << "--triple wants three comma-separated sector names\n";
      return 1;
    }
  } else if (!g1_arg.empty() && !g2_arg.empty() && !g3_arg.empty()) {
    names = {g1_arg, g2_arg, g3_arg};
  } else {
    std::cerr << "threepoint needs --triple a,b,c or --g1/--g2/--g3\n";
    return 1;
  }

  LocalGroupElement e1, e2, e3;
  try {
    e1 = census.lookup(names[0]);
    e2 = census.lookup(names[1]);
    e3 = census.lookup(names[2]);
  } catch (const std::out_of_range&) {
    for (const auto& nm : names) {
      try {
        census.lookup(nm);
      } catch (const std::out_of_range&) {
        print_unknown_sector(census, nm);
      }
    }
    return 2;
  }

  auto t = make_triple(census.fan, e1, e2);
  if (!t) {
    std::cout << "0  (empty multisector: carriers share no cone)\n";
    return 0;
  }
  if (!(t->g3 == e3)) {
    std::cerr << "g3 must be (g1*g2)^{-1} = " << t->g3.key() << "\n";
    return 2;
  }

  std::vector<std::string> specs = classes_arg.empty()
                                       ? std::vector<std::string>{"1", "1", "1"}
                                       : split(classes_arg, ';');
  if (specs.size() != 3) {
    std::cerr << "--classes wants three ';'-separated class specs\n";
    return 1;
  }
  const LocalGroupElement* gs[3] = {&e1, &e2, &e3};
  SectorClass cls[3];
  for (int i = 0; i < 3; ++i) {
    SectorSpace sp = space_for_cone(census.fan, gs[i]->carrier);
    cls[i] = parse_class(specs[i], static_cast<int>(sp.survivors.size()));
  }

  ThreePointResult res = three_point_checked(census.fan, *t, cls[0], cls[1], cls[2], seed);
  if (as_json) {
    json j{{"g1", e1.key()},           {"g2", e2.key()},
           {"g3", e3.key()},           {"classes", specs},
           {"value", res.value.wire()}, {"degree_ok", res.degree_ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << res.value.str();
    if (!res.degree_ok) std::cout << "  (degree mismatch)";
    std::cout << "\n";
  }
  return 0;
}

int cmd_integrate(const Census& census, const std::string& sector_arg, const std::string& classes_arg,
                  bool as_json, std::uint64_t seed) {
  LocalGroupElement g;
  try {
    g = census.lookup(sector_arg.empty() ? "1" : sector_arg);
  } catch (const std::out_of_range&) {
    print_unknown_sector(census, sector_arg);
    return 2;
  }
  SectorSpace sp = space_for_cone(census.fan, g.carrier);
  const int nsurv = static_cast<int>(sp.survivors.size());
  std::vector<EquivariantDivisor> factors;
  Rat scalar{1};
  if (!classes_arg.empty()) {
    for (const std::string& spec : split(classes_arg, ';')) {
      SectorClass c = parse_class(spec, nsurv);
      scalar *= c.scalar;
      for (auto& f : c.factors) factors.push_back(std::move(f));
    }
  }
  LocalizeResult r = localize_integral(sp, factors, ObstructionBundle{},
                                       seed ^ fnv1a64("cli:" + g.key()));
  Rat value = scalar * r.value;
  if (as_json) {
    json j{{"sector", g.key()}, {"value", value.wire()}, {"degree_ok", r.degree_ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value.str();
    if (!r.degree_ok) std::cout << "  (degree mismatch)";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chen-Ruan orbifold cohomology of weighted projective spaces"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // --weights/--json/--seed may follow the subcommand

  std::string weights_arg, triple_arg, g1_arg, g2_arg, g3_arg, classes_arg, sector_arg;
  bool as_json = false;
  std::uint64_t seed = 0;

  app.add_option("--weights", weights_arg, "comma-separated positive weights q0,q1,...")->required();
  app.add_flag("--json", as_json, "machine-readable output (rationals as \"p/q\" strings)");
  app.add_option("--seed", seed, "seed for the localization lambda draws (default 0)");

  CLI::App* fan_cmd = app.add_subcommand("fan", "fan rays and the basis matrix C0");
  CLI::App* sectors_cmd = app.add_subcommand("sectors", "twisted sector census");
  CLI::App* betti_cmd = app.add_subcommand("betti", "rationally graded orbifold betti table");
  CLI::App* ring_cmd = app.add_subcommand("ring", "ordinary ring constants and cup products");
  CLI::App* three_cmd = app.add_subcommand("threepoint", "orbifold 3-point function");
  three_cmd->add_option("--triple", triple_arg, "three sector names (aliases g1,g2,... or 1)");
  three_cmd->add_option("--g1", g1_arg, "first sector (full canonical key allowed)");
  three_cmd->add_option("--g2", g2_arg, "second sector");
  three_cmd->add_option("--g3", g3_arg, "third sector, must be (g1*g2)^{-1}");
  three_cmd->add_option("--classes", classes_arg,
                        "three ';'-separated class specs: 1 | D | D^m | c0,c1,...");
  CLI::App* int_cmd = app.add_subcommand("integrate", "reduced-sector localization integral");
  int_cmd->add_option("--sector", sector_arg, "sector name (default: untwisted)");
  int_cmd->add_option("--classes", classes_arg, "';'-separated divisor factors: D | D^m | c0,c1,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Census census = Census::build(normalize_weights(parse_weights(weights_arg)));
    if (fan_cmd->parsed()) return cmd_fan(census, as_json);
    if (sectors_cmd->parsed()) return cmd_sectors(census, as_json);
    if (betti_cmd->parsed()) return cmd_betti(census, as_json);
    if (ring_cmd->parsed()) return cmd_ring(census, as_json, seed);
    if (three_cmd->parsed())
      return cmd_threepoint(census, triple_arg, g1_arg, g2_arg, g3_arg, classes_arg, as_json, seed);
    if (int_cmd->parsed()) return cmd_integrate(census, sector_arg, classes_arg, as_json, seed);
    // default: full report
    Report r = build_report(census);
    std::cout << (as_json ? report_to_json(r, true) : report_to_text(r));
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
