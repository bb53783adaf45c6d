#include "wps/report.hpp"

#include <sstream>

#include <json.hpp>

namespace wps {

using nlohmann::json;

Census Census::build(const WeightSystem& w) {
  Census c;
  c.fan = build_fan(w);
  c.sectors = enumerate_twisted_sectors(c.fan);
  return c;
}

LocalGroupElement Census::lookup(const std::string& name) const {
  if (name == "1" || name == "id" || name == "identity") return identity_element(fan);
  for (size_t i = 0; i < sectors.size(); ++i)
    if (name == alias(i) || name == sectors[i].key()) return sectors[i].g;
  throw std::out_of_range("unknown sector '" + name + "'");
}

std::vector<std::string> Census::valid_names() const {
  std::vector<std::string> out{"1"};
  for (size_t i = 0; i < sectors.size(); ++i) out.push_back(alias(i) + " = " + sectors[i].key());
  return out;
}

Report build_report(const Census& census) {
  const Fan& fan = census.fan;
  Report r;
  r.weights_given = fan.weights.reduced_from ? *fan.weights.reduced_from : fan.weights.q;
  r.weights_normalized = fan.weights.q;
  r.reduced = fan.weights.reduced_from.has_value();
  r.c0 = fan.c0;
  r.rays = fan.rays;

  for (size_t i = 0; i < census.sectors.size(); ++i) {
    const TwistedSector& s = census.sectors[i];
    Report::SectorRow row;
    row.alias = census.alias(i);
    row.key = s.key();
    row.carrier = s.carrier.rays;
    for (int ray : s.carrier.rays) row.a.push_back(s.g.a[ray]);
    row.quotient_weights = s.quotient_weights;
    row.quotient_padded = s.space().padded_weights(fan);
    row.d = s.d;
    row.dim = s.dim;
    row.iota = s.iota;
    r.sectors.push_back(std::move(row));
  }

  BettiTable bt = betti_table(fan, census.sectors);
  r.betti = poincare_polynomial(bt);
  r.betti_total = bt.total();
  r.denominator_lcm = bt.denominator_lcm;

  r.l = l_values(fan.weights);
  OrdinaryRing ring = ordinary_ring(fan.weights);
  for (int i = 1; i <= fan.n(); ++i)
    for (int j = i; i + j <= fan.n(); ++j) r.ring.push_back({i, j, ring.e(i, j)});
  return r;
}

namespace {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  return Int(j.get<std::string>());
}

json ints_to_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

std::vector<Int> ints_from_json(const json& j) {
  std::vector<Int> v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

json rats_to_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.wire());
  return a;
}

std::vector<Rat> rats_from_json(const json& j) {
  std::vector<Rat> v;
  for (const auto& x : j) v.push_back(Rat::parse(x.get<std::string>()));
  return v;
}

json mat_to_json(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat mat_from_json(const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j[i][c]);
  return m;
}

}  // namespace

std::string report_to_json(const Report& r, bool pretty) {
  json j;
  j["weights"] = {{"given", ints_to_json(r.weights_given)},
                  {"normalized", ints_to_json(r.weights_normalized)},
                  {"reduced", r.reduced}};
  json rays = json::array();
  for (const auto& ray : r.rays) rays.push_back(ints_to_json(ray));
  j["fan"] = {{"c0", mat_to_json(r.c0)}, {"rays", std::move(rays)}};

  json sectors = json::array();
  for (const auto& s : r.sectors) {
    sectors.push_back({{"alias", s.alias},
                       {"key", s.key},
                       {"carrier", s.carrier},
                       {"a", rats_to_json(s.a)},
                       {"quotient_weights", ints_to_json(s.quotient_weights)},
                       {"quotient_padded", ints_to_json(s.quotient_padded)},
                       {"d", int_to_json(s.d)},
                       {"dim", s.dim},
                       {"iota", s.iota.wire()}});
  }
  j["sectors"] = std::move(sectors);

  json betti = json::array();
  for (const auto& [deg, dim] : r.betti) betti.push_back({{"degree", deg.wire()}, {"dim", dim}});
  j["betti"] = {{"entries", std::move(betti)},
                {"total", int_to_json(r.betti_total)},
                {"denominator_lcm", int_to_json(r.denominator_lcm)}};

  json ring = json::array();
  for (const auto& e : r.ring) ring.push_back({{"i", e.i}, {"j", e.j}, {"e", e.e.wire()}});
  j["ring"] = {{"l", ints_to_json(r.l)}, {"e", std::move(ring)}};

  if (r.threepoint) {
    json tp = json::array();
    for (const auto& t : *r.threepoint)
      tp.push_back({{"g1", t.g1}, {"g2", t.g2}, {"g3", t.g3}, {"classes", t.classes}, {"value", t.value.wire()}});
    j["threepoint"] = std::move(tp);
  }
  return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

Report report_from_json(const std::string& text) {
  json j = json::parse(text);
  Report r;
  r.weights_given = ints_from_json(j["weights"]["given"]);
  r.weights_normalized = ints_from_json(j["weights"]["normalized"]);
  r.reduced = j["weights"]["reduced"].get<bool>();
  r.c0 = mat_from_json(j["fan"]["c0"]);
  for (const auto& ray : j["fan"]["rays"]) r.rays.push_back(ints_from_json(ray));
  for (const auto& s : j["sectors"]) {
    Report::SectorRow row;
    row.alias = s["alias"].get<std::string>();
    row.key = s["key"].get<std::string>();
    row.carrier = s["carrier"].get<std::vector<int>>();
    row.a = rats_from_json(s["a"]);
    row.quotient_weights = ints_from_json(s["quotient_weights"]);
    row.quotient_padded = ints_from_json(s["quotient_padded"]);
    row.d = int_from_json(s["d"]);
    row.dim = s["dim"].get<int>();
    row.iota = Rat::parse(s["iota"].get<std::string>());
    r.sectors.push_back(std::move(row));
  }
  for (const auto& e : j["betti"]["entries"])
    r.betti.emplace_back(Rat::parse(e["degree"].get<std::string>()), e["dim"].get<long>());
  r.betti_total = int_from_json(j["betti"]["total"]);
  r.denominator_lcm = int_from_json(j["betti"]["denominator_lcm"]);
  r.l = ints_from_json(j["ring"]["l"]);
  for (const auto& e : j["ring"]["e"])
    r.ring.push_back({e["i"].get<int>(), e["j"].get<int>(), Rat::parse(e["e"].get<std::string>())});
  if (j.contains("threepoint")) {
    std::vector<ThreePointEntry> tp;
    for (const auto& t : j["threepoint"]) {
      ThreePointEntry e;
      e.g1 = t["g1"].get<std::string>();
      e.g2 = t["g2"].get<std::string>();
      e.g3 = t["g3"].get<std::string>();
      e.classes = t["classes"].get<std::vector<std::string>>();
      e.value = Rat::parse(t["value"].get<std::string>());
      tp.push_back(std::move(e));
    }
    r.threepoint = std::move(tp);
  }
  return r;
}

bool reports_equal(const Report& a, const Report& b) {
  // JSON forms are canonical for everything a Report carries.
  return report_to_json(a, false) == report_to_json(b, false);
}

namespace {

std::string ray_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "P(";
  for (size_t i = 0; i < r.weights_normalized.size(); ++i)
    os << (i ? "," : "") << r.weights_normalized[i].get_str();
  os << ")";
  if (r.reduced) {
    os << "   [normalized from (";
    for (size_t i = 0; i < r.weights_given.size(); ++i)
      os << (i ? "," : "") << r.weights_given[i].get_str();
    os << ")]";
  }
  os << "\n\nfan rays:\n";
  for (size_t i = 0; i < r.rays.size(); ++i)
    os << "  v" << i << " = " << ray_str(r.rays[i]) << "\n";
  os << "C0:\n";
  for (int i = 0; i < r.c0.rows(); ++i) {
    os << "  [";
    for (int j = 0; j < r.c0.cols(); ++j) os << (j ? " " : "") << r.c0.at(i, j).get_str();
    os << "]\n";
  }

  os << "\ntwisted sectors (" << r.sectors.size() << "):\n";
  for (const auto& s : r.sectors) {
    os << "  " << s.alias << ": " << s.key << "  P(";
    for (size_t i = 0; i < s.quotient_padded.size(); ++i)
      os << (i ? "," : "") << s.quotient_padded[i].get_str();
    os << ")  d=" << s.d.get_str() << "  dim=" << s.dim << "  iota=" << s.iota.str() << "\n";
  }

  os << "\norbifold betti table (total " << r.betti_total.get_str() << ", L="
     << r.denominator_lcm.get_str() << "):\n";
  for (const auto& [deg, dim] : r.betti) os << "  H^{" << deg.str() << "} : " << dim << "\n";

  os << "\nordinary ring: l = [";
  for (size_t i = 0; i < r.l.size(); ++i) os << (i ? "," : "") << r.l[i].get_str();
  os << "]\n";
  for (const auto& e : r.ring)
    os << "  xi_" << e.i << " * xi_" << e.j << " = " << e.e.str() << " * xi_" << e.i + e.j << "\n";

  if (r.threepoint) {
    os << "\n3-point values:\n";
    for (const auto& t : *r.threepoint) {
      os << "  <";
      for (size_t i = 0; i < t.classes.size(); ++i) os << (i ? ", " : "") << t.classes[i];
      os << "> on (" << t.g1 << ", " << t.g2 << ", " << t.g3 << ") = " << t.value.str() << "\n";
    }
  }
  return os.str();
}

}  // namespace wps
