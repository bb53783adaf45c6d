#ifndef WPS_REPORT_HPP
#define WPS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "wps/cohomology.hpp"
#include "wps/ringops.hpp"

namespace wps {

/*
  Sector census with the stable aliases g1..gK used on the command line.
  Aliases follow census order (carrier lexicographic, then a-vector
  lexicographic), independent of any generator naming.
*/
struct Census {
  Fan fan;
  std::vector<TwistedSector> sectors;

  static Census build(const WeightSystem& w);
  std::string alias(size_t idx) const { return "g" + std::to_string(idx + 1); }
  // Accepts "1"/"id", an alias like "g2", or a full canonical key.
  // Returns identity for "1"/"id"; throws std::out_of_range on unknown
  // names (the CLI maps that to exit code 2).
  LocalGroupElement lookup(const std::string& name) const;
  std::vector<std::string> valid_names() const;
};

struct ThreePointEntry {
  std::string g1, g2, g3;  // canonical keys
  std::vector<std::string> classes;  // printable class descriptions
  Rat value;
};

struct Report {
  std::vector<Int> weights_given;
  std::vector<Int> weights_normalized;
  bool reduced = false;

  IntMat c0;
  std::vector<std::vector<Int>> rays;

  struct SectorRow {
    std::string alias;
    std::string key;
    std::vector<int> carrier;
    std::vector<Rat> a;  // restricted to carrier
    std::vector<Int> quotient_weights;
    std::vector<Int> quotient_padded;
    Int d;
    int dim = 0;
    Rat iota;
  };
  std::vector<SectorRow> sectors;

  std::vector<std::pair<Rat, long>> betti;
  Int betti_total;
  Int denominator_lcm;

  std::vector<Int> l;
  struct RingEntry {
    int i, j;
    Rat e;
  };
  std::vector<RingEntry> ring;

  std::optional<std::vector<ThreePointEntry>> threepoint;
};

Report build_report(const Census& census);

std::string report_to_json(const Report& r, bool pretty);
Report report_from_json(const std::string& text);
bool reports_equal(const Report& a, const Report& b);

std::string report_to_text(const Report& r);

}  // namespace wps

#endif  // WPS_REPORT_HPP
