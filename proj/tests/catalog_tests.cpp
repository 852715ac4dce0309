#include <doctest.h>

#include <string>

#include "polywin/catalog.hpp"

using namespace polywin;

namespace {

const std::string kData = POLYWIN_DATA_DIR;

}  // namespace

TEST_CASE("shipped catalog loads with every animal") {
  Catalog cat = load_catalog(kData + "/catalog.txt");
  CHECK(cat.entries.size() == 15);
  for (const CatalogEntry& e : cat.entries) {
    CHECK_FALSE(e.name.empty());
    CHECK(e.goal.size() >= 1);
    CHECK_FALSE(e.claims.empty());
  }
}

TEST_CASE("individual claims verify") {
  Catalog cat = load_catalog(kData + "/catalog.txt");
  CatalogOptions opts;
  for (const CatalogEntry& e : cat.entries) {
    if (e.name != "T31" && e.name != "P44") continue;
    for (const Claim& c : e.claims) {
      ClaimOutcome out = verify_claim(e, c, opts);
      INFO(e.name << " (" << c.a << "," << c.b << ")");
      CHECK(out.ok);
    }
  }
}

TEST_CASE("verification rejects a wrong witness") {
  Catalog cat = load_catalog(kData + "/catalog.txt");
  CatalogOptions opts;
  const CatalogEntry* t31 = nullptr;
  for (const CatalogEntry& e : cat.entries)
    if (e.name == "T31") t31 = &e;
  REQUIRE(t31);
  Claim wrong = t31->claims[3];  // the surround claim at (2,6)
  REQUIRE(wrong.witness.rule == "surround");
  wrong.b = 5;  // 2*3 > 5: the rule must refuse
  CHECK_FALSE(verify_claim(*t31, wrong, opts).ok);
}

TEST_CASE("jobs produce identical reports") {
  Catalog cat = load_catalog(kData + "/catalog.txt");
  CatalogOptions serial;
  serial.cross_check = false;
  CatalogOptions parallel = serial;
  parallel.jobs = 4;
  CHECK(run_all(cat, serial).text() == run_all(cat, parallel).text());
}
