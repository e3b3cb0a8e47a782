#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "zetali/special.hpp"
#include "zetali/zero_catalog.hpp"

using namespace zetali;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

const char* kThree =
    "14.134725142\n"
    "21.022039639\n"
    "25.010857580\n";

}  // namespace

TEST_CASE("ingest a small table") {
  auto path = write_temp("zl_three.txt", std::string("# first three\n") + kThree);
  ZeroCatalog cat = ZeroCatalog::ingest(path);
  CHECK(cat.zero_count() == 3);
  CHECK(cat.t_max().to_double() == doctest::Approx(25.010857580));
  CHECK(cat.entries()[0].text == "14.134725142");
}

TEST_CASE("ingest rejects bad input with line numbers") {
  auto bad_order = write_temp("zl_desc.txt", "21.0\n14.1\n");
  try {
    ZeroCatalog::ingest(bad_order);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  auto empty = write_temp("zl_empty.txt", "");
  CHECK_THROWS_AS(ZeroCatalog::ingest(empty), Error);

  auto comments_only = write_temp("zl_comments.txt", "# nothing\n# here\n");
  CHECK_THROWS_AS(ZeroCatalog::ingest(comments_only), Error);

  auto nonpositive = write_temp("zl_neg.txt", "14.1\n-2.0\n");
  CHECK_THROWS_AS(ZeroCatalog::ingest(nonpositive), ParseError);

  auto junk = write_temp("zl_junk.txt", "14.1\nhello\n");
  try {
    ZeroCatalog::ingest(junk);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  auto duplicate = write_temp("zl_dup.txt", "14.1\n14.1\n");
  CHECK_THROWS_AS(ZeroCatalog::ingest(duplicate), ParseError);
}

TEST_CASE("multiplicity sidecar and paired zeros") {
  auto path = write_temp("zl_mult.txt", kThree);
  write_temp("zl_mult.txt.mult", "2 2\n");
  ZeroCatalog cat = ZeroCatalog::ingest(path);
  CHECK(cat.zero_count() == 4);

  auto pairs = cat.paired_zeros();
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0].first.im().to_double() == doctest::Approx(14.134725142));
  CHECK(pairs[0].second.im().to_double() == doctest::Approx(-14.134725142));
  // the multiplicity-2 entry is yielded twice consecutively
  CHECK(pairs[1].first.im() == pairs[2].first.im());
  for (const auto& [rho, conj_rho] : pairs) {
    CHECK(rho.re() == Real(0.5));
    CHECK(conj_rho.im() == -rho.im());
  }
}

TEST_CASE("round trip is the identity") {
  auto path = write_temp("zl_rt_src.txt", kThree);
  write_temp("zl_rt_src.txt.mult", "1 3\n");
  ZeroCatalog cat = ZeroCatalog::ingest(path);
  auto out = (std::filesystem::temp_directory_path() / "zl_rt_out.txt").string();
  std::filesystem::remove(out + ".mult");
  cat.serialize(out);
  ZeroCatalog again = ZeroCatalog::ingest(out);
  REQUIRE(again.line_count() == cat.line_count());
  for (std::size_t i = 0; i < cat.line_count(); ++i) {
    CHECK(again.entries()[i].text == cat.entries()[i].text);
    CHECK(again.entries()[i].multiplicity == cat.entries()[i].multiplicity);
  }
  CHECK(again.t_max() == cat.t_max());
}

TEST_CASE("count_below main term") {
  // ln term equal to 1 makes the main terms cancel: estimate = 7/8
  Real t_e = Real(2.0, 256) * Real::pi(256) * exp(Real(1.0, 256));
  DensityEstimate d = count_below(t_e, 256);
  CHECK(abs(d.count_estimate - Real(0.875)) < Real(1e-60));

  // T = 100: main-term value ~29.0, within +-2 of the true count 29
  DensityEstimate d100 = count_below(Real(100.0), 128);
  CHECK(d100.count_estimate.to_double() == doctest::Approx(29.002).epsilon(1e-3));
  CHECK(std::abs(d100.count_estimate.to_double() - 29.0) <= 2.0);

  CHECK_THROWS_AS(count_below(Real(6.0), 128), DomainError);

  // monotone in T
  std::mt19937_64 rng(11);
  double prev_t = 7.0;
  Real prev = count_below(Real(prev_t), 128).count_estimate;
  for (int i = 0; i < 20; ++i) {
    prev_t += 1.0 + static_cast<double>(rng() >> 11) * 0x1.0p-53 * 50.0;
    Real cur = count_below(Real(prev_t), 128).count_estimate;
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("spot check |xi(1/2 + iT)| at the tabulated ordinates") {
  auto path = write_temp("zl_spot.txt", kThree);
  ZeroCatalog cat = ZeroCatalog::ingest(path);
  auto checks = spot_check(cat, 3, PrecisionContext::bits(128), Real(1e-4));
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) {
    CHECK(c.pass);
    CHECK(c.xi_abs < Real(1e-5));
  }
}

TEST_CASE("thirty-zero fixture: count_below vs actual count") {
  ZeroCatalog cat = ZeroCatalog::ingest(std::string(ZETALI_TEST_DATA) + "/zeros_30.txt");
  REQUIRE(cat.zero_count() == 30);
  // estimate at t_max within 5%-ish of the stored count (the tight
  // percentage contract applies to catalogs with >= 1e3 zeros)
  DensityEstimate d = count_below(cat.t_max(), 128);
  CHECK(std::abs(d.count_estimate.to_double() - 30.0) < 2.5);
}
