#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "latclock/atoms.hpp"
#include "latclock/errors.hpp"
#include "latclock/estimation.hpp"
#include "latclock/report.hpp"

using namespace latclock;

namespace {

constexpr double PI = 3.141592653589793;

// Scratch file helper; removes the file when the scope closes.
struct TempFile {
  std::string path;

  explicit TempFile(const std::string& name, const std::string& content)
      : path(name) {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

// ---------------------------------------------------------------------------
// catalog and conversions
// ---------------------------------------------------------------------------

TEST_CASE("catalog holds the five species with their wavelengths") {
  const auto& cat = atom_catalog();
  REQUIRE(cat.size() == 5);
  CHECK(cat[0].name == "Sr");
  CHECK(cat[0].clock_wavelength_nm == 698.0);
  CHECK(cat[0].magic_wavelength_nm == 813.0);
  CHECK(cat[0].reference_tau_min_s == 1.3e5);
  CHECK(cat[2].name == "Cd");
  CHECK(cat[2].clock_wavelength_nm == 332.0);
  CHECK(cat[2].magic_wavelength_nm == 420.0);
  CHECK(cat[4].name == "Mg");
  CHECK(cat[4].reference_tau_min_s == 1.5e5);
}

TEST_CASE("find_atom retrieves by name and lists names on a miss") {
  CHECK(find_atom("Hg").clock_wavelength_nm == 266.0);
  CHECK_THROWS_WITH_AS(find_atom("Xe"), doctest::Contains("Sr"),
                       std::invalid_argument);
}

TEST_CASE("wavelength_to_energy frozen conversions") {
  CHECK(wavelength_to_energy(332.0) ==
        doctest::Approx(5.98327065406e-19).epsilon(1e-11));
  CHECK(wavelength_to_energy(698.0) ==
        doctest::Approx(2.84591097013e-19).epsilon(1e-11));
  // doubling the wavelength exactly halves the quantum
  CHECK(wavelength_to_energy(500.0) / wavelength_to_energy(1000.0) == 2.0);
  CHECK_THROWS_AS(wavelength_to_energy(0.0), NonPositiveWavelengthError);
  CHECK_THROWS_AS(wavelength_to_energy(-1.0), NonPositiveWavelengthError);
}

TEST_CASE("optimal time scales inversely with the layer count") {
  const double t100 = tau_min_formula(6.0e-19, 4.2e-7, 100.0, 9.80665);
  const double t200 = tau_min_formula(6.0e-19, 4.2e-7, 200.0, 9.80665);
  CHECK(t100 / t200 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(tau_min_formula(0.0, 4.2e-7, 100.0, 9.80665),
                  NonPositiveInputError);
  CHECK_THROWS_AS(tau_min_formula(6e-19, 4.2e-7, 0.5, 9.80665),
                  NonPositiveInputError);
}

TEST_CASE("catalog round trip: computed times match the published round "
          "numbers") {
  for (const AtomSpec& a : atom_catalog()) {
    const double t = tau_min_for_atom(a, 100, 9.80665);
    CHECK(std::fabs(t / a.reference_tau_min_s - 1.0) < 0.05);
  }
  // frozen exact value for the Cd reference point
  CHECK(tau_min_for_atom(find_atom("Cd"), 100, 9.80665) ==
        doctest::Approx(120825.56224).epsilon(1e-9));
}

TEST_CASE("analytic formula agrees with the divergence-time structure") {
  const double delta_e = wavelength_to_energy(332.0);
  const ClockConfig cfg = ClockConfig::from_physical(
      delta_e, 1.0, 1.0, 9.80665, 4.2e-7, 2, 1);
  const TimeMarks tm = time_marks(cfg, 1);
  CHECK(tm.tau_min ==
        doctest::Approx(tau_min_formula(delta_e, 4.2e-7, 5.0, 9.80665))
            .epsilon(1e-12));
}

// ---------------------------------------------------------------------------
// curve emission
// ---------------------------------------------------------------------------

TEST_CASE("single-layer curve is the inverse square on a uniform grid") {
  const auto pts = emit_fig2(10.0, 10);
  REQUIRE(pts.size() == 10);
  CHECK(pts[0].x == 1.0);
  CHECK(pts[0].y == 1.0);
  CHECK(pts[9].x == 10.0);
  CHECK(pts[9].y == 0.01);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    CHECK(pts[i].y < pts[i - 1].y);  // monotone decreasing
    CHECK(!pts[i].diverged);
  }
  CHECK_THROWS_AS(emit_fig2(0.0, 10), NonPositiveInputError);
  CHECK_THROWS_AS(emit_fig2(10.0, 1), std::invalid_argument);
}

TEST_CASE("multilayer curve flags the divergence lattice and nothing else") {
  // alpha = 2 puts the lattice at x = k pi/5; the grid lands exactly on it
  const auto pts = emit_fig4(5, 2.0, 2.0 * PI, 10);
  REQUIRE(pts.size() == 10);
  for (int i = 1; i <= 10; ++i) {
    const CurvePoint& p = pts[static_cast<std::size_t>(i - 1)];
    if (i == 5 || i == 10) {
      CHECK(!p.diverged);
      CHECK(std::isfinite(p.y));
    } else {
      CHECK(p.diverged);
      CHECK(std::isinf(p.y));
    }
  }
  CHECK_THROWS_AS(emit_fig4(4, 2.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(emit_fig4(5, 0.0, 1.0, 10), NonPositiveInputError);
}

TEST_CASE("one layer degenerates the multilayer curve bit for bit") {
  const auto a = emit_fig2(17.3, 211);
  const auto b = emit_fig4(1, 0.37, 17.3, 211);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
    CHECK(a[i].diverged == b[i].diverged);
  }
}

TEST_CASE("tiny grid start overflows the inverse square and is flagged") {
  const auto pts = emit_fig2(1e-160, 2);
  CHECK(std::isinf(pts[0].y));
  CHECK(pts[0].diverged);
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

TEST_CASE("format_number: 12 significant digits, infinity tokens") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_number(1.23456789012345e-7) == "1.23456789012e-07");
}

TEST_CASE("curve CSV layout is exact") {
  std::ostringstream os;
  write_curve_csv(os, {{1.0, 1.0, false},
                       {2.5, std::numeric_limits<double>::infinity(), true}});
  CHECK(os.str() == "x,y,diverged\n1,1,0\n2.5,inf,1\n");
}

TEST_CASE("curve SVG is deterministic and marks divergences") {
  const std::vector<CurvePoint> pts = {
      {1.0, 1.0, false},
      {2.0, 0.25, false},
      {3.0, std::numeric_limits<double>::infinity(), true},
      {4.0, 0.0625, false}};
  std::ostringstream a, b;
  write_curve_svg(a, pts, "probe");
  write_curve_svg(b, pts, "probe");
  CHECK(a.str() == b.str());
  CHECK(a.str().find("<svg") == 0);
  CHECK(a.str().find("polyline") != std::string::npos);
  CHECK(a.str().find("stroke-dasharray") != std::string::npos);  // marker
  CHECK(a.str().find("probe") != std::string::npos);
}

// ---------------------------------------------------------------------------
// config files
// ---------------------------------------------------------------------------

TEST_CASE("kv reader: comments, blanks, trimming, duplicate rejection") {
  const TempFile f("kv_read_probe.txt",
                   "# leading comment\n"
                   "\n"
                   "hbar = 1.0   # trailing comment\n"
                   "  c=2.0\n");
  const auto kv = read_kv_file(f.path);
  REQUIRE(kv.size() == 2);
  CHECK(kv.at("hbar") == "1.0");
  CHECK(kv.at("c") == "2.0");

  const TempFile dup("kv_dup_probe.txt", "a = 1\na = 2\n");
  CHECK_THROWS_WITH_AS(read_kv_file(dup.path), doctest::Contains("duplicate"),
                       std::invalid_argument);
  const TempFile noeq("kv_noeq_probe.txt", "just words\n");
  CHECK_THROWS_AS(read_kv_file(noeq.path), std::invalid_argument);
  CHECK_THROWS_AS(read_kv_file("kv_missing_probe.txt"), std::runtime_error);
}

TEST_CASE("constants overrides apply on top of the defaults") {
  const PhysicalConstants base;
  const PhysicalConstants pc =
      constants_from_kv({{"g", "9.78"}, {"c", "3.0e8"}}, base);
  CHECK(pc.g_default() == 9.78);
  CHECK(pc.c() == 3.0e8);
  CHECK(pc.c2() == 9.0e16);
  CHECK(pc.hbar() == base.hbar());
  CHECK(pc.planck_h() == base.planck_h());
  CHECK_THROWS_AS(constants_from_kv({{"g", "fast"}}, base),
                  std::invalid_argument);
}

TEST_CASE("full interrogation config from a file") {
  const TempFile f("cfg_full_probe.txt",
                   "clock_wavelength_nm = 332\n"
                   "magic_wavelength_nm = 420\n"
                   "tau_s = 1.2e5\n"
                   "ell = 2\n"
                   "n_site = 100\n");
  const ClockConfig cfg = clock_config_from_kv_file(f.path);
  CHECK(cfg.delta_e() == doctest::Approx(5.98327065406e-19).epsilon(1e-11));
  CHECK(cfg.h_spacing() == doctest::Approx(4.2e-7).epsilon(1e-15));
  CHECK(cfg.tau() == 1.2e5);
  CHECK(cfg.ell() == 2);
  CHECK(cfg.n_site() == 100);
  CHECK(cfg.theta0() == 1.0);             // default
  CHECK(cfg.g() == 9.80665);              // default gravity
}

TEST_CASE("config file rejections: unknown keys, conflicts, omissions") {
  const TempFile unknown("cfg_unknown_probe.txt",
                         "clock_wavelength_nm = 332\n"
                         "magic_wavelength_nm = 420\n"
                         "tau_s = 1\n"
                         "ell = 0\n"
                         "flux_capacitance = 1.21\n");
  CHECK_THROWS_WITH_AS(clock_config_from_kv_file(unknown.path),
                       doctest::Contains("flux_capacitance"),
                       std::invalid_argument);

  const TempFile both("cfg_both_probe.txt",
                      "clock_wavelength_nm = 332\n"
                      "delta_e_joule = 6e-19\n"
                      "magic_wavelength_nm = 420\n"
                      "tau_s = 1\n"
                      "ell = 0\n");
  CHECK_THROWS_AS(clock_config_from_kv_file(both.path), std::invalid_argument);

  const TempFile missing("cfg_missing_probe.txt",
                         "clock_wavelength_nm = 332\n"
                         "magic_wavelength_nm = 420\n"
                         "ell = 0\n");
  CHECK_THROWS_WITH_AS(clock_config_from_kv_file(missing.path),
                       doctest::Contains("tau_s"), std::invalid_argument);

  const TempFile exclusive("cfg_excl_probe.txt",
                           "delta_e_joule = 6e-19\n"
                           "h_spacing_m = 4.2e-7\n"
                           "tau_s = 1\n"
                           "ell = 0\n"
                           "theta0 = 1\n"
                           "psi_reduced = 2\n");
  CHECK_THROWS_AS(clock_config_from_kv_file(exclusive.path),
                  std::invalid_argument);
}

TEST_CASE("pinned reduced phase from a config file") {
  const TempFile f("cfg_psi_probe.txt",
                   "delta_e_joule = 2\n"
                   "h_spacing_m = 1\n"
                   "tau_s = 1\n"
                   "ell = 1\n"
                   "psi_reduced = 0.7\n");
  // dimensionless constants so the pin is easy to observe
  const ClockConfig cfg =
      clock_config_from_kv_file(f.path, PhysicalConstants(1, 1, 1, 1));
  CHECK(cfg.psi() == 0.7);
  CHECK(cfg.theta0() == doctest::Approx(0.35).epsilon(1e-15));
}
