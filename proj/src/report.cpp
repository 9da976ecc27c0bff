#include "latclock/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "latclock/atoms.hpp"
#include "latclock/errors.hpp"

namespace latclock {

namespace {

void check_grid_args(double a_max, int n_points) {
  if (!(std::isfinite(a_max) && a_max > 0.0)) {
    throw NonPositiveInputError("emit curve: a_max must be finite and > 0");
  }
  if (n_points < 2) {
    throw std::invalid_argument("emit curve: n_points must be >= 2");
  }
}

}  // namespace

std::vector<CurvePoint> emit_fig2(double a_max, int n_points) {
  check_grid_args(a_max, n_points);
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int i = 1; i <= n_points; ++i) {
    const double x = a_max * i / n_points;
    const double y = 1.0 / (x * x);
    out.push_back({x, y, !std::isfinite(y)});
  }
  return out;
}

std::vector<CurvePoint> emit_fig4(int n_layer, double alpha, double a_max,
                                  int n_points) {
  check_grid_args(a_max, n_points);
  if (n_layer < 1 || n_layer % 2 == 0) {
    throw std::invalid_argument("emit_fig4: n_layer must be odd and >= 1");
  }
  if (!(std::isfinite(alpha) && alpha > 0.0)) {
    throw NonPositiveInputError("emit_fig4: alpha must be finite and > 0");
  }
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int i = 1; i <= n_points; ++i) {
    const double x = a_max * i / n_points;
    const double d = dirichlet_visibility(x * alpha / 2.0, n_layer).value;
    if (d == 0.0) {
      out.push_back({x, std::numeric_limits<double>::infinity(), true});
      continue;
    }
    const double xd = x * d;
    const double y = 1.0 / (xd * xd);
    out.push_back({x, y, !std::isfinite(y)});
  }
  return out;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& points) {
  os << "x,y,diverged\n";
  for (const CurvePoint& p : points) {
    os << format_number(p.x) << ',' << format_number(p.y) << ','
       << (p.diverged ? '1' : '0') << '\n';
  }
}

void write_curve_svg(std::ostream& os, const std::vector<CurvePoint>& points,
                     const std::string& title) {
  const double width = 720.0, height = 480.0;
  const double ml = 70.0, mr = 20.0, mt = 40.0, mb = 50.0;
  const double pw = width - ml - mr;
  const double ph = height - mt - mb;

  double x_lo = 0.0, x_hi = 1.0;
  double ly_lo = 0.0, ly_hi = 1.0;
  bool have = false;
  for (const CurvePoint& p : points) {
    if (p.diverged || p.y <= 0.0) continue;
    const double ly = std::log10(p.y);
    if (!have) {
      x_lo = x_hi = p.x;
      ly_lo = ly_hi = ly;
      have = true;
    } else {
      x_lo = std::fmin(x_lo, p.x);
      x_hi = std::fmax(x_hi, p.x);
      ly_lo = std::fmin(ly_lo, ly);
      ly_hi = std::fmax(ly_hi, ly);
    }
  }
  if (!have || x_hi == x_lo) {
    x_lo = 0.0;
    x_hi = 1.0;
  }
  if (ly_hi == ly_lo) {
    ly_lo -= 1.0;
    ly_hi += 1.0;
  }

  auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double ly) {
    return mt + (ly_hi - ly) / (ly_hi - ly_lo) * ph;
  };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
        "height=\"480\" viewBox=\"0 0 720 480\">\n";
  os << "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  os << "<text x=\"360\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"monospace\" font-size=\"14\">"
     << title << "</text>\n";
  // axes
  os << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt + ph) << "\" x2=\""
     << num(ml + pw) << "\" y2=\"" << num(mt + ph)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt) << "\" x2=\""
     << num(ml) << "\" y2=\"" << num(mt + ph) << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << num(ml + pw / 2.0) << "\" y=\"" << num(height - 12.0)
     << "\" text-anchor=\"middle\" font-family=\"monospace\" "
        "font-size=\"12\">x</text>\n";
  os << "<text x=\"18\" y=\"" << num(mt + ph / 2.0)
     << "\" text-anchor=\"middle\" font-family=\"monospace\" "
        "font-size=\"12\" transform=\"rotate(-90 18 "
     << num(mt + ph / 2.0) << ")\">log10 y</text>\n";

  // divergence markers first, polyline segments above them
  for (const CurvePoint& p : points) {
    if (!p.diverged) continue;
    const double x = px(p.x);
    os << "<line x1=\"" << num(x) << "\" y1=\"" << num(mt) << "\" x2=\""
       << num(x) << "\" y2=\"" << num(mt + ph)
       << "\" stroke=\"red\" stroke-dasharray=\"4 3\"/>\n";
  }
  bool open = false;
  std::ostringstream seg;
  auto flush_seg = [&]() {
    if (open) {
      os << "<polyline fill=\"none\" stroke=\"blue\" points=\"" << seg.str()
         << "\"/>\n";
      seg.str("");
      open = false;
    }
  };
  for (const CurvePoint& p : points) {
    if (p.diverged || p.y <= 0.0) {
      flush_seg();
      continue;
    }
    if (open) seg << ' ';
    seg << num(px(p.x)) << ',' << num(py(std::log10(p.y)));
    open = true;
  }
  flush_seg();
  os << "</svg>\n";
}

std::map<std::string, std::string> read_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("read_kv_file: cannot open '" + path + "'");
  }
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    const std::size_t b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    const std::size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("read_kv_file: line " +
                                  std::to_string(lineno) + " has no '='");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (key.empty() || val.empty()) {
      throw std::invalid_argument("read_kv_file: line " +
                                  std::to_string(lineno) +
                                  " has an empty key or value");
    }
    if (!kv.emplace(key, val).second) {
      throw std::invalid_argument("read_kv_file: duplicate key '" + key +
                                  "'");
    }
  }
  return kv;
}

namespace {

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("key '" + key + "': '" + text +
                                "' is not a number");
  }
  if (used != text.size()) {
    throw std::invalid_argument("key '" + key + "': trailing characters in '" +
                                text + "'");
  }
  return v;
}

long long parse_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("key '" + key + "': '" + text +
                                "' is not an integer");
  }
  if (used != text.size()) {
    throw std::invalid_argument("key '" + key + "': trailing characters in '" +
                                text + "'");
  }
  return v;
}

}  // namespace

PhysicalConstants constants_from_kv(
    const std::map<std::string, std::string>& kv,
    const PhysicalConstants& base) {
  double hbar = base.hbar();
  double c = base.c();
  double g = base.g_default();
  double planck_h = base.planck_h();
  if (auto it = kv.find("hbar"); it != kv.end()) {
    hbar = parse_double(it->first, it->second);
  }
  if (auto it = kv.find("c"); it != kv.end()) {
    c = parse_double(it->first, it->second);
  }
  if (auto it = kv.find("g"); it != kv.end()) {
    g = parse_double(it->first, it->second);
  }
  if (auto it = kv.find("planck_h"); it != kv.end()) {
    planck_h = parse_double(it->first, it->second);
  }
  return PhysicalConstants(hbar, c, g, planck_h);
}

ClockConfig clock_config_from_kv_file(const std::string& path,
                                      const PhysicalConstants& constants) {
  const std::map<std::string, std::string> kv = read_kv_file(path);
  static const char* known[] = {"delta_e_joule", "clock_wavelength_nm",
                                "tau_s",         "h_spacing_m",
                                "magic_wavelength_nm", "ell",
                                "theta0",        "psi_reduced",
                                "g",             "n_site"};
  for (const auto& [key, value] : kv) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) {
      throw std::invalid_argument("clock config: unknown key '" + key + "'");
    }
  }
  auto get = [&](const char* key) {
    auto it = kv.find(key);
    return it == kv.end() ? static_cast<const std::string*>(nullptr)
                          : &it->second;
  };

  const std::string* de = get("delta_e_joule");
  const std::string* cw = get("clock_wavelength_nm");
  if ((de == nullptr) == (cw == nullptr)) {
    throw std::invalid_argument(
        "clock config: exactly one of delta_e_joule or clock_wavelength_nm "
        "is required");
  }
  const double delta_e =
      de ? parse_double("delta_e_joule", *de)
         : wavelength_to_energy(parse_double("clock_wavelength_nm", *cw),
                                constants);

  const std::string* hs = get("h_spacing_m");
  const std::string* mw = get("magic_wavelength_nm");
  if ((hs == nullptr) == (mw == nullptr)) {
    throw std::invalid_argument(
        "clock config: exactly one of h_spacing_m or magic_wavelength_nm "
        "is required");
  }
  const double h_spacing =
      hs ? parse_double("h_spacing_m", *hs)
         : parse_double("magic_wavelength_nm", *mw) * 1e-9;

  const std::string* tau_s = get("tau_s");
  if (!tau_s) throw std::invalid_argument("clock config: tau_s is required");
  const double tau = parse_double("tau_s", *tau_s);

  const std::string* ell_s = get("ell");
  if (!ell_s) throw std::invalid_argument("clock config: ell is required");
  const long long ell = parse_int("ell", *ell_s);
  if (ell < 0 || ell > 1000000) {
    throw std::invalid_argument("clock config: ell out of range");
  }

  const double g =
      get("g") ? parse_double("g", *get("g")) : constants.g_default();
  const long long n_site =
      get("n_site") ? parse_int("n_site", *get("n_site")) : 1;

  const std::string* theta0 = get("theta0");
  const std::string* psi = get("psi_reduced");
  if (theta0 && psi) {
    throw std::invalid_argument(
        "clock config: theta0 and psi_reduced are mutually exclusive");
  }
  if (psi) {
    return ClockConfig::from_reduced_phase(
        parse_double("psi_reduced", *psi), delta_e, tau, g, h_spacing,
        static_cast<int>(ell), n_site, constants);
  }
  const double th = theta0 ? parse_double("theta0", *theta0) : 1.0;
  return ClockConfig::from_physical(delta_e, tau, th, g, h_spacing,
                                    static_cast<int>(ell), n_site, constants);
}

}  // namespace latclock
