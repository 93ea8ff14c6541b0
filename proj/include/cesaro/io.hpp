#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cesaro/domain.hpp"
#include "cesaro/kfunctional.hpp"
#include "cesaro/suites.hpp"

namespace cesaro {

inline nlohmann::json report_to_json(const Report& rep) {
  nlohmann::json j;
  j["suite"] = rep.suite;
  j["seed"] = rep.seed;
  j["config"] = {{"count", rep.config.count},
                 {"mesh_n", rep.config.mesh_n},
                 {"tol", rep.config.tol},
                 {"gauss_order", rep.config.quad.gauss_order},
                 {"rel_tol", rep.config.quad.rel_tol}};
  j["assertions"] = nlohmann::json::array();
  for (const Assertion& a : rep.assertions)
    j["assertions"].push_back({{"id", a.id},
                               {"property", a.property},
                               {"detail", a.detail},
                               {"margin", a.margin},
                               {"pass", a.pass}});
  j["pass"] = rep.pass();
  return j;
}

/// Plain-text function spec:
///   domain unit            or   domain halfline <T>
///   <x_1> <v_1>                 one line per piece: right break, value
///   ...
/// Breaks must increase to the domain length.
inline std::string write_function_spec(const StepFunction& f) {
  std::ostringstream os;
  if (f.domain().is_unit())
    os << "domain unit\n";
  else
    os << "domain halfline " << format_g17(f.domain().length) << "\n";
  for (std::size_t i = 0; i < f.pieces(); ++i)
    os << format_g17(f.breaks()[i + 1]) << " " << format_g17(f.vals()[i]) << "\n";
  return os.str();
}

inline StepFunction read_function_spec(std::istream& in) {
  std::string word;
  if (!(in >> word) || word != "domain")
    throw std::invalid_argument("function spec: expected 'domain unit|halfline T'");
  if (!(in >> word)) throw std::invalid_argument("function spec: missing domain kind");
  Domain dom = Domain::unit();
  if (word == "halfline") {
    double t_max;
    if (!(in >> t_max)) throw std::invalid_argument("function spec: missing truncation");
    dom = Domain::half_line(t_max);
  } else if (word != "unit") {
    throw std::invalid_argument("function spec: unknown domain kind '" + word + "'");
  }
  std::vector<double> br{0.0}, va;
  double x, v;
  while (in >> x >> v) {
    br.push_back(x);
    va.push_back(v);
  }
  if (va.empty()) throw std::invalid_argument("function spec: no pieces");
  return StepFunction(dom, std::move(br), std::move(va));
}

inline StepFunction read_function_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open function spec '" + path + "'");
  return read_function_spec(in);
}

/// K-curve rows: t, K, and the three-band bounds when the couple admits them.
inline std::string kcurve_csv(const KCurve& kc, const QuadConfig& q = {}) {
  std::ostringstream os;
  os << "t,K,lower_bound,upper_bound\n";
  const bool banded = kc.f && kc.couple.kind == CoupleKind::Ces1CesInfUnit;
  for (std::size_t i = 0; i < kc.tgrid.size(); ++i) {
    os << format_g17(kc.tgrid[i]) << "," << format_g17(kc.kvals[i]);
    if (banded && kc.tgrid[i] < 1.0) {
      BandBounds bb = k_band_bounds(kc.tgrid[i], *kc.f, q);
      os << "," << format_g17(bb.lower) << "," << format_g17(bb.upper);
    } else if (banded) {
      double c1 = ces_norm(*kc.f, 1.0, q);
      os << "," << format_g17(c1) << "," << format_g17(c1);
    } else {
      os << ",,";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cesaro
