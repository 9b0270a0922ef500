#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "padiclab/realization.hpp"

namespace padiclab {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Wire formats. Rationals travel as "num/den" strings (the "/den" part is
// omitted for integers), complex entries as [re, im] pairs.
// ---------------------------------------------------------------------------

inline Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex entries must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array");
  std::size_t n = j.size();
  std::size_t m = j[0].is_array() ? j[0].size() : 0;
  if (m == 0) throw std::invalid_argument("matrix rows must be nonempty arrays");
  ComplexMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != m)
      throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t k = 0; k < m; ++k) out(i, k) = complex_from_json(j[i][k]);
  }
  return out;
}

inline Json test_function_to_json(const TestFunction& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(Json{{"center", to_string(t.ball.center().value())},
                         {"gamma", t.ball.radius_exp()},
                         {"re", t.coeff.real()},
                         {"im", t.coeff.imag()}});
  }
  return Json{{"p", f.prime()}, {"terms", std::move(terms)}};
}

inline TestFunction test_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("terms"))
    throw std::invalid_argument("test function needs fields p and terms");
  std::uint64_t p = j.at("p").get<std::uint64_t>();
  TestFunction f(p);
  for (const auto& t : j.at("terms")) {
    Ball b(p, parse_rational(t.at("center").get<std::string>()), t.at("gamma").get<long>());
    f.add_term(b, Complex{t.at("re").get<double>(), t.at("im").get<double>()});
  }
  return f.canonicalize();
}

inline Json wavelet_index_to_json(const WaveletIndex& idx) {
  return Json{{"N", idx.level()}, {"j", idx.rotation()}, {"eps", to_string(idx.coset())}};
}

inline WaveletIndex wavelet_index_from_json(std::uint64_t p, const Json& j) {
  return WaveletIndex(p, j.at("N").get<long>(), j.at("j").get<long>(),
                      parse_rational(j.at("eps").get<std::string>()));
}

inline Json expansion_to_json(const WaveletExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& [idx, c] : e.coeffs()) {
    Json entry = wavelet_index_to_json(idx);
    entry["re"] = c.real();
    entry["im"] = c.imag();
    coeffs.push_back(std::move(entry));
  }
  Json out{{"p", e.prime()},
           {"coeffs", std::move(coeffs)},
           {"l2_tail", e.l2_tail()},
           {"sup_tail", e.sup_tail()}};
  if (e.tail_floor())
    out["tail_floor"] = *e.tail_floor();
  else
    out["tail_floor"] = nullptr;
  return out;
}

inline WaveletExpansion expansion_from_json(const Json& j) {
  std::uint64_t p = j.at("p").get<std::uint64_t>();
  WaveletExpansion e(p);
  for (const auto& entry : j.at("coeffs")) {
    e.add(wavelet_index_from_json(p, entry),
          Complex{entry.at("re").get<double>(), entry.at("im").get<double>()});
  }
  std::optional<long> floor;
  if (j.contains("tail_floor") && !j.at("tail_floor").is_null())
    floor = j.at("tail_floor").get<long>();
  e.set_tails(j.value("l2_tail", 0.0), j.value("sup_tail", 0.0), floor);
  return e;
}

inline Json interaction_config_to_json(const InteractionConfig& cfg) {
  Json points = Json::array();
  for (const auto& x : cfg.points()) points.push_back(x.str());
  Json out{{"p", cfg.prime()},
           {"alpha", cfg.alpha()},
           {"points", std::move(points)},
           {"B", matrix_to_json(cfg.coupling())},
           {"r", cfg.diagonal_regularization()}};
  if (cfg.eta_matrix()) out["Y"] = matrix_to_json(*cfg.eta_matrix());
  return out;
}

inline InteractionConfig interaction_config_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be an object");
  for (const char* key : {"p", "alpha", "points", "B"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("config is missing field '") + key + "'");
  std::uint64_t p = j.at("p").get<std::uint64_t>();
  double alpha = j.at("alpha").get<double>();
  std::vector<PadicRational> points;
  for (const auto& s : j.at("points")) {
    if (!s.is_string()) throw std::invalid_argument("points must be rational strings");
    points.emplace_back(p, parse_rational(s.get<std::string>()));
  }
  ComplexMatrix B = matrix_from_json(j.at("B"));
  double r = j.value("r", 0.0);
  std::optional<ComplexMatrix> Y;
  if (j.contains("Y") && !j.at("Y").is_null()) Y = matrix_from_json(j.at("Y"));
  return InteractionConfig(p, alpha, std::move(points), std::move(B), r, std::move(Y));
}

}  // namespace padiclab
