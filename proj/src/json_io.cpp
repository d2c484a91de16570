#include "loopspace/json_io.hpp"

#include "loopspace/dsl.hpp"

namespace loopspace::json_io {

json to_json(const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms())
    terms.push_back({{"coefficient", to_fraction_string(c)}, {"monomial", x.algebra().format(m)}});
  return terms;
}

json to_json(const BettiTable& t) {
  json j = {{"max_degree", t.max_degree}, {"dims", t.dims}};
  if (t.representatives) {
    json reps = json::array();
    for (const auto& degree : *t.representatives) {
      json row = json::array();
      for (const auto& x : degree) row.push_back(to_json(x));
      reps.push_back(std::move(row));
    }
    j["representatives"] = std::move(reps);
  }
  return j;
}

json to_json(const DgaModel& m) {
  json gens = json::array();
  for (const auto& g : m.algebra().declared()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  json diffs = json::array();
  for (const auto& d : m.declared_differentials()) {
    json terms = json::array();
    for (const auto& t : d.value) {
      json factors = json::array();
      for (const auto& f : t.factors) factors.push_back({{"generator", f.generator}, {"exponent", f.exponent}});
      terms.push_back({{"coefficient", to_fraction_string(t.coefficient)}, {"factors", std::move(factors)}});
    }
    diffs.push_back({{"generator", d.generator}, {"value", dsl::print_poly(d.value)}, {"terms", std::move(terms)}});
  }
  return {{"name", m.name()}, {"generators", std::move(gens)}, {"differentials", std::move(diffs)}};
}

json to_json(const ModelReport& r) {
  return {{"passed", r.passed()},
          {"degree_raising", r.degree_raising},
          {"d_squared_zero", r.d_squared_zero},
          {"minimal", r.minimal},
          {"odd_squares_excluded", r.odd_squares_excluded},
          {"degenerate", r.degenerate},
          {"failures", r.failures}};
}

json to_json(const RingReport& r) {
  json j = {{"passed", r.passed},
            {"message", r.message},
            {"expected_dims", r.expected_dims},
            {"actual_dims", r.actual_dims},
            {"failing_degree", r.failing_degree ? json(*r.failing_degree) : json(nullptr)}};
  j["w"] = r.w ? to_json(*r.w) : json(nullptr);
  j["z"] = r.z ? to_json(*r.z) : json(nullptr);
  return j;
}

json to_json(const HomotopyTable& t) {
  json dims = json::array();
  for (const auto& [degree, dim] : t.dims) dims.push_back({{"degree", degree}, {"dim", dim}});
  json pi1 = t.pi1.computed() ? json{{"order", t.pi1.order}, {"name", "Z" + std::to_string(t.pi1.order)}}
                              : json{{"order", 0}, {"name", "not computed"}};
  return {{"max_degree", t.max_degree}, {"dims", std::move(dims)}, {"pi1", std::move(pi1)}};
}

json to_json(const SpaceFormSpec& s) {
  return {{"n", s.n()}, {"r", s.centralizer_order()}, {"ord", s.element_order()}};
}

json to_json(const GysinReport& r) {
  return {{"passed", r.passed},
          {"message", r.message},
          {"predicted", r.predicted},
          {"failing_degree", r.failing_degree ? json(*r.failing_degree) : json(nullptr)},
          {"convention", "base degrees and maps outside the computed range are zero"}};
}

json to_json(const BottFunction& f) {
  json disc = json::array();
  for (const auto& a : f.discontinuities()) disc.push_back(to_fraction_string(a.turns()));
  return {{"discontinuities", std::move(disc)}, {"arc_values", f.arc_values()}, {"point_values", f.point_values()}};
}

json to_json(const Certificate& c) {
  json params = json::object();
  for (const auto& [k, v] : c.parameters) params[k] = v;
  json survivors = json::array();
  for (const auto& s : c.survivors) survivors.push_back({{"description", s.description}, {"function", to_json(s.function)}});
  json transcript = json::array();
  for (const auto& t : c.transcript)
    transcript.push_back({{"candidate", t.candidate}, {"condition", t.condition}, {"holds", t.holds}, {"detail", t.detail}});
  return {{"kind", to_string(c.kind)},
          {"parameters", std::move(params)},
          {"survivors", std::move(survivors)},
          {"verdict", to_string(c.verdict)},
          {"transcript", std::move(transcript)},
          {"assumptions", c.assumptions}};
}

BettiTable betti_from_json(const json& j) {
  try {
    BettiTable t = BettiTable::from_dims(j.at("dims").get<std::vector<int>>());
    if (j.contains("max_degree") && j.at("max_degree").get<int>() != t.max_degree)
      throw std::invalid_argument("max_degree does not match the length of dims");
    return t;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed Betti table: ") + e.what());
  }
}

json envelope(const std::string& kind, const std::string& input, json result) {
  return {{"kind", kind}, {"input", input}, {"result", std::move(result)}, {"version", kToolkitVersion}};
}

}  // namespace loopspace::json_io
