#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fst/bounds.hpp"
#include "fst/certify.hpp"
#include "fst/descent.hpp"
#include "fst/module.hpp"
#include "fst/strength.hpp"

// JSON encodings of results. Polynomials are written in the input grammar;
// +∞ is the string "inf".
namespace fst::report {

using nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline ordered_json extended(const ExtendedHeight& h) {
  if (h.is_infinite()) return "inf";
  return h.value();
}

template <CoefficientField F>
ordered_json polys(const std::vector<Polynomial<F>>& ps) {
  ordered_json a = ordered_json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

template <CoefficientField F>
ordered_json forms(const std::vector<Form<F>>& fs) {
  ordered_json a = ordered_json::array();
  for (const auto& f : fs) a.push_back(f.poly().to_string());
  return a;
}

template <CoefficientField F>
ordered_json matrix(const PolyMatrix<F>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(polys(m.row(r)));
  return rows;
}

template <CoefficientField F>
ordered_json witness(const CollapseWitness<F>& w) {
  ordered_json pairs = ordered_json::array();
  for (const auto& [g, h] : w.pairs()) pairs.push_back({g.poly().to_string(), h.poly().to_string()});
  return {{"target", w.target().poly().to_string()}, {"k", w.k()}, {"pairs", pairs}};
}

inline ordered_json strength(const StrengthReport& r) {
  ordered_json j;
  j["lower"] = extended(r.lower);
  j["upper"] = extended(r.upper);
  j["exact"] = r.exact ? extended(*r.exact) : ordered_json(nullptr);
  j["field_caveat"] = r.field_caveat;
  j["complete"] = r.complete;
  j["jacobian_height"] = extended(r.jacobian_height);
  j["jacobian_bound"] = extended(r.jacobian_bound);
  j["witness"] = r.witness ? witness(*r.witness) : ordered_json(nullptr);
  j["candidates"] = r.candidates;
  return j;
}

inline ordered_json heights(const std::vector<HeightRecord>& hs) {
  ordered_json a = ordered_json::array();
  for (const auto& h : hs) a.push_back({{"ideal", h.ideal}, {"height", extended(h.height)}});
  return a;
}

template <CoefficientField F>
ordered_json reta(const RetaCertificate<F>& c) {
  ordered_json j;
  j["forms"] = forms(c.forms);
  j["eta"] = c.eta;
  j["codim_singular"] = c.locus.codim;
  j["smooth"] = c.locus.smooth;
  j["verdict"] = c.pass ? "pass" : "fail";
  j["heights"] = heights(c.locus.heights);
  j["caveat"] = "Jacobian criterion; in positive characteristic the computed singular locus may be too large, "
                "so a pass is sound and a fail is one-sided";
  return j;
}

inline ordered_json minors(const MinorsHeightReport& r) {
  return {{"row_degrees", r.row_degrees},
          {"b", extended(r.b)},
          {"minors_height", extended(r.minors_height)},
          {"required", extended(r.required)},
          {"verdict", r.holds ? "pass" : "fail"}};
}

inline ordered_json descent(const DescentTrace& t) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"before", s.before.entries()},
                     {"degree", s.degree},
                     {"regime", s.regime},
                     {"witness", witness(s.witness)},
                     {"after", s.after.entries()}});
  }
  ordered_json j;
  j["policy"] = t.policy;
  j["steps"] = steps;
  j["final_generators"] = forms(t.final_generators);
  j["s"] = t.final_generators.size();
  j["complete"] = t.complete;
  j["exhaustive"] = t.exhaustive;
  j["membership"] = t.members;
  j["all_members"] = t.all_members;
  j["regular_sequence"] = t.regular_sequence ? ordered_json(*t.regular_sequence) : ordered_json(nullptr);
  return j;
}

template <CoefficientField F>
ordered_json resolution(const FreeResolution<F>& r) {
  ordered_json mats = ordered_json::array();
  for (const auto& m : r.matrices) mats.push_back(matrix(m));
  return {{"length", r.length()}, {"ranks", r.ranks}, {"minimal", r.minimal}, {"is_complex", r.is_complex()},
          {"matrices", mats}};
}

}  // namespace fst::report
