#include "wcga/json_io.hpp"

namespace wcga {

using nlohmann::json;

json lpq_to_json(const LpqVector& x) {
  json entries = json::array();
  for (const auto& [i, v] : x.entries()) {
    entries.push_back({{"j", i.j}, {"k", i.k}, {"v", v}});
  }
  return json{{"space", "lpq"}, {"p", x.params().p}, {"q", x.params().q}, {"entries", entries}};
}

LpqVector lpq_from_json(const json& j) {
  if (j.value("space", "lpq") != "lpq") throw ParamError("expected an lpq vector");
  LpqVector x(LpqParams(j.at("p").get<double>(), j.at("q").get<double>()));
  for (const auto& e : j.value("entries", json::array())) {
    const int jj = e.at("j").get<int>();
    const int kk = e.at("k").get<int>();
    if (x.at(jj, kk) != 0.0) throw ParamError("duplicate (j,k) entry in lpq vector");
    x.set(jj, kk, e.at("v").get<double>());
  }
  return x;
}

json rect_to_json(const Rectangle& r) {
  json axes = json::array();
  for (const auto& a : r.axes()) {
    if (a.is_zero()) {
      axes.push_back("zero");
    } else {
      axes.push_back({{"j", a.level()}, {"k", a.offset()}});
    }
  }
  return axes;
}

Rectangle rect_from_json(const json& j) {
  std::vector<DyadicAxisIndex> axes;
  for (const auto& a : j) {
    if (a.is_string()) {
      if (a.get<std::string>() != "zero") throw ParamError("unknown axis tag");
      axes.push_back(DyadicAxisIndex::zero());
    } else {
      axes.push_back(DyadicAxisIndex::interval(a.at("j").get<int>(), a.at("k").get<std::int64_t>()));
    }
  }
  return Rectangle(std::move(axes));
}

json fpq_to_json(const FpqVector& x) {
  json entries = json::array();
  for (const auto& [I, v] : x.entries()) {
    entries.push_back({{"rect", rect_to_json(I)}, {"v", v}});
  }
  return json{{"space", "fpq"},
              {"p", x.params().p},
              {"q", x.params().q},
              {"d", x.params().d},
              {"entries", entries}};
}

FpqVector fpq_from_json(const json& j) {
  if (j.value("space", "fpq") != "fpq") throw ParamError("expected an fpq vector");
  FpqVector x(FpqParams(j.at("p").get<double>(), j.at("q").get<double>(), j.at("d").get<int>()));
  for (const auto& e : j.value("entries", json::array())) {
    const Rectangle I = rect_from_json(e.at("rect"));
    if (x.at(I) != 0.0) throw ParamError("duplicate rectangle entry in fpq vector");
    x.set(I, e.at("v").get<double>());
  }
  return x;
}

json step_to_json(const StepFunction& f) {
  return json{{"d", f.d}, {"grid_level", f.level}, {"values", f.values}};
}

StepFunction step_from_json(const json& j, int default_d) {
  const int d = j.value("d", default_d);
  const int level = j.at("grid_level").get<int>();
  auto values = j.at("values").get<std::vector<double>>();
  return StepFunction(d, level, std::move(values));
}

namespace {
template <class Index>
json trace_impl(const GreedyTrace<Index>& t, json (*idx)(const Index&)) {
  json sel = json::array();
  for (const auto& i : t.selected) sel.push_back(idx(i));
  return json{{"selected", sel},
              {"residual_norms", t.residual_norms},
              {"terminated", to_string(t.terminated_reason)}};
}
}  // namespace

json trace_to_json(const GreedyTrace<LpqIndex>& t) {
  return trace_impl<LpqIndex>(t, [](const LpqIndex& i) { return json{{"j", i.j}, {"k", i.k}}; });
}

json trace_to_json(const GreedyTrace<Rectangle>& t) {
  return trace_impl<Rectangle>(t, [](const Rectangle& r) { return rect_to_json(r); });
}

}  // namespace wcga
