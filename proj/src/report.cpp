#include "borderline/report.hpp"

namespace borderline {

Json make_report(const std::string& procedure, Json input) {
  Json r;
  r["procedure"] = procedure;
  r["input"] = std::move(input);
  r["verdict"] = "";
  r["certificates"] = Json::array();
  r["timings"] = Json::object();
  return r;
}

void set_verdict(Json& report, const std::string& verdict) {
  report["verdict"] = verdict;
}

void add_certificate(Json& report, const std::string& name, Json data) {
  Json c;
  c["name"] = name;
  c["data"] = std::move(data);
  report["certificates"].push_back(std::move(c));
}

void add_check(Json& report, const std::string& name, bool holds) {
  add_certificate(report, name, Json(holds));
}

void set_timing(Json& report, double total_ms) {
  report["timings"]["total_ms"] = total_ms;
}

Json ideal_json(const Ideal& I) {
  Json gens = Json::array();
  for (const Polynomial& g : I.gens) gens.push_back(g.str());
  Json out;
  out["ring"] = I.R ? I.R->descriptor() : "";
  out["generators"] = std::move(gens);
  return out;
}

Json poly_list_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const Polynomial& p : ps) out.push_back(p.str());
  return out;
}

Json multidegree_json(const Multidegree& u) {
  Json out = Json::array();
  for (int x : u.v) out.push_back(x);
  return out;
}

Json strip_timings(Json report) {
  report.erase("timings");
  return report;
}

std::string render_report(const Json& report, bool pretty) {
  return pretty ? report.dump(2) : report.dump();
}

}  // namespace borderline
