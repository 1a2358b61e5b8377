#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "borderline/ideal.hpp"

namespace borderline {

using Json = nlohmann::json;

// Wall-clock stopwatch for the timings section of reports.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Every analysis routine reports through the same JSON envelope:
//   { "procedure": ..., "input": {...}, "verdict": ...,
//     "certificates": [ {"name": ..., ...}, ... ], "timings": {...} }
Json make_report(const std::string& procedure, Json input);
void set_verdict(Json& report, const std::string& verdict);
void add_certificate(Json& report, const std::string& name, Json data);
void add_check(Json& report, const std::string& name, bool holds);
void set_timing(Json& report, double total_ms);

// Serialisations of core objects.
Json ideal_json(const Ideal& I);
Json poly_list_json(const std::vector<Polynomial>& ps);
Json multidegree_json(const Multidegree& u);

// Copy of a report with the volatile parts (timings) removed, so two runs
// can be compared byte for byte.
Json strip_timings(Json report);

std::string render_report(const Json& report, bool pretty = true);

}  // namespace borderline
