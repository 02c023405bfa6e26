#pragma once

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace specgeo {

/// Global tolerance scale from the SPECGEO_TOL environment variable
/// (default 1.0); every reported tolerance is multiplied by it.
inline double tol_scale() {
  const char* env = std::getenv("SPECGEO_TOL");
  if (!env) return 1.0;
  double v = std::atof(env);
  return v > 0 ? v : 1.0;
}

inline double tol(double base) { return base * tol_scale(); }

struct CheckRecord {
  std::string id;
  std::string status;     // pass | fail | skip
  double deviation = 0;
  double tolerance = 0;   // the value the deviation was judged against
  std::string provenance; // theorem | derived | definition

  static CheckRecord judged(std::string id, double deviation, double tolerance,
                            std::string provenance) {
    CheckRecord r;
    r.id = std::move(id);
    r.deviation = deviation;
    r.tolerance = tolerance;
    r.status = deviation <= tolerance ? "pass" : "fail";
    r.provenance = std::move(provenance);
    return r;
  }
  static CheckRecord boolean(std::string id, bool ok, std::string provenance) {
    CheckRecord r;
    r.id = std::move(id);
    r.status = ok ? "pass" : "fail";
    r.provenance = std::move(provenance);
    return r;
  }
  static CheckRecord skipped(std::string id, std::string provenance) {
    CheckRecord r;
    r.id = std::move(id);
    r.status = "skip";
    r.provenance = std::move(provenance);
    return r;
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> records;
  double wall_seconds = 0; // human summary only, never serialized

  bool pass() const {
    for (auto& r : records)
      if (r.status == "fail") return false;
    return true;
  }
  int failed() const {
    int n = 0;
    for (auto& r : records) n += r.status == "fail";
    return n;
  }
};

/// JSON serialization; wall time stays out so identical argv + seed produce
/// byte-identical output.
inline nlohmann::json to_json(const CheckRecord& r) {
  return nlohmann::json{{"id", r.id},
                        {"status", r.status},
                        {"deviation", r.deviation},
                        {"tolerance", r.tolerance},
                        {"provenance", r.provenance}};
}

inline nlohmann::json to_json(const SuiteReport& rep) {
  nlohmann::json records = nlohmann::json::array();
  for (auto& r : rep.records) records.push_back(to_json(r));
  return nlohmann::json{
      {"suite", rep.suite}, {"overall", rep.pass() ? "pass" : "fail"}, {"records", records}};
}

inline nlohmann::json to_json(const std::vector<SuiteReport>& reps) {
  nlohmann::json out = nlohmann::json::array();
  for (auto& r : reps) out.push_back(to_json(r));
  return out;
}

inline void print_text(std::ostream& os, const SuiteReport& rep, bool with_time = true) {
  os << "== " << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL");
  if (with_time) os << "  (" << rep.wall_seconds << " s)";
  os << "\n";
  for (auto& r : rep.records) {
    os << "   [" << r.status << "] " << r.id;
    if (r.tolerance > 0) os << "  dev=" << r.deviation << " tol=" << r.tolerance;
    os << "  (" << r.provenance << ")\n";
  }
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace specgeo
