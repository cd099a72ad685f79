#pragma once

#include <string>
#include <vector>

namespace rbo {

/// Outcome of one verification: the max residual seen, the tolerance it was
/// held against, and optionally how many samples were skipped (domain).
struct CheckReport {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tol = 0.0;
  int skipped = 0;
  std::string note;

  static CheckReport from_residual(std::string name, double residual, double tol) {
    CheckReport r;
    r.name = std::move(name);
    r.residual = residual;
    r.tol = tol;
    r.pass = residual <= tol;
    return r;
  }
};

struct ReportSet {
  std::vector<CheckReport> checks;

  void add(CheckReport r) { checks.push_back(std::move(r)); }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
  }
};

}  // namespace rbo
