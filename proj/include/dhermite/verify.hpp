#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dhermite/param.hpp"
#include "dhermite/variant.hpp"

namespace dhermite {

enum class Status { PASS, FAIL, ILL_DEFINED, DIVERGENT };

std::string to_string(Status s);

// Structured result of one identity check.  Exact-arithmetic checks report
// residual 0 (equal) or 1 (not equal); numeric checks report the maximum
// scaled residual over their grid.  For ILL_DEFINED and DIVERGENT outcomes
// the residual field is not meaningful and is set to -1.
struct CheckReport {
  std::string check_name;
  std::string variant;  // "paper" | "corrected" | "single"
  std::map<std::string, double> params;
  double residual = 0.0;
  double tolerance = 0.0;
  Status status = Status::FAIL;
};

// Optional grid restrictions understood by the individual checks
// (e.g. "n" pins the order, "lambda" pins the deformation parameter).
using Overrides = std::map<std::string, double>;

enum class VariantPolicy { paper, corrected, both };

struct RunSummary {
  std::vector<CheckReport> reports;
  bool pass = false;  // every corrected/single report passed
  std::string error;  // set when the registry cannot run at all
};

class CheckRegistry {
 public:
  using CheckFn = std::function<CheckReport(Variant, const Overrides&)>;

  void add(std::string name, bool has_variants, CheckFn fn);
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;  // registration order
  std::size_t size() const { return entries_.size(); }

  // Runs one named check.  Variant is ignored for single-variant checks.
  // Throws std::invalid_argument for unknown names.
  CheckReport run(const std::string& name, Variant v, const Overrides& overrides = {}) const;

  // Runs every check in registration order under the given policy.
  RunSummary run_all(VariantPolicy policy, const Overrides& overrides = {}) const;

 private:
  struct Entry {
    std::string name;
    bool has_variants;
    CheckFn fn;
  };
  std::vector<Entry> entries_;
};

// The full registry covering every identity of the verification suite.
const CheckRegistry& default_registry();

// Explicit finite-difference grid for the heat-equation cross-check.
// Stability requires dy <= L dx^2 / 2; dy <= 0 selects 0.45 L dx^2,
// adjusted to land on y_max exactly.
struct HeatGrid {
  double x_min = -5.0;
  double x_max = 5.0;
  double dx = 0.01;
  double y_max = 0.1;
  double dy = 0.0;
};

// Marches u_y = (1/L) u_xx from u(x,0) = (Lx)^n with Dirichlet boundary
// values taken from the exact polynomial and compares against the exact
// polynomial at y_max in relative sup-norm over the interior third.
CheckReport heat_fd_check(int n, const DegenerateParam& p, const HeatGrid& grid);

}  // namespace dhermite
