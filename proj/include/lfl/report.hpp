#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lfl {

/// One offending grid point of a verification sweep.
struct Offender {
  std::string input;
  double residual = 0.0;
};

/// Outcome of a named numerical check. `pass` is always derived from the
/// error and tolerance; details keep the ten worst offenders, largest first.
class VerificationReport {
 public:
  static constexpr std::size_t kMaxDetails = 10;

  VerificationReport() = default;
  VerificationReport(std::string check_name, std::string grid_description, double tolerance);

  /// Fold one residual into the report.
  void record(const std::string& input, double residual);

  /// Force a failure unrelated to a single residual (e.g. a violated exact check).
  void fail(const std::string& input);

  void set_runtime_ms(std::int64_t ms) { runtime_ms_ = ms; }

  const std::string& check_name() const { return check_name_; }
  const std::string& grid_description() const { return grid_; }
  double max_abs_error() const { return max_abs_error_; }
  double tolerance() const { return tolerance_; }
  bool pass() const { return max_abs_error_ <= tolerance_; }
  std::int64_t runtime_ms() const { return runtime_ms_; }
  const std::vector<Offender>& details() const { return details_; }
  std::size_t points() const { return points_; }

  nlohmann::ordered_json to_json() const;

 private:
  std::string check_name_;
  std::string grid_;
  double tolerance_ = 0.0;
  double max_abs_error_ = 0.0;
  std::int64_t runtime_ms_ = 0;
  std::size_t points_ = 0;
  std::vector<Offender> details_;
};

}  // namespace lfl
