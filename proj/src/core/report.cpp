#include "lfl/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lfl {

VerificationReport::VerificationReport(std::string check_name, std::string grid_description,
                                       double tolerance)
    : check_name_(std::move(check_name)), grid_(std::move(grid_description)), tolerance_(tolerance) {}

void VerificationReport::record(const std::string& input, double residual) {
  ++points_;
  // NaN residuals must fail the check; map them to the largest double.
  if (!(residual == residual)) residual = std::numeric_limits<double>::max();
  if (std::isinf(residual)) residual = std::numeric_limits<double>::max();
  max_abs_error_ = std::max(max_abs_error_, residual);

  auto pos = std::find_if(details_.begin(), details_.end(),
                          [&](const Offender& o) { return residual > o.residual; });
  if (pos == details_.end() && details_.size() >= kMaxDetails) return;
  details_.insert(pos, Offender{input, residual});
  if (details_.size() > kMaxDetails) details_.pop_back();
}

void VerificationReport::fail(const std::string& input) {
  record(input, std::numeric_limits<double>::max());
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
  for (const auto& d : details_) details.push_back({{"input", d.input}, {"residual", d.residual}});
  return nlohmann::ordered_json{{"check", check_name_},
                        {"grid", grid_},
                        {"max_abs_error", max_abs_error_},
                        {"tolerance", tolerance_},
                        {"pass", pass()},
                        {"runtime_ms", runtime_ms_},
                        {"details", details}};
}

}  // namespace lfl
