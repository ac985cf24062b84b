#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betaorder/consequences.hpp"
#include "betaorder/orders.hpp"

namespace betaorder::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// argv[0] is the program name. Output goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err);

// Serializers shared by the verbs. Numbers carry 17 significant digits.
std::string format_number(double v);
std::string verdict_json(const OrderVerdict& verdict);
std::string check_report_json(const NumericCheckReport& report);
std::string check_report_csv(const NumericCheckReport& report);
std::string monotonicity_csv(const MonotonicityReport& report);
std::string monotonicity_json(const MonotonicityReport& report);
std::string exceedance_csv(std::span<const ExceedanceRow> rows);
std::string exceedance_json(std::span<const ExceedanceRow> rows);

// Inverses of the CSV writers. Throw DomainError on malformed input.
NumericCheckReport parse_check_report_csv(std::string_view text);
MonotonicityReport parse_monotonicity_csv(std::string_view text);
std::vector<ExceedanceRow> parse_exceedance_csv(std::string_view text);

}  // namespace betaorder::cli
