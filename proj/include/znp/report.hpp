#pragma once

#include <string>
#include <utility>
#include <vector>

#include "znp/interval.hpp"

namespace znp {

enum ExitCode : int { kExitPass = 0, kExitUsage = 1, kExitFail = 2, kExitUndecided = 3, kExitBudget = 4 };

int exit_code(Verdict v);

/// Minimal CSV: fields containing separators or quotes are quoted.
std::string csv_row(const std::vector<std::string>& fields);

/// Polyline plot of (x, y) series; `title` goes into the caption only.
std::string svg_line_plot(const std::string& title, const std::vector<std::pair<double, double>>& points);
/// Bar chart with one bar per value.
std::string svg_bar_chart(const std::string& title, const std::vector<double>& values);

}  // namespace znp
