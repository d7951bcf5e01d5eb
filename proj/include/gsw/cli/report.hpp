#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gsw::cli {

// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

struct ChartSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

// Static SVG line chart with axes, ticks and a legend. Output depends only
// on the arguments.
std::string render_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                              const std::vector<ChartSeries>& series);

double mean(const std::vector<double>& values);
// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_std(const std::vector<double>& values);

}  // namespace gsw::cli
