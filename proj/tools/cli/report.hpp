#pragma once

// Result tables and their artifacts. Every table has the column order
//
//   experiment, quantity, <parameter columns>, measured, predicted,
//   relative_deviation, refinement, status
//
// `predicted` and `relative_deviation` are empty when no closed form applies,
// `refinement` is empty when no half-resolution recompute was run.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tfmult::cli {

struct ResultRow {
  std::string experiment;
  std::string quantity;
  std::vector<double> params;  // one value per ResultTable::param_names entry
  double measured = 0.0;
  std::optional<double> predicted;
  std::optional<double> refinement;
  bool passed = true;

  std::optional<double> relative_deviation() const;
};

struct ResultTable {
  std::vector<std::string> param_names;
  std::vector<ResultRow> rows;
};

/// Decimal text with 12 significant digits; "inf", "-inf" and "nan" for
/// non-finite values.
std::string format_number(double v);

std::vector<std::string> csv_header(const ResultTable& table);
std::vector<std::string> csv_fields(const ResultTable& table, const ResultRow& row);

void emit_csv(const ResultTable& table, std::ostream& out);
void emit_csv(const ResultTable& table, const std::string& path);

/// Line plot of `y_columns` ("measured", "predicted") against the parameter
/// column `x_column`, one series per quantity and column. A series with a
/// single point is drawn as a marker; an empty table gives bare axes.
void emit_svg(const ResultTable& table, const std::string& x_column,
              const std::vector<std::string>& y_columns, std::ostream& out);
void emit_svg(const ResultTable& table, const std::string& x_column,
              const std::vector<std::string>& y_columns, const std::string& path);

}  // namespace tfmult::cli
