#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "snwalk/profile.hpp"
#include "snwalk/spectrum.hpp"
#include "snwalk/walk.hpp"

namespace snwalk {

enum class Format { Csv, Json };

/// A cell is an integer, a binary64 real, or text. Big integers that do not
/// fit in int64 are carried as decimal text.
using Cell = std::variant<std::int64_t, double, std::string>;

/// Column-ordered output table. CSV rows follow the header; JSON is an array
/// of objects with the same keys in the same order.
struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// 17 significant digits, so binary64 values round-trip.
std::string format_real(double value);
Cell big_cell(const BigInt& value);

void write_csv(std::ostream& out, const DataTable& table);
void write_json(std::ostream& out, const DataTable& table);
void write_table(std::ostream& out, const DataTable& table, Format format);

/// lambda, dim, r_num, r_den, s, zone
DataTable spectrum_table(const WalkSpectrum& spectrum);

struct TvCurvePoint {
  int n = 0;
  int k = 0;
  double tv_exact = 0.0;
  double ubl_sqrt = 0.0;
  double wall_ms = 0.0;
};
/// n, k, tv_exact, ubl_sqrt, wall_ms
DataTable tv_curve_table(const std::vector<TvCurvePoint>& points);

/// class, count, freq, exact_prob (exact_prob is the class mass)
DataTable empirical_table(const EmpiricalDistribution& empirical, const std::vector<double>& exact_mass);

/// c, n, k, M, tv_exact, main_term, trunc_err, poisson_limit, gap
DataTable profile_table(const ProfileReport& report);
void append_profile_rows(DataTable& table, const ProfileReport& report);

/// n, c, k, c_realized, ubl_sqrt, exp_neg_2c, ratio
DataTable ds_bound_table(const std::vector<DsBoundReport>& reports);

struct ZoneSummary {
  int n = 0;
  int k = 0;
  Zone zone = Zone::A1;
  std::size_t members = 0;
  double zone_sum = 0.0;
  double max_abs_s = 0.0;
};
/// n, k, zone, members, zone_sum, max_abs_s
DataTable zones_table(const std::vector<ZoneSummary>& zones);
std::vector<ZoneSummary> summarize_zones(const WalkSpectrum& spectrum, int k);

/// n, k, c_realized, log_A1, log_A2, log_B1, log_B2, log_B3
DataTable zone_expressions_table(const std::vector<ZoneBoundExpressions>& rows);

}  // namespace snwalk
