#include "snwalk/io.hpp"

#include <fmt/format.h>
#include "json.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace snwalk {

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else {
          return v;
        }
      },
      cell);
}

bool needs_quotes(const std::string& s) { return s.find_first_of(",\"\n") != std::string::npos; }

}  // namespace

void DataTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("DataTable: row width does not match header");
  rows.push_back(std::move(row));
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

Cell big_cell(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

void write_csv(std::ostream& out, const DataTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string text = cell_text(row[i]);
      if (needs_quotes(text)) {
        std::string quoted = "\"";
        for (char ch : text) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
        text = quoted + "\"";
      }
      out << (i ? "," : "") << text;
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const DataTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) obj[table.columns[i]] = v;
              else obj[table.columns[i]] = format_real(v);
            } else {
              obj[table.columns[i]] = v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

void write_table(std::ostream& out, const DataTable& table, Format format) {
  if (format == Format::Csv) write_csv(out, table);
  else write_json(out, table);
}

DataTable spectrum_table(const WalkSpectrum& spectrum) {
  DataTable t{{"lambda", "dim", "r_num", "r_den", "s", "zone"}, {}};
  for (const SpectrumEntry& e : spectrum.entries) {
    t.add_row({e.lambda.to_string(), big_cell(e.dim), big_cell(numerator(e.ratio)),
               big_cell(denominator(e.ratio)), e.s, std::string(to_string(e.zone))});
  }
  return t;
}

DataTable tv_curve_table(const std::vector<TvCurvePoint>& points) {
  DataTable t{{"n", "k", "tv_exact", "ubl_sqrt", "wall_ms"}, {}};
  for (const auto& p : points) {
    t.add_row({std::int64_t{p.n}, std::int64_t{p.k}, p.tv_exact, p.ubl_sqrt, p.wall_ms});
  }
  return t;
}

DataTable empirical_table(const EmpiricalDistribution& empirical, const std::vector<double>& exact_mass) {
  DataTable t{{"class", "count", "freq", "exact_prob"}, {}};
  const auto& layout = class_layout(empirical.dist.n);
  for (std::size_t i = 0; i < empirical.counts.size(); ++i) {
    const double freq = static_cast<double>(empirical.counts[i]) / static_cast<double>(empirical.trials);
    t.add_row({layout.index()[i].to_string(), static_cast<std::int64_t>(empirical.counts[i]), freq,
               i < exact_mass.size() ? exact_mass[i] : std::nan("")});
  }
  return t;
}

void append_profile_rows(DataTable& table, const ProfileReport& report) {
  for (const ProfileRow& r : report.rows) {
    table.add_row({report.c, std::int64_t{r.n}, std::int64_t{r.k}, std::int64_t{r.M}, r.tv_exact, r.main_term,
                   r.truncation_error, r.poisson_limit, r.gap});
  }
}

DataTable profile_table(const ProfileReport& report) {
  DataTable t{{"c", "n", "k", "M", "tv_exact", "main_term", "trunc_err", "poisson_limit", "gap"}, {}};
  append_profile_rows(t, report);
  return t;
}

DataTable ds_bound_table(const std::vector<DsBoundReport>& reports) {
  DataTable t{{"n", "c", "k", "c_realized", "ubl_sqrt", "exp_neg_2c", "ratio"}, {}};
  for (const auto& r : reports) {
    t.add_row({std::int64_t{r.n}, r.c, std::int64_t{r.k}, r.c_realized, r.ubl_sqrt, r.decay, r.ratio});
  }
  return t;
}

std::vector<ZoneSummary> summarize_zones(const WalkSpectrum& spectrum, int k) {
  std::vector<ZoneSummary> out;
  for (Zone z : {Zone::A1, Zone::A2, Zone::A3}) {
    ZoneSummary s;
    s.n = spectrum.n;
    s.k = k;
    s.zone = z;
    s.members = zone_members(spectrum, z);
    s.zone_sum = zone_sum(spectrum, k, z);
    for (std::size_t i = 1; i < spectrum.entries.size(); ++i) {
      if (spectrum.entries[i].zone == z) s.max_abs_s = std::max(s.max_abs_s, std::abs(spectrum.entries[i].s));
    }
    out.push_back(s);
  }
  return out;
}

DataTable zones_table(const std::vector<ZoneSummary>& zones) {
  DataTable t{{"n", "k", "zone", "members", "zone_sum", "max_abs_s"}, {}};
  for (const auto& z : zones) {
    t.add_row({std::int64_t{z.n}, std::int64_t{z.k}, std::string(to_string(z.zone)),
               static_cast<std::int64_t>(z.members), z.zone_sum, z.max_abs_s});
  }
  return t;
}

DataTable zone_expressions_table(const std::vector<ZoneBoundExpressions>& rows) {
  DataTable t{{"n", "k", "c_realized", "log_A1", "log_A2", "log_B1", "log_B2", "log_B3"}, {}};
  for (const auto& r : rows) {
    t.add_row({std::int64_t{r.n}, std::int64_t{r.k}, r.c, r.log_a1, r.log_a2, r.log_b1, r.log_b2, r.log_b3});
  }
  return t;
}

}  // namespace snwalk
