#include "stm/dataset.hpp"

#include <algorithm>
#include <cmath>

#include "stm/csv.hpp"
#include "stm/error.hpp"

namespace stm::data {

const Site& SiteTable::at(const std::string& id) const {
  auto it = index.find(id);
  if (it == index.end()) throw Error("unknown site_id: " + id);
  return sites[it->second];
}

void SiteTable::add(Site s) {
  if (index.count(s.site_id)) throw Error("duplicate site_id: " + s.site_id);
  index[s.site_id] = static_cast<int>(sites.size());
  sites.push_back(std::move(s));
}

XYBox SiteTable::xy_bounds() const {
  if (sites.empty()) throw Error("xy_bounds: empty site table");
  XYBox b{sites[0].x, sites[0].x, sites[0].y, sites[0].y};
  for (const auto& s : sites) b.expand(s.x, s.y);
  return b;
}

namespace {

// Modal gap between consecutive observation days, snapped to the nearest of
// the 1 / 3 / 6 day cadences.
int infer_cadence(const std::vector<long>& serial_days) {
  if (serial_days.size() < 2) return 1;
  std::map<long, int> gap_count;
  for (std::size_t i = 1; i < serial_days.size(); ++i) {
    long g = serial_days[i] - serial_days[i - 1];
    if (g > 0) gap_count[g]++;
  }
  if (gap_count.empty()) return 1;
  long modal = 1;
  int best = -1;
  for (const auto& [g, c] : gap_count) {
    if (c > best) {
      best = c;
      modal = g;
    }
  }
  int cadence = 1;
  long best_dist = std::abs(modal - 1);
  for (int c : {3, 6}) {
    long d = std::abs(modal - c);
    if (d < best_dist) {
      best_dist = d;
      cadence = c;
    }
  }
  return cadence;
}

}  // namespace

AggregationResult aggregate_monthly(const std::vector<DailyRecord>& records,
                                    const ScheduleMap* schedule) {
  AggregationResult result;

  // site -> day serial -> (sum, count); duplicates for one site-day average.
  std::map<std::string, std::map<long, std::pair<double, int>>> by_site;
  for (const auto& rec : records) {
    if (!(rec.value > 0.0)) {
      result.rejected.push_back({rec, "nonpositive daily value"});
      continue;
    }
    long serial = days_from_civil(rec.year, rec.month, rec.day);
    auto& cell = by_site[rec.site_id][serial];
    cell.first += rec.value;
    cell.second += 1;
  }

  for (const auto& [site_id, days] : by_site) {
    std::vector<long> serials;
    serials.reserve(days.size());
    for (const auto& [serial, _] : days) serials.push_back(serial);
    int cadence = infer_cadence(serials);

    // Group the site's days by calendar month.
    std::map<int, std::pair<double, int>> month_sum;  // ym -> (sum of day means, n_days)
    std::map<int, int> month_year, month_month;
    for (const auto& [serial, cell] : days) {
      // Recover the civil date from the serial day (walk via an anchor is
      // unnecessary: invert days_from_civil directly).
      long z = serial + 719468;
      long era = (z >= 0 ? z : z - 146096) / 146097;
      unsigned doe = static_cast<unsigned>(z - era * 146097);
      unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
      long y = static_cast<long>(yoe) + era * 400;
      unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
      unsigned mp = (5 * doy + 2) / 153;
      unsigned m = mp + (mp < 10 ? 3 : -9);
      y += (m <= 2);
      int key = ym_key(static_cast<int>(y), static_cast<int>(m));
      auto& ms = month_sum[key];
      ms.first += cell.first / cell.second;
      ms.second += 1;
      month_year[key] = static_cast<int>(y);
      month_month[key] = static_cast<int>(m);
    }

    for (const auto& [key, sum_n] : month_sum) {
      int year = month_year[key];
      int month = month_month[key];
      int n_days = sum_n.second;
      int n_sched;
      if (schedule) {
        auto it = schedule->find({site_id, year, month});
        if (it == schedule->end())
          throw Error("schedule map missing entry for " + site_id + " " + std::to_string(year) +
                      "-" + std::to_string(month));
        n_sched = it->second;
      } else {
        n_sched = std::max(1, static_cast<int>(std::lround(
                                  static_cast<double>(days_in_month(year, month)) / cadence)));
      }
      // Completeness rules: at least four daily values, and at most one third
      // of the scheduled observations missing.
      if (n_days < 4) continue;
      if (n_days < n_sched - n_sched / 3) continue;
      MonthlyObservation obs;
      obs.site_id = site_id;
      obs.year = year;
      obs.month = month;
      obs.mean_value = sum_n.first / n_days;
      obs.n_days = n_days;
      obs.n_scheduled = n_sched;
      result.observations.push_back(std::move(obs));
    }
  }
  return result;
}

void CovariateFrame::set_ti(const std::string& location, const std::string& name, double value) {
  ti_[name][location] = value;
}

void CovariateFrame::set_tv(const std::string& location, int ym, const std::string& name,
                            double value) {
  tv_[name][{location, ym}] = value;
}

double CovariateFrame::ti(const std::string& location, const std::string& name) const {
  auto nit = ti_.find(name);
  if (nit != ti_.end()) {
    auto it = nit->second.find(location);
    if (it != nit->second.end()) return it->second;
  }
  throw Error("missing time-invariant covariate '" + name + "' at location " + location);
}

double CovariateFrame::tv(const std::string& location, int ym, const std::string& name) const {
  auto nit = tv_.find(name);
  if (nit != tv_.end()) {
    auto it = nit->second.find({location, ym});
    if (it != nit->second.end()) return it->second;
  }
  throw Error("missing time-varying covariate '" + name + "' at location " + location + " month " +
              std::to_string(ym_year(ym)) + "-" + std::to_string(ym_month(ym)));
}

bool CovariateFrame::has_ti(const std::string& location, const std::string& name) const {
  auto nit = ti_.find(name);
  return nit != ti_.end() && nit->second.count(location) > 0;
}

bool CovariateFrame::has_tv(const std::string& location, int ym, const std::string& name) const {
  auto nit = tv_.find(name);
  return nit != tv_.end() && nit->second.count({location, ym}) > 0;
}

std::vector<std::string> CovariateFrame::ti_names() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : ti_) names.push_back(name);
  return names;
}

std::vector<std::string> CovariateFrame::tv_names() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : tv_) names.push_back(name);
  return names;
}

std::vector<CovariateFrame::Row> CovariateFrame::all_rows() const {
  std::vector<Row> rows;
  for (const auto& [name, by_loc] : ti_)
    for (const auto& [loc, value] : by_loc) rows.push_back({loc, std::nullopt, name, value});
  for (const auto& [name, by_key] : tv_)
    for (const auto& [key, value] : by_key) rows.push_back({key.first, key.second, name, value});
  return rows;
}

// ---- CSV ----

std::vector<DailyRecord> read_daily_csv(const std::string& path) {
  CsvTable t = read_csv(path);
  int c_site = t.require_col("site_id");
  int c_date = t.require_col("date");
  int c_value = t.require_col("value");
  std::vector<DailyRecord> out;
  out.reserve(t.rows.size());
  for (const auto& r : t.rows) {
    DailyRecord rec;
    rec.site_id = r[c_site];
    const std::string& d = r[c_date];
    if (d.size() != 10 || d[4] != '-' || d[7] != '-')
      throw Error(path + ": date '" + d + "' is not ISO-8601 (YYYY-MM-DD)");
    rec.year = parse_int(d.substr(0, 4), path);
    rec.month = parse_int(d.substr(5, 2), path);
    rec.day = parse_int(d.substr(8, 2), path);
    rec.value = parse_double(r[c_value], path);
    out.push_back(std::move(rec));
  }
  return out;
}

const char* network_name(Network n) {
  switch (n) {
    case Network::regulatory: return "regulatory";
    case Network::wilderness: return "wilderness";
    default: return "research";
  }
}

const char* siting_name(Siting s) {
  switch (s) {
    case Siting::population_exposure: return "population_exposure";
    case Siting::hotspot: return "hotspot";
    default: return "unknown";
  }
}

Network parse_network(const std::string& s, const std::string& context) {
  if (s == "regulatory") return Network::regulatory;
  if (s == "wilderness") return Network::wilderness;
  if (s == "research") return Network::research;
  throw Error(context + ": unknown network '" + s + "'");
}

Siting parse_siting(const std::string& s, const std::string& context) {
  if (s == "population_exposure") return Siting::population_exposure;
  if (s == "hotspot") return Siting::hotspot;
  if (s == "unknown") return Siting::unknown;
  throw Error(context + ": unknown siting '" + s + "'");
}

SiteTable read_sites_csv(const std::string& path, const ConicProjection& proj) {
  CsvTable t = read_csv(path);
  int c_site = t.require_col("site_id");
  int c_lon = t.require_col("lon");
  int c_lat = t.require_col("lat");
  int c_net = t.require_col("network");
  int c_sit = t.require_col("siting");
  SiteTable table;
  for (const auto& r : t.rows) {
    Site s;
    s.site_id = r[c_site];
    s.lon = parse_double(r[c_lon], path);
    s.lat = parse_double(r[c_lat], path);
    auto [x, y] = proj.forward(s.lon, s.lat);
    s.x = x;
    s.y = y;
    s.network = parse_network(r[c_net], path);
    s.siting = parse_siting(r[c_sit], path);
    table.add(std::move(s));
  }
  return table;
}

void write_sites_csv(const std::string& path, const SiteTable& sites) {
  CsvWriter w(path, {"site_id", "lon", "lat", "network", "siting"});
  for (const auto& s : sites.sites)
    w.row({s.site_id, fmt_double(s.lon), fmt_double(s.lat), network_name(s.network),
           siting_name(s.siting)});
}

std::vector<MonthlyObservation> read_monthly_csv(const std::string& path) {
  CsvTable t = read_csv(path);
  int c_site = t.require_col("site_id");
  int c_year = t.require_col("year");
  int c_month = t.require_col("month");
  int c_mean = t.require_col("mean_value");
  int c_days = t.require_col("n_days");
  int c_sched = t.require_col("n_scheduled");
  std::vector<MonthlyObservation> out;
  out.reserve(t.rows.size());
  for (const auto& r : t.rows) {
    MonthlyObservation m;
    m.site_id = r[c_site];
    m.year = parse_int(r[c_year], path);
    m.month = parse_int(r[c_month], path);
    m.mean_value = parse_double(r[c_mean], path);
    m.n_days = parse_int(r[c_days], path);
    m.n_scheduled = parse_int(r[c_sched], path);
    if (m.month < 1 || m.month > 12)
      throw Error(path + ": month " + std::to_string(m.month) + " out of range");
    if (!(m.mean_value > 0)) throw Error(path + ": nonpositive mean_value for " + m.site_id);
    out.push_back(std::move(m));
  }
  return out;
}

void write_monthly_csv(const std::string& path, const std::vector<MonthlyObservation>& obs) {
  CsvWriter w(path, {"site_id", "year", "month", "mean_value", "n_days", "n_scheduled"});
  for (const auto& m : obs)
    w.row({m.site_id, fmt_int(m.year), fmt_int(m.month), fmt_double(m.mean_value),
           fmt_int(m.n_days), fmt_int(m.n_scheduled)});
}

CovariateFrame read_covariates_csv(const std::string& path) {
  CsvTable t = read_csv(path);
  int c_site = t.col("site_id");
  if (c_site < 0) c_site = t.require_col("grid_id");
  int c_year = t.require_col("year");
  int c_month = t.require_col("month");
  int c_name = t.require_col("name");
  int c_value = t.require_col("value");
  CovariateFrame frame;
  for (const auto& r : t.rows) {
    const std::string& loc = r[c_site];
    double value = parse_double(r[c_value], path);
    if (r[c_year].empty() != r[c_month].empty())
      throw Error(path + ": year and month must be both present or both empty");
    if (r[c_year].empty()) {
      frame.set_ti(loc, r[c_name], value);
    } else {
      int year = parse_int(r[c_year], path);
      int month = parse_int(r[c_month], path);
      frame.set_tv(loc, ym_key(year, month), r[c_name], value);
    }
  }
  return frame;
}

void write_covariates_csv(const std::string& path, const CovariateFrame& frame) {
  CsvWriter w(path, {"site_id", "year", "month", "name", "value"});
  for (const auto& row : frame.all_rows()) {
    std::string year, month;
    if (row.ym) {
      year = fmt_int(ym_year(*row.ym));
      month = fmt_int(ym_month(*row.ym));
    }
    w.row({row.location, year, month, row.name, fmt_double(row.value)});
  }
}

}  // namespace stm::data
