#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "stm/calendar.hpp"
#include "stm/projection.hpp"

namespace stm::data {

struct DailyRecord {
  std::string site_id;
  int year = 0, month = 0, day = 0;
  double value = 0;  // concentration, µg/m³
};

enum class Network : std::uint8_t { regulatory = 0, wilderness = 1, research = 2 };
enum class Siting : std::uint8_t { population_exposure = 0, hotspot = 1, unknown = 2 };

struct Site {
  std::string site_id;
  double lon = 0, lat = 0;  // degrees
  double x = 0, y = 0;      // projected km, derived from (lon, lat)
  Network network = Network::regulatory;
  Siting siting = Siting::unknown;
};

struct SiteTable {
  std::vector<Site> sites;
  std::map<std::string, int> index;

  const Site& at(const std::string& id) const;
  void add(Site s);
  XYBox xy_bounds() const;
};

/// One retained site-month mean. n_days is the count of daily values present,
/// n_scheduled the number of scheduled sampling days for that site-month.
struct MonthlyObservation {
  std::string site_id;
  int year = 0;
  int month = 0;  // 1-12
  double mean_value = 0;
  int n_days = 0;
  int n_scheduled = 0;

  int ym() const { return ym_key(year, month); }
};

struct RejectedRecord {
  DailyRecord record;
  std::string reason;
};

struct AggregationResult {
  std::vector<MonthlyObservation> observations;
  std::vector<RejectedRecord> rejected;
};

/// (site_id, year, month) -> scheduled observation count.
using ScheduleMap = std::map<std::tuple<std::string, int, int>, int>;

/// Monthly aggregation with the completeness rules: a site-month is retained
/// only if it has at least four daily values and at most one third of its
/// scheduled observations missing. Duplicate records for one site-day are
/// averaged first; nonpositive values are rejected with a diagnostic.
/// Without an explicit schedule, n_scheduled is inferred from the site's
/// dominant sampling cadence (every day / 1-in-3 / 1-in-6) by modal gap.
AggregationResult aggregate_monthly(const std::vector<DailyRecord>& records,
                                    const ScheduleMap* schedule = nullptr);

/// Covariate store: time-invariant values per location, time-varying values
/// per location-month. Lookups throw for missing entries, naming the key.
class CovariateFrame {
 public:
  void set_ti(const std::string& location, const std::string& name, double value);
  void set_tv(const std::string& location, int ym, const std::string& name, double value);

  double ti(const std::string& location, const std::string& name) const;
  double tv(const std::string& location, int ym, const std::string& name) const;
  bool has_ti(const std::string& location, const std::string& name) const;
  bool has_tv(const std::string& location, int ym, const std::string& name) const;

  std::vector<std::string> ti_names() const;
  std::vector<std::string> tv_names() const;

  struct Row {
    std::string location;
    std::optional<int> ym;  // empty for time-invariant
    std::string name;
    double value;
  };
  /// Flattened contents in deterministic (name, location, month) order.
  std::vector<Row> all_rows() const;

 private:
  // name -> location -> value
  std::map<std::string, std::map<std::string, double>> ti_;
  // name -> (location, ym) -> value
  std::map<std::string, std::map<std::pair<std::string, int>, double>> tv_;
};

// ---- CSV interfaces (UTF-8, mandatory header, '.' decimal separator) ----

// Daily observations: site_id, date (ISO-8601), value
std::vector<DailyRecord> read_daily_csv(const std::string& path);

// Sites: site_id, lon, lat, network, siting. x/y derived via the projection.
SiteTable read_sites_csv(const std::string& path, const ConicProjection& proj);
void write_sites_csv(const std::string& path, const SiteTable& sites);

// Monthly observations: site_id, year, month, mean_value, n_days, n_scheduled
std::vector<MonthlyObservation> read_monthly_csv(const std::string& path);
void write_monthly_csv(const std::string& path, const std::vector<MonthlyObservation>& obs);

// Covariates, long format: site_id, year, month, name, value
// (year and month empty for time-invariant covariates).
CovariateFrame read_covariates_csv(const std::string& path);
void write_covariates_csv(const std::string& path, const CovariateFrame& frame);

const char* network_name(Network n);
const char* siting_name(Siting s);
Network parse_network(const std::string& s, const std::string& context);
Siting parse_siting(const std::string& s, const std::string& context);

}  // namespace stm::data
