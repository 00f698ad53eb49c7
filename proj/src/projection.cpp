#include "stm/projection.hpp"

#include <cmath>
#include <string>

#include "stm/error.hpp"

namespace stm::data {

namespace {
constexpr double kEarthRadiusKm = 6371.0088;
constexpr double kDegToRad = M_PI / 180.0;
}  // namespace

ConicProjection::ConicProjection(const GeoBox& domain)
    : ConicProjection(domain, 0.5 * (domain.lon_min + domain.lon_max),
                      0.5 * (domain.lat_min + domain.lat_max),
                      domain.lat_min + (domain.lat_max - domain.lat_min) / 6.0,
                      domain.lat_max - (domain.lat_max - domain.lat_min) / 6.0) {}

ConicProjection::ConicProjection(const GeoBox& domain, double lon0, double lat0, double lat1,
                                 double lat2)
    : box_(domain), lon0_(lon0), lat0_(lat0), lat1_(lat1), lat2_(lat2) {
  double phi1 = lat1_ * kDegToRad;
  double phi2 = lat2_ * kDegToRad;
  double phi0 = lat0_ * kDegToRad;
  n_ = 0.5 * (std::sin(phi1) + std::sin(phi2));
  if (std::abs(n_) < 1e-12) throw Error("conic projection: degenerate standard parallels");
  c_ = std::cos(phi1) * std::cos(phi1) + 2.0 * n_ * std::sin(phi1);
  rho0_ = kEarthRadiusKm / n_ * std::sqrt(c_ - 2.0 * n_ * std::sin(phi0));
}

std::pair<double, double> ConicProjection::forward(double lon, double lat) const {
  if (!box_.contains(lon, lat))
    throw Error("location (" + std::to_string(lon) + ", " + std::to_string(lat) +
                ") outside the configured domain box");
  double phi = lat * kDegToRad;
  double rho = kEarthRadiusKm / n_ * std::sqrt(c_ - 2.0 * n_ * std::sin(phi));
  double theta = n_ * (lon - lon0_) * kDegToRad;
  return {rho * std::sin(theta), rho0_ - rho * std::cos(theta)};
}

std::pair<double, double> ConicProjection::inverse(double x, double y) const {
  double rho = std::copysign(std::hypot(x, rho0_ - y), n_);
  double theta = std::atan2(x, rho0_ - y);
  double lon = lon0_ + theta / n_ / kDegToRad;
  double s = (c_ - (rho * n_ / kEarthRadiusKm) * (rho * n_ / kEarthRadiusKm)) / (2.0 * n_);
  double lat = std::asin(std::fmin(1.0, std::fmax(-1.0, s))) / kDegToRad;
  return {lon, lat};
}

}  // namespace stm::data
