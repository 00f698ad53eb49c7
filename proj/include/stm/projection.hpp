#pragma once

#include <utility>

namespace stm::data {

/// Geographic bounding box, degrees.
struct GeoBox {
  double lon_min = -82.0;
  double lon_max = -66.0;
  double lat_min = 36.0;
  double lat_max = 48.0;
  bool contains(double lon, double lat) const {
    return lon >= lon_min && lon <= lon_max && lat >= lat_min && lat <= lat_max;
  }
};

/// Planar bounding box, km.
struct XYBox {
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  bool contains(double x, double y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
  void expand(double x, double y) {
    if (x < x_min) x_min = x;
    if (x > x_max) x_max = x;
    if (y < y_min) y_min = y;
    if (y > y_max) y_max = y;
  }
};

/// Albers equal-area conic projection on a sphere, centered on a geographic
/// domain. Standard parallels sit one sixth of the latitude span inside the
/// box edges. Output is in km; the domain center maps to (0, 0).
class ConicProjection {
 public:
  explicit ConicProjection(const GeoBox& domain);
  ConicProjection(const GeoBox& domain, double lon0, double lat0, double lat1, double lat2);

  /// Throws stm::Error for coordinates outside the configured domain box.
  std::pair<double, double> forward(double lon, double lat) const;
  std::pair<double, double> inverse(double x, double y) const;

  const GeoBox& domain() const { return box_; }
  double lon0() const { return lon0_; }
  double lat0() const { return lat0_; }
  double lat1() const { return lat1_; }
  double lat2() const { return lat2_; }

 private:
  GeoBox box_;
  double lon0_, lat0_, lat1_, lat2_;
  double n_, c_, rho0_;
};

}  // namespace stm::data
