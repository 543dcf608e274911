#include "moire/circular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "moire/error.hpp"

namespace moire::circular {

std::vector<Ring> compute_radii(double r0, double dr0, std::size_t n) {
  if (!(r0 > 0.0) || !(dr0 > 0.0)) throw std::invalid_argument("ring radii must be positive");
  if (n == 0) throw std::invalid_argument("at least one ring is required");
  std::vector<Ring> rings;
  rings.reserve(n);
  rings.push_back({r0, dr0});
  for (std::size_t i = 1; i < n; ++i) {
    const Ring& p = rings.back();
    rings.push_back({p.radius + p.width, p.radius * p.width / (p.radius + p.width)});
  }
  return rings;
}

CircularGeometry CircularGeometry::make(double r0, double dr0, double delta_theta,
                                        std::size_t ring_count) {
  if (!(delta_theta > 0.0) || delta_theta > 2.0 * std::numbers::pi)
    throw std::invalid_argument("angular slot width must lie in (0, 2pi]");
  CircularGeometry g;
  g.r0 = r0;
  g.dr0 = dr0;
  g.delta_theta = delta_theta;
  g.ring_count = ring_count;
  g.rings = compute_radii(r0, dr0, ring_count);
  return g;
}

std::size_t CircularGeometry::angular_slots() const noexcept {
  // Guard against 2pi/dtheta landing a hair under an integer.
  return static_cast<std::size_t>(std::floor(2.0 * std::numbers::pi / delta_theta + 1e-9));
}

long CircularGeometry::ring_of(double rho) const noexcept {
  if (rings.empty() || rho < rings.front().radius || rho >= rings.back().outer()) return -1;
  auto it = std::upper_bound(rings.begin(), rings.end(), rho,
                             [](double v, const Ring& r) { return v < r.radius; });
  return static_cast<long>(it - rings.begin()) - 1;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Slot state of the point (px, py), or Dark outside the annulus.
template <typename StateAt>
SlotState state_at_point(const CircularGeometry& g, double rotation, double px, double py,
                         StateAt&& state_at) {
  const long ring = g.ring_of(std::hypot(px, py));
  if (ring < 0) return SlotState::Dark;
  double phi = std::fmod(std::atan2(py, px) - rotation, kTwoPi);
  if (phi < 0) phi += kTwoPi;
  const auto slot = static_cast<std::size_t>(phi / g.delta_theta);
  return state_at(static_cast<std::size_t>(ring), slot);
}

// Pixel-center sampling, or a k*k grid of samples per pixel with majority vote
// when supersampling (a pixel takes a lit state only if more than half of its
// samples carry it).
template <typename StateAt>
void rasterize(PolarPattern& p, const RasterSpec& spec, StateAt&& state_at) {
  const std::size_t k = spec.supersample;
  const double step = 1.0 / static_cast<double>(k);
  for (std::size_t y = 0; y < spec.height; ++y) {
    for (std::size_t x = 0; x < spec.width; ++x) {
      if (k == 1) {
        p.raster(y, x) = state_at_point(p.geometry, spec.rotation, static_cast<double>(x) + 0.5 - p.center_x,
                                        static_cast<double>(y) + 0.5 - p.center_y, state_at);
        continue;
      }
      std::array<std::size_t, 4> votes{};
      for (std::size_t sy = 0; sy < k; ++sy)
        for (std::size_t sx = 0; sx < k; ++sx) {
          const double px = static_cast<double>(x) + (static_cast<double>(sx) + 0.5) * step - p.center_x;
          const double py = static_cast<double>(y) + (static_cast<double>(sy) + 0.5) * step - p.center_y;
          ++votes[static_cast<std::size_t>(state_at_point(p.geometry, spec.rotation, px, py, state_at))];
        }
      SlotState s = SlotState::Dark;
      for (std::size_t v = 1; v < votes.size(); ++v)
        if (2 * votes[v] > k * k) s = static_cast<SlotState>(v);
      p.raster(y, x) = s;
    }
  }
}

PolarPattern blank(const CircularGeometry& geom, const RasterSpec& spec, PatternKind kind, Scheme scheme) {
  if (spec.width == 0 || spec.height == 0) throw std::invalid_argument("empty raster");
  if (spec.supersample == 0) throw std::invalid_argument("supersample factor must be at least 1");
  PolarPattern p;
  p.raster = Grid<SlotState>(spec.height, spec.width);
  p.geometry = geom;
  p.center_x = static_cast<double>(spec.width) / 2.0;
  p.center_y = static_cast<double>(spec.height) / 2.0;
  p.kind = kind;
  p.scheme = scheme;
  return p;
}

void check_slots(std::size_t slots, const CircularGeometry& geom) {
  if (slots > geom.angular_slots())
    throw TooManySlots(std::to_string(slots) + " slots do not fit " +
                       std::to_string(geom.angular_slots()) + " angular positions");
}

}  // namespace

PolarPattern render_sector_pattern(const DnaSequence& seq, const CircularGeometry& geom, Scheme scheme,
                                   const RasterSpec& raster) {
  const SlotRow code = encode_sequence(seq, scheme);
  check_slots(code.size(), geom);
  PolarPattern p = blank(geom, raster, PatternKind::Sector, scheme);
  rasterize(p, raster, [&](std::size_t, std::size_t slot) {
    return slot < code.size() ? code[slot] : SlotState::Dark;
  });
  return p;
}

PolarPattern render_curved_pattern(const PatternImage& stack, const CircularGeometry& geom,
                                   const RasterSpec& raster) {
  check_slots(stack.slots.cols(), geom);
  if (stack.rows() > geom.ring_count)
    throw TooFewRings(std::to_string(stack.rows()) + " shifts need as many rings, geometry has " +
                      std::to_string(geom.ring_count));
  PolarPattern p = blank(geom, raster, PatternKind::Curved, stack.scheme);
  rasterize(p, raster, [&](std::size_t ring, std::size_t slot) {
    return (ring < stack.rows() && slot < stack.slots.cols()) ? stack.slots(ring, slot) : SlotState::Dark;
  });
  return p;
}

PatternImage rotation_stack(const DnaSequence& seq, Scheme scheme, std::size_t rotations) {
  const SlotRow code = encode_sequence(seq, scheme);
  const std::size_t wl = word_length(scheme);
  PatternImage img{Grid<SlotState>(rotations, code.size()), scheme, 1};
  for (std::size_t r = 0; r < rotations; ++r) {
    const std::size_t offset = (r * wl) % code.size();
    auto row = img.slots.row(r);
    std::rotate_copy(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(offset), code.end(),
                     row.begin());
  }
  return img;
}

PolarPattern render_curved_pattern(const DnaSequence& seq, const CircularGeometry& geom, Scheme scheme,
                                   const RasterSpec& raster) {
  return render_curved_pattern(rotation_stack(seq, scheme, geom.ring_count), geom, raster);
}

CircularOverlap overlap_circular(const PolarPattern& query, const PolarPattern& other) {
  if (query.raster.rows() != other.raster.rows() || query.raster.cols() != other.raster.cols())
    throw DimensionMismatch("polar rasters differ in size");
  if (query.center_x != other.center_x || query.center_y != other.center_y)
    throw DimensionMismatch("polar patterns are not concentric");
  if (query.geometry.rings.size() != other.geometry.rings.size())
    throw DimensionMismatch("polar patterns use different ring geometries");

  CircularOverlap out;
  out.intensity = Grid<std::uint8_t>(query.raster.rows(), query.raster.cols());
  out.geometry = query.geometry;
  out.center_x = query.center_x;
  out.center_y = query.center_y;
  out.scheme = query.scheme;
  out.ideal_ring_energy.assign(query.geometry.rings.size(), 0);

  for (std::size_t y = 0; y < query.raster.rows(); ++y) {
    const double dy = static_cast<double>(y) + 0.5 - out.center_y;
    for (std::size_t x = 0; x < query.raster.cols(); ++x) {
      const SlotState a = query.raster(y, x);
      out.intensity(y, x) = static_cast<std::uint8_t>(slot_product(a, other.raster(y, x)));
      if (a == SlotState::Dark) continue;
      const long ring = out.geometry.ring_of(std::hypot(static_cast<double>(x) + 0.5 - out.center_x, dy));
      if (ring >= 0) out.ideal_ring_energy[static_cast<std::size_t>(ring)] += 1;
    }
  }
  return out;
}

std::vector<long> ring_energy(const CircularOverlap& img) {
  std::vector<long> energy(img.geometry.rings.size(), 0);
  for (std::size_t y = 0; y < img.intensity.rows(); ++y) {
    const double dy = static_cast<double>(y) + 0.5 - img.center_y;
    for (std::size_t x = 0; x < img.intensity.cols(); ++x) {
      const auto v = img.intensity(y, x);
      if (v == 0) continue;
      const long ring = img.geometry.ring_of(std::hypot(static_cast<double>(x) + 0.5 - img.center_x, dy));
      if (ring >= 0) energy[static_cast<std::size_t>(ring)] += v;
    }
  }
  return energy;
}

std::vector<double> normalized_ring_energy(const CircularOverlap& img) {
  const auto energy = ring_energy(img);
  std::vector<double> out(energy.size(), 0.0);
  for (std::size_t i = 0; i < energy.size(); ++i)
    if (img.ideal_ring_energy[i] > 0)
      out[i] = static_cast<double>(energy[i]) / static_cast<double>(img.ideal_ring_energy[i]);
  return out;
}

std::vector<std::size_t> detect_ring(const CircularOverlap& img, double threshold) {
  if (threshold < 0.0 || threshold > 1.0) throw std::invalid_argument("threshold must lie in [0, 1]");
  const auto norm = normalized_ring_energy(img);
  std::vector<std::size_t> rings;
  for (std::size_t i = 0; i < norm.size(); ++i)
    if (norm[i] >= threshold) rings.push_back(i);
  return rings;
}

}  // namespace moire::circular
