#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "moire/bar_align.hpp"
#include "moire/codec.hpp"
#include "moire/grid.hpp"
#include "moire/sequence.hpp"

namespace moire::circular {

struct Ring {
  double radius = 0.0;  // inner radius r_i
  double width = 0.0;   // radial width dr_i
  double outer() const noexcept { return radius + width; }
};

/// Equal-area ring radii: r_i = r_{i-1} + dr_{i-1},
/// dr_i = r_{i-1} dr_{i-1} / (r_{i-1} + dr_{i-1}). Returns rings 0..n-1.
std::vector<Ring> compute_radii(double r0, double dr0, std::size_t n);

struct CircularGeometry {
  double r0 = 64.0;
  double dr0 = 16.0;
  double delta_theta = 0.0;  // angular slot width, radians
  std::size_t ring_count = 0;
  std::vector<Ring> rings;

  static CircularGeometry make(double r0, double dr0, double delta_theta, std::size_t ring_count);

  double inner_radius() const noexcept { return r0; }
  double outer_radius() const noexcept { return rings.empty() ? r0 : rings.back().outer(); }
  std::size_t angular_slots() const noexcept;
  // Ring containing radius `rho`, or -1 outside the annulus.
  long ring_of(double rho) const noexcept;
};

struct RasterSpec {
  std::size_t width = 1024;
  std::size_t height = 1024;
  double rotation = 0.0;  // radians, applied to every slot angle
  std::size_t supersample = 1;
};

enum class PatternKind : std::uint8_t { Sector, Curved };

struct PolarPattern {
  Grid<SlotState> raster;  // rows = y, cols = x
  CircularGeometry geometry;
  double center_x = 0.0;
  double center_y = 0.0;
  PatternKind kind = PatternKind::Sector;
  Scheme scheme = Scheme::TypeI;
};

/// Straight radial stripes: slot j of the encoded sequence fills the angular
/// interval [j*dtheta, (j+1)*dtheta) over the whole annulus.
PolarPattern render_sector_pattern(const DnaSequence& seq, const CircularGeometry& geom, Scheme scheme,
                                   const RasterSpec& raster = {});

/// Ring i carries row i of `stack`; slot j of that row fills angle
/// [j*dtheta, (j+1)*dtheta) within ring i only.
PolarPattern render_curved_pattern(const PatternImage& stack, const CircularGeometry& geom,
                                   const RasterSpec& raster = {});

/// Stack whose row i is `seq` rotated left by i words (cyclically).
PatternImage rotation_stack(const DnaSequence& seq, Scheme scheme, std::size_t rotations);

// Curved pattern of `seq` rotated by 0..ring_count-1 words.
PolarPattern render_curved_pattern(const DnaSequence& seq, const CircularGeometry& geom, Scheme scheme,
                                   const RasterSpec& raster = {});

struct CircularOverlap {
  Grid<std::uint8_t> intensity;
  CircularGeometry geometry;
  double center_x = 0.0;
  double center_y = 0.0;
  Scheme scheme = Scheme::TypeI;
  // Per-ring energy the first pattern would produce against itself.
  std::vector<long> ideal_ring_energy;
};

/// Per-pixel slot product. The first argument is taken as the query; its
/// self-overlap defines the full-match energy of each ring.
CircularOverlap overlap_circular(const PolarPattern& query, const PolarPattern& other);

std::vector<long> ring_energy(const CircularOverlap& img);
std::vector<double> normalized_ring_energy(const CircularOverlap& img);

/// Rings whose normalized energy reaches `threshold` (0-based ring indices).
std::vector<std::size_t> detect_ring(const CircularOverlap& img, double threshold);

}  // namespace moire::circular
