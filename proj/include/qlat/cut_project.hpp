#pragma once

// Cut-and-project realisations of the 3D and 4D quasilattices.
//
// Parallel images are exact and land on the published basis of the target
// module: source coordinates are the module coefficients.  The
// perpendicular map is the Galois conjugate (tau -> 1 - tau) of the
// parallel map, column for column.  With this normalisation the two maps
// are orthogonal projections only up to a fixed rescaling of each space.

#include <cstddef>
#include <string>
#include <vector>

#include "qlat/exact_vector.hpp"
#include "qlat/linalg.hpp"
#include "qlat/quasilattice.hpp"

namespace qlat {

struct Embedding {
  QLId target = QLId::H3_Primitive;
  std::string source_name;
  std::size_t source_rank = 0;  // N
  std::size_t dim = 0;          // d
  std::vector<ExactVector> parallel_columns;       // images of the N ambient unit vectors
  std::vector<ExactVector> perpendicular_columns;  // Galois conjugates of the above
  std::vector<RationalVector> source_basis;        // Z-basis of the source lattice (ambient coords)

  ExactVector parallel(const RationalVector& x) const;
  ExactVector perpendicular(const RationalVector& x) const;
};

/// Embedding for H3-primitive / H3-fcc / H3-bcc / H4.  Throws
/// UnsupportedError for the 2D modules.
Embedding embedding(QLId target);

enum class WindowShape { CellImage, Ball };
std::string to_string(WindowShape s);
WindowShape parse_window_shape(const std::string& text);

/// Acceptance region in perpendicular space.  CellImage is the projection
/// of the ambient unit cube [-1/2, 1/2)^N scaled by `scale`, half-open on
/// the positive side of each facet; Ball is the closed ball of radius `scale`.
struct Window {
  WindowShape shape = WindowShape::CellImage;
  double scale = 1.0;
};

struct PatchPoint {
  ExactVector parallel;
  FloatVector position;
  RationalVector source;  // ambient source coordinates
};

struct Patch {
  QLId target = QLId::H3_Primitive;
  Window window;
  double radius = 0;
  std::vector<PatchPoint> points;
};

/// All source lattice points whose parallel image lies in the closed ball
/// of the given radius and whose perpendicular image lies in the window.
Patch generate_patch(const Embedding& emb, const Window& window, double radius);

/// Exact window test for a perpendicular-space point.
bool in_window(const Embedding& emb, const Window& window, const ExactVector& perp);

/// Reciprocal vector 2*pi*M^{-T} n for n given in coordinates of the dual
/// source lattice basis; M stacks the parallel and perpendicular maps.
struct ReciprocalPoint {
  FloatVector parallel;
  FloatVector perpendicular;
};
ReciprocalPoint reciprocal_point(const Embedding& emb, const std::vector<long long>& dual_coords);

/// |sum_j exp(i k.x_j)|^2 / N^2 by direct summation.
double structure_factor(const std::vector<FloatVector>& points, const FloatVector& k);
double structure_factor(const Patch& patch, const FloatVector& k);
/// Several k at once, parallel over k.
std::vector<double> structure_factors(const std::vector<FloatVector>& points,
                                      const std::vector<FloatVector>& ks);

/// --- E8 --------------------------------------------------------------------------

/// The 240 roots in the standard coordinates (112 of type (+-1, +-1, 0^6),
/// 128 of type (+-1/2)^8 with an even number of minus signs), sorted.
std::vector<RationalVector> e8_roots();

/// Integral quadratic form on icosians: trace of mu * <a, b> with
/// mu = (4 + 2 tau) / 5.  Unit icosians have form value 2.
Rational icosian_e8_form(const ExactVector& a, const ExactVector& b);

struct E8ProjectionReport {
  std::size_t root_count = 0;
  std::size_t integer_type = 0;
  std::size_t half_type = 0;
  RationalMatrix source_gram;  // Gram matrix of the H4 source basis under the form
  bool gram_integral = false;
  bool gram_even = false;
  Rational gram_determinant = 0;
  Rational min_norm = 0;
  std::size_t minimal_vectors = 0;  // icosians of form value equal to min_norm
  RationalMatrix isometry;          // standard E8 coords -> source lattice coords
  bool isometry_bijective = false;  // 240 roots <-> 240 minimal icosians
  std::vector<ExactVector> images;  // parallel images of e8_roots(), same order
  std::size_t outer_shell = 0;      // |x|^2 == 1
  std::size_t inner_shell = 0;      // |x|^2 == 2 - tau
  bool outer_shell_is_unit_icosians = false;
};

E8ProjectionReport project_e8();

/// Lattice points k with k^T G k <= bound for a positive-definite Gram
/// matrix (float Fincke-Pohst enumeration with a small safety margin).
std::vector<std::vector<long long>> enumerate_short_vectors(const std::vector<std::vector<double>>& gram,
                                                            double bound);

}  // namespace qlat
