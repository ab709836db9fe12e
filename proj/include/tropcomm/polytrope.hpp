#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropcomm/matrix.hpp"

namespace tropcomm {

/// Zero diagonal, finite strictly positive off-diagonal entries.
bool is_premetric(const TropMatrix& a);

/// A premetric satisfying the triangle inequality A_ij <= A_ik + A_kj.
bool is_polytrope(const TropMatrix& a);

/// Same predicate through the equivalent test "premetric and A = A^2".
bool is_polytrope_by_square(const TropMatrix& a);

/// One entry (0-based) where two matrices first differ in row-major order.
struct EntryWitness {
  std::size_t row;
  std::size_t col;
  TropScalar lhs;
  TropScalar rhs;
};

std::optional<EntryWitness> first_difference(const TropMatrix& lhs, const TropMatrix& rhs);

/// A.B == B.A, exactly.
bool commutes(const TropMatrix& a, const TropMatrix& b);
/// First entry where A.B and B.A differ, lhs = (A.B)_ij, rhs = (B.A)_ij.
std::optional<EntryWitness> commutator_witness(const TropMatrix& a, const TropMatrix& b);

/// The commutativity criteria for a pair of polytropes. Each condition carries
/// the first failing entry (lhs vs rhs) when it fails:
///   commutes           A.B vs B.A
///   star_condition     A+B vs (A+B)*
///   square_condition   (A+B)^2 vs (A+B)*
///   product_condition  A.B vs A+B
struct CommutClassification {
  bool commutes = false;
  bool star_condition = false;
  bool square_condition = false;
  bool product_condition = false;
  std::optional<EntryWitness> commute_failure;
  std::optional<EntryWitness> star_failure;
  std::optional<EntryWitness> square_failure;
  std::optional<EntryWitness> product_failure;
  /// Failure of the tightest failed condition, checked in the order
  /// square, commutes, star, product.
  std::optional<EntryWitness> witness_entry;
};

/// Throws NotPolytrope unless both inputs are polytropes.
CommutClassification classify_polytrope_pair(const TropMatrix& a, const TropMatrix& b);

/// Preimage of b under a polytrope: {base + sum_{j in free} t_j e_j : t_j >= 0}.
struct PreimageDescription {
  TropVector base;
  std::vector<std::size_t> free_directions;  // 0-based
};

/// Throws NotPolytrope, or NotInImage when A.b != b.
PreimageDescription preimage(const TropMatrix& a, const TropVector& b);

/// Normalized columns of A with exact duplicates removed, in column order.
std::vector<TropVector> image_vertices(const TropMatrix& a);

/// Half-space test for the image of a Kleene star: x_i - x_j <= M_ij for all i, j.
bool in_star_image(const TropMatrix& star, const TropVector& x);

// --- planar pictures of 3x3 images in TP^2 ------------------------------------

/// A point of TP^2 in the chart (x2 - x1, x3 - x1).
struct PlanePoint {
  Rational u;
  Rational v;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

PlanePoint to_plane(const TropVector& x);

/// Tropical segment between p and q in R^3 as a polyline in the (u, v) chart,
/// from p to q through every breakpoint.
std::vector<PlanePoint> tropical_segment(const TropVector& p, const TropVector& q);

/// Vertices (counter-clockwise, starting at the lowest-leftmost) of the polygon
/// {x : x_i - x_j <= min_k M^k_ij}, which is the intersection of the images of
/// the Kleene stars of the given 3x3 matrices.
std::vector<PlanePoint> image_intersection_polygon(std::span<const TropMatrix> matrices);

/// SVG picture: column points, tropical hull segments and the image polygon of
/// each 3x3 matrix. Throws UnsupportedSize for non-3x3 or non-finite input.
void render_polytrope_svg(std::span<const TropMatrix> matrices, std::ostream& out);
void render_polytrope_svg(std::span<const TropMatrix> matrices, const std::string& path);

}  // namespace tropcomm
