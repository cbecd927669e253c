#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "slicedev/geom.hpp"

namespace slicedev {

// Convex polyhedron: vertices plus face cycles oriented counterclockwise
// seen from outside. Adjacency and face planes are built on construction;
// construction validates closedness, planarity and convexity.
struct Polytope {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;

    // Derived connectivity and geometry.
    std::vector<Vec3> face_normals;    // unit, outward
    std::vector<double> face_offsets;  // normal . x = offset on the face
    std::vector<std::array<int, 2>> edges;          // undirected, a < b
    std::vector<std::array<int, 2>> edge_faces;     // the two incident faces
    std::vector<std::vector<int>> vertex_faces;     // incident faces per vertex
    double diameter = 0.0;

    std::size_t edge_count() const { return edges.size(); }
    int edge_between(int a, int b) const;  // -1 when absent

private:
    friend Polytope make_polytope(std::vector<Vec3>, std::vector<std::vector<int>>);
    std::unordered_map<long long, int> edge_lookup_;
};

// Validates and indexes a polytope. Throws std::invalid_argument naming
// the offending vertex/face/edge on: open or non-manifold surface,
// nonplanar or nonconvex face, inconsistent orientation, zero volume,
// coplanar adjacent faces, or a vertex outside some face plane (i.e. the
// input is not convex). A consistently inward orientation is repaired.
Polytope make_polytope(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces);

// Malformed OFF text, as opposed to a well-formed mesh that fails
// validation; the CLI maps the two onto different exit codes.
struct OffParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ASCII OFF reader/writer. Parse errors carry the 1-based line number.
Polytope load_off(const std::string& text);
std::string to_off(const Polytope& p);

// Plane {x : normal . x = offset}; the normal defines "above".
struct PlaneSpec {
    Vec3 normal;
    double offset = 0.0;

    PlaneSpec() = default;
    PlaneSpec(const Vec3& n, double d);  // normalizes, throws on zero normal
};

enum class CornerKind { EdgeCrossing, PolytopeVertex };

struct Corner {
    Vec3 position;
    CornerKind kind = CornerKind::EdgeCrossing;
    int id = -1;  // edge id or vertex id
    double phi = 0.0;          // interior angle of the section polygon
    double theta_right = 0.0;  // incident face angle right of the curve
    double theta_left = 0.0;
};

// Closed slice curve, counterclockwise seen from the normal side,
// starting at the lexicographically smallest corner. segment_faces[i] is
// the face carrying the segment corners[i] -> corners[i+1 mod n].
struct SliceCurve {
    std::vector<Corner> corners;
    std::vector<int> segment_faces;
    PlaneSpec plane;

    std::size_t size() const { return corners.size(); }
    std::vector<double> link_lengths() const;
    double perimeter() const;
};

enum class SliceVariant { Curve, DegenerateFace, DegenerateEdge, DegenerateVertex, Empty };

const char* to_string(SliceVariant v);

struct SliceResult {
    SliceVariant variant = SliceVariant::Empty;
    std::optional<SliceCurve> curve;
    int degenerate_id = -1;  // face/edge/vertex id for the degenerate variants
    std::vector<std::string> warnings;

    bool is_degenerate() const { return variant != SliceVariant::Curve; }
};

// Total classification of P intersected with the plane. Curve corners come
// back with phi and both surface angles filled in. Vertices within
// eps_len * diameter of the plane are snapped onto it (with a warning).
SliceResult slice(const Polytope& p, const PlaneSpec& plane);

// Total incident face angle at corner i on the right (resp. left) of the
// directed curve, summed wedge by wedge within each face of the fan.
double right_surface_angle(const Polytope& p, const SliceCurve& curve, std::size_t i);
double left_surface_angle(const Polytope& p, const SliceCurve& curve, std::size_t i);

// Cone angle of the surface at corner i (2 pi except at true vertices).
double surface_total_angle(const Polytope& p, const SliceCurve& curve, std::size_t i);

// Interior angles of the section polygon, each in (0, pi).
std::vector<double> planar_angles(const SliceCurve& curve);

// phi_i <= theta_right_i <= 2 pi - phi_i at every corner, within eps_angle.
bool verify_angle_bounds(const SliceCurve& curve);

}  // namespace slicedev
