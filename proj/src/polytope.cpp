#include "slicedev/polytope.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace slicedev {

namespace {

long long pack_edge(int a, int b, int nverts) {
    if (a > b) std::swap(a, b);
    return static_cast<long long>(a) * nverts + b;
}

[[noreturn]] void reject(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

int Polytope::edge_between(int a, int b) const {
    const auto it = edge_lookup_.find(pack_edge(a, b, static_cast<int>(vertices.size())));
    return it == edge_lookup_.end() ? -1 : it->second;
}

Polytope make_polytope(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces) {
    Polytope p;
    p.vertices = std::move(vertices);
    p.faces = std::move(faces);
    const int nv = static_cast<int>(p.vertices.size());
    const int nf = static_cast<int>(p.faces.size());
    if (nv < 4) reject("polytope needs at least 4 vertices");
    if (nf < 2) reject("polytope needs at least 2 faces");

    double scale = 1.0;
    Vec3 lo = p.vertices[0], hi = p.vertices[0];
    for (const Vec3& v : p.vertices) {
        scale = std::max({scale, std::abs(v.x), std::abs(v.y), std::abs(v.z)});
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    p.diameter = distance(lo, hi);
    const double tol = tolerances().eps_len * (1.0 + scale);

    for (int f = 0; f < nf; ++f) {
        const auto& cyc = p.faces[f];
        if (cyc.size() < 3) reject("face " + std::to_string(f) + " has fewer than 3 vertices");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i] < 0 || cyc[i] >= nv)
                reject("face " + std::to_string(f) + " references vertex " + std::to_string(cyc[i]));
            for (std::size_t j = i + 1; j < cyc.size(); ++j)
                if (cyc[i] == cyc[j])
                    reject("face " + std::to_string(f) + " repeats vertex " + std::to_string(cyc[i]));
        }
    }

    // Closed oriented 2-manifold: every directed edge once, every
    // undirected edge in exactly two faces.
    std::map<std::pair<int, int>, int> directed;
    for (int f = 0; f < nf; ++f) {
        const auto& cyc = p.faces[f];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (!directed.emplace(std::make_pair(a, b), f).second)
                reject("directed edge " + std::to_string(a) + "->" + std::to_string(b) +
                       " appears twice: inconsistent face orientation");
        }
    }
    for (const auto& [de, f] : directed) {
        const auto rev = directed.find({de.second, de.first});
        if (rev == directed.end())
            reject("edge " + std::to_string(de.first) + "-" + std::to_string(de.second) +
                   " is not shared by two faces: surface is not closed");
        if (p.edge_between(de.first, de.second) >= 0) continue;
        p.edge_lookup_[pack_edge(de.first, de.second, nv)] = static_cast<int>(p.edges.size());
        p.edges.push_back({std::min(de.first, de.second), std::max(de.first, de.second)});
        p.edge_faces.push_back({f, rev->second});
    }

    // Signed volume; a consistently inward orientation gets flipped.
    double volume6 = 0.0;
    for (const auto& cyc : p.faces)
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i)
            volume6 += p.vertices[cyc[0]].dot(
                p.vertices[cyc[i]].cross(p.vertices[cyc[i + 1]]));
    if (std::abs(volume6) <= 6.0 * tol * scale * scale)
        reject("polytope has zero volume");
    if (volume6 < 0.0) {
        for (auto& cyc : p.faces) std::reverse(cyc.begin(), cyc.end());
        for (auto& ef : p.edge_faces) std::swap(ef[0], ef[1]);
        // edge_faces stores incident faces; order is not meaningful.
    }

    p.face_normals.resize(nf);
    p.face_offsets.resize(nf);
    for (int f = 0; f < nf; ++f) {
        const auto& cyc = p.faces[f];
        Vec3 n{0, 0, 0};
        Vec3 centroid{0, 0, 0};
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            n = n + p.vertices[cyc[i]].cross(p.vertices[cyc[(i + 1) % cyc.size()]]);
            centroid = centroid + p.vertices[cyc[i]];
        }
        if (n.norm() <= tol * scale)
            reject("face " + std::to_string(f) + " is degenerate");
        p.face_normals[f] = n.normalized();
        centroid = centroid * (1.0 / static_cast<double>(cyc.size()));
        p.face_offsets[f] = p.face_normals[f].dot(centroid);

        for (int v : cyc)
            if (std::abs(p.face_normals[f].dot(p.vertices[v]) - p.face_offsets[f]) > tol)
                reject("face " + std::to_string(f) + " is not planar at vertex " + std::to_string(v));

        // Convex cycle; collinear runs are tolerated.
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Vec3& a = p.vertices[cyc[i]];
            const Vec3& b = p.vertices[cyc[(i + 1) % cyc.size()]];
            const Vec3& c = p.vertices[cyc[(i + 2) % cyc.size()]];
            if ((b - a).cross(c - b).dot(p.face_normals[f]) < -tol * scale)
                reject("face " + std::to_string(f) + " is not a convex cycle at vertex " +
                       std::to_string(cyc[(i + 1) % cyc.size()]));
        }
    }

    // Convex position: no vertex strictly outside any face plane.
    for (int f = 0; f < nf; ++f)
        for (int v = 0; v < nv; ++v)
            if (p.face_normals[f].dot(p.vertices[v]) - p.face_offsets[f] > tol)
                reject("not convex: vertex " + std::to_string(v) +
                       " lies outside the plane of face " + std::to_string(f));

    // Corners of slice curves exist only where the dihedral differs from
    // pi, so coplanar neighbors are rejected rather than tolerated.
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
        const Vec3& n1 = p.face_normals[p.edge_faces[e][0]];
        const Vec3& n2 = p.face_normals[p.edge_faces[e][1]];
        if (n1.cross(n2).norm() <= 1e-9)
            reject("faces " + std::to_string(p.edge_faces[e][0]) + " and " +
                   std::to_string(p.edge_faces[e][1]) + " are coplanar across edge " +
                   std::to_string(static_cast<int>(e)));
    }

    p.vertex_faces.assign(nv, {});
    for (int f = 0; f < nf; ++f)
        for (int v : p.faces[f]) p.vertex_faces[v].push_back(f);
    for (int v = 0; v < nv; ++v)
        if (p.vertex_faces[v].size() < 2)
            reject("vertex " + std::to_string(v) + " is unused or dangling");

    return p;
}

// ---------------------------------------------------------------------------
// OFF ingestion

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    // Next non-empty, non-comment line.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            const auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            bool blank = true;
            for (char c : raw)
                if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
            if (blank) continue;
            out = raw;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw OffParseError("OFF parse error at line " + std::to_string(line_no) + ": " + msg);
    }
};

}  // namespace

Polytope load_off(const std::string& text) {
    LineReader reader(text);
    std::string line;
    if (!reader.next(line)) reader.fail("empty document");
    {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word != "OFF") reader.fail("expected OFF header, got '" + word + "'");
        // Counts may follow the header on the same line.
        std::string rest;
        std::getline(ls, rest);
        bool has_counts = false;
        for (char c : rest)
            if (!std::isspace(static_cast<unsigned char>(c))) { has_counts = true; break; }
        if (has_counts) line = rest;
        else if (!reader.next(line)) reader.fail("missing counts line");
    }

    long nv = 0, nf = 0, ne = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> nv >> nf >> ne)) reader.fail("counts line must hold three integers");
        if (nv < 0 || nf < 0) reader.fail("negative counts");
    }

    std::vector<Vec3> vertices;
    vertices.reserve(nv);
    for (long i = 0; i < nv; ++i) {
        if (!reader.next(line)) reader.fail("expected vertex " + std::to_string(i));
        std::istringstream ls(line);
        Vec3 v;
        if (!(ls >> v.x >> v.y >> v.z)) reader.fail("bad vertex coordinates");
        vertices.push_back(v);
    }

    std::vector<std::vector<int>> faces;
    faces.reserve(nf);
    for (long i = 0; i < nf; ++i) {
        if (!reader.next(line)) reader.fail("expected face " + std::to_string(i));
        std::istringstream ls(line);
        long k = 0;
        if (!(ls >> k) || k < 3) reader.fail("face must start with a count >= 3");
        std::vector<int> cyc(k);
        for (long j = 0; j < k; ++j)
            if (!(ls >> cyc[j])) reader.fail("face lists fewer indices than its count");
        faces.push_back(std::move(cyc));  // trailing color values are ignored
    }

    return make_polytope(std::move(vertices), std::move(faces));
}

std::string to_off(const Polytope& p) {
    std::ostringstream os;
    os << "OFF\n" << p.vertices.size() << ' ' << p.faces.size() << ' ' << p.edge_count() << '\n';
    char buf[96];
    for (const Vec3& v : p.vertices) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
        os << buf;
    }
    for (const auto& cyc : p.faces) {
        os << cyc.size();
        for (int v : cyc) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Slicing

PlaneSpec::PlaneSpec(const Vec3& n, double d) {
    const double len = n.norm();
    if (len <= 0.0) throw std::invalid_argument("plane normal must be nonzero");
    normal = n * (1.0 / len);
    offset = d / len;
}

const char* to_string(SliceVariant v) {
    switch (v) {
        case SliceVariant::Curve: return "Curve";
        case SliceVariant::DegenerateFace: return "DegenerateFace";
        case SliceVariant::DegenerateEdge: return "DegenerateEdge";
        case SliceVariant::DegenerateVertex: return "DegenerateVertex";
        case SliceVariant::Empty: return "Empty";
    }
    return "?";
}

std::vector<double> SliceCurve::link_lengths() const {
    std::vector<double> lengths(corners.size());
    for (std::size_t i = 0; i < corners.size(); ++i)
        lengths[i] = distance(corners[i].position, corners[(i + 1) % corners.size()].position);
    return lengths;
}

double SliceCurve::perimeter() const {
    double total = 0.0;
    for (double l : link_lengths()) total += l;
    return total;
}

namespace {

struct Node {
    CornerKind kind;
    int id;
    Vec3 pos;
};

// Lexicographic position order with tolerance; exact ties fall back to
// (kind, id) so the starting corner is stable.
bool node_less(const Node& a, const Node& b, double tol) {
    const double da[3] = {a.pos.x - b.pos.x, a.pos.y - b.pos.y, a.pos.z - b.pos.z};
    for (double d : da) {
        if (d < -tol) return true;
        if (d > tol) return false;
    }
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.id < b.id;
}

}  // namespace

SliceResult slice(const Polytope& p, const PlaneSpec& plane) {
    SliceResult result;
    const int nv = static_cast<int>(p.vertices.size());
    const double snap = tolerances().eps_len * std::max(p.diameter, 1.0);

    std::vector<double> side(nv);
    int npos = 0, nneg = 0;
    for (int v = 0; v < nv; ++v) {
        double s = plane.normal.dot(p.vertices[v]) - plane.offset;
        if (std::abs(s) <= snap) {
            if (s != 0.0)
                result.warnings.push_back("vertex " + std::to_string(v) +
                                          " snapped onto the slicing plane");
            s = 0.0;
        }
        side[v] = s;
        if (s > 0.0) ++npos;
        if (s < 0.0) ++nneg;
    }

    if (npos == 0 || nneg == 0) {
        // Zero volume on one side: contact is a face, an edge, a vertex,
        // or nothing at all.
        for (std::size_t f = 0; f < p.faces.size(); ++f) {
            bool all_on = true;
            for (int v : p.faces[f]) all_on = all_on && side[v] == 0.0;
            if (all_on) {
                result.variant = SliceVariant::DegenerateFace;
                result.degenerate_id = static_cast<int>(f);
                return result;
            }
        }
        for (std::size_t e = 0; e < p.edges.size(); ++e)
            if (side[p.edges[e][0]] == 0.0 && side[p.edges[e][1]] == 0.0) {
                result.variant = SliceVariant::DegenerateEdge;
                result.degenerate_id = static_cast<int>(e);
                return result;
            }
        for (int v = 0; v < nv; ++v)
            if (side[v] == 0.0) {
                result.variant = SliceVariant::DegenerateVertex;
                result.degenerate_id = v;
                return result;
            }
        result.variant = SliceVariant::Empty;
        return result;
    }

    // Contact nodes: strict edge crossings plus on-plane vertices.
    std::vector<Node> nodes;
    std::vector<int> vertex_node(nv, -1), edge_node(p.edges.size(), -1);
    for (int v = 0; v < nv; ++v)
        if (side[v] == 0.0) {
            vertex_node[v] = static_cast<int>(nodes.size());
            nodes.push_back({CornerKind::PolytopeVertex, v, p.vertices[v]});
        }
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
        const int a = p.edges[e][0], b = p.edges[e][1];
        if (side[a] * side[b] < 0.0) {
            const double t = side[a] / (side[a] - side[b]);
            edge_node[e] = static_cast<int>(nodes.size());
            nodes.push_back({CornerKind::EdgeCrossing, static_cast<int>(e),
                             p.vertices[a] + t * (p.vertices[b] - p.vertices[a])});
        }
    }

    // One segment per face that the plane crosses; a segment lying on a
    // polytope edge shows up in both incident faces and is kept once.
    std::vector<std::vector<std::pair<int, int>>> adj(nodes.size());  // (node, face)
    std::map<std::pair<int, int>, bool> seen;
    for (std::size_t f = 0; f < p.faces.size(); ++f) {
        const auto& cyc = p.faces[f];
        std::vector<int> touched;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (vertex_node[cyc[i]] >= 0) touched.push_back(vertex_node[cyc[i]]);
            const int e = p.edge_between(cyc[i], cyc[(i + 1) % cyc.size()]);
            if (e >= 0 && edge_node[e] >= 0) touched.push_back(edge_node[e]);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        if (touched.size() < 2) continue;
        if (touched.size() > 2)
            throw std::logic_error("slice: face meets the plane in more than a segment");
        const std::pair<int, int> key{touched[0], touched[1]};
        if (seen.emplace(key, true).second) {
            adj[key.first].push_back({key.second, static_cast<int>(f)});
            adj[key.second].push_back({key.first, static_cast<int>(f)});
        }
    }

    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (adj[i].size() != 2)
            throw std::logic_error("slice: contact graph is not a single cycle");

    // Walk the cycle.
    std::vector<int> order;
    std::vector<int> order_faces;  // face of segment order[i] -> order[i+1]
    order.reserve(nodes.size());
    int cur = 0, prev = -1;
    for (std::size_t step = 0; step < nodes.size(); ++step) {
        order.push_back(cur);
        const auto& choices = adj[cur];
        const auto& pick = (choices[0].first != prev) ? choices[0] : choices[1];
        order_faces.push_back(pick.second);
        prev = cur;
        cur = pick.first;
    }
    if (cur != order.front() || order.size() != nodes.size())
        throw std::logic_error("slice: contact cycle does not close");

    // Counterclockwise seen from the normal side.
    Vec3 seed{1, 0, 0};
    if (std::abs(plane.normal.x) > 0.9) seed = {0, 1, 0};
    const Vec3 e1 = plane.normal.cross(seed).normalized();
    const Vec3 e2 = plane.normal.cross(e1);
    double area2 = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vec3& a = nodes[order[i]].pos;
        const Vec3& b = nodes[order[(i + 1) % order.size()]].pos;
        area2 += (a.dot(e1)) * (b.dot(e2)) - (a.dot(e2)) * (b.dot(e1));
    }
    if (area2 < 0.0) {
        std::reverse(order.begin(), order.end());
        std::reverse(order_faces.begin(), order_faces.end());
        // Reversing the node order shifts segments by one slot.
        std::rotate(order_faces.begin(), order_faces.begin() + 1, order_faces.end());
    }

    // Deterministic start corner.
    std::size_t start = 0;
    for (std::size_t i = 1; i < order.size(); ++i)
        if (node_less(nodes[order[i]], nodes[order[start]], snap)) start = i;
    std::rotate(order.begin(), order.begin() + start, order.end());
    std::rotate(order_faces.begin(), order_faces.begin() + start, order_faces.end());

    SliceCurve curve;
    curve.plane = plane;
    curve.corners.reserve(order.size());
    for (int idx : order) {
        Corner c;
        c.position = nodes[idx].pos;
        c.kind = nodes[idx].kind;
        c.id = nodes[idx].id;
        curve.corners.push_back(c);
    }
    curve.segment_faces = order_faces;

    const auto phis = planar_angles(curve);
    for (std::size_t i = 0; i < curve.corners.size(); ++i) {
        curve.corners[i].phi = phis[i];
        curve.corners[i].theta_right = right_surface_angle(p, curve, i);
        curve.corners[i].theta_left = left_surface_angle(p, curve, i);
    }

    result.variant = SliceVariant::Curve;
    result.curve = std::move(curve);
    return result;
}

// ---------------------------------------------------------------------------
// Surface angles

namespace {

// Angular wedge of one face around a curve corner: rays toward the face
// boundary, counterclockwise about the outward normal from start to end.
struct FaceWedge {
    Vec3 start_ray, end_ray;
    double width = 0.0;
    int start_edge = -1;  // polytope edge along each boundary ray
    int end_edge = -1;
    Vec3 normal;
};

constexpr double kInPlaneTol = 1e-6;
constexpr double kPosTol = 1e-7;

FaceWedge face_wedge(const Polytope& p, int f, const Corner& corner) {
    const auto& cyc = p.faces[f];
    FaceWedge w;
    w.normal = p.face_normals[f];
    if (corner.kind == CornerKind::PolytopeVertex) {
        const int k = static_cast<int>(cyc.size());
        int at = -1;
        for (int i = 0; i < k; ++i)
            if (cyc[i] == corner.id) { at = i; break; }
        if (at < 0) throw std::logic_error("corner vertex not on fan face");
        const int next = cyc[(at + 1) % k], prev = cyc[(at + k - 1) % k];
        w.start_ray = (p.vertices[next] - corner.position).normalized();
        w.end_ray = (p.vertices[prev] - corner.position).normalized();
        w.start_edge = p.edge_between(corner.id, next);
        w.end_edge = p.edge_between(corner.id, prev);
    } else {
        // Interior point of an edge: the wedge is the half-plane on the
        // face side; both boundary rays run along the edge itself.
        const auto& e = p.edges[corner.id];
        int a = e[0], b = e[1];
        bool directed_ok = false;
        const int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i)
            if (cyc[i] == a && cyc[(i + 1) % k] == b) { directed_ok = true; break; }
        if (!directed_ok) std::swap(a, b);
        w.start_ray = (p.vertices[b] - corner.position).normalized();
        w.end_ray = (p.vertices[a] - corner.position).normalized();
        w.start_edge = w.end_edge = corner.id;
    }
    w.width = std::atan2(std::abs(w.start_ray.cross(w.end_ray).dot(w.normal)),
                         w.start_ray.dot(w.end_ray));
    return w;
}

// Position of a ray inside a wedge, measured counterclockwise from the
// start ray, or nothing when the ray leaves the face plane or the wedge.
std::optional<double> wedge_position(const FaceWedge& w, const Vec3& ray) {
    if (std::abs(ray.dot(w.normal)) > kInPlaneTol) return std::nullopt;
    const Vec3 flat = (ray - ray.dot(w.normal) * w.normal).normalized();
    double t = std::atan2(w.start_ray.cross(flat).dot(w.normal), w.start_ray.dot(flat));
    if (t < -M_PI + 1e-3) t += 2.0 * M_PI;  // stabilize the pi boundary
    if (t < -kPosTol || t > w.width + kPosTol) return std::nullopt;
    return std::clamp(t, 0.0, w.width);
}

int other_face(const Polytope& p, int edge, int face) {
    return p.edge_faces[edge][0] == face ? p.edge_faces[edge][1] : p.edge_faces[edge][0];
}

// Sweeps over the surface fan at corner i from the outgoing curve
// direction to the reversed incoming one, rightward (clockwise about the
// outward normals) or leftward, accumulating face wedge angles.
double surface_angle_walk(const Polytope& p, const SliceCurve& curve, std::size_t i,
                          bool rightward) {
    const std::size_t m = curve.size();
    if (m < 3) throw std::invalid_argument("slice curve needs at least 3 corners");
    if (i >= m) throw std::out_of_range("corner index out of range");
    const Corner& corner = curve.corners[i];
    const Vec3 out_dir =
        (curve.corners[(i + 1) % m].position - corner.position).normalized();
    const Vec3 target =
        (curve.corners[(i + m - 1) % m].position - corner.position).normalized();

    const std::vector<int> fan = corner.kind == CornerKind::PolytopeVertex
                                     ? p.vertex_faces[corner.id]
                                     : std::vector<int>{p.edge_faces[corner.id][0],
                                                        p.edge_faces[corner.id][1]};

    // Start in the face whose wedge lies on the sweeping side of out_dir.
    int face = -1;
    FaceWedge wedge;
    double pos = 0.0;
    double best_tilt = kInPlaneTol;
    for (int f : fan) {
        const FaceWedge w = face_wedge(p, f, corner);
        const auto t = wedge_position(w, out_dir);
        if (!t) continue;
        // Rightward needs the wedge clockwise of the ray: anywhere but the
        // start boundary. Leftward is the mirror image.
        const bool usable = rightward ? (*t > kPosTol || *t >= w.width - kPosTol)
                                      : (*t < w.width - kPosTol || *t <= kPosTol);
        if (!usable) continue;
        const double tilt = std::abs(out_dir.dot(w.normal));
        if (face < 0 || tilt < best_tilt) {
            face = f;
            wedge = w;
            pos = *t;
            best_tilt = tilt;
        }
    }
    if (face < 0) throw std::logic_error("surface angle walk found no starting face");

    double total = 0.0;
    for (std::size_t step = 0; step <= fan.size() + 2; ++step) {
        if (const auto tg = wedge_position(wedge, target)) {
            if (rightward && *tg <= pos + kPosTol) return std::max(0.0, total + pos - *tg);
            if (!rightward && *tg >= pos - kPosTol)
                return std::max(0.0, total + *tg - pos);
        }
        const int cross = rightward ? wedge.start_edge : wedge.end_edge;
        total += rightward ? pos : wedge.width - pos;
        face = other_face(p, cross, face);
        wedge = face_wedge(p, face, corner);
        pos = rightward ? wedge.width : 0.0;
    }
    throw std::logic_error("surface angle walk did not terminate");
}

}  // namespace

double right_surface_angle(const Polytope& p, const SliceCurve& curve, std::size_t i) {
    return surface_angle_walk(p, curve, i, true);
}

double left_surface_angle(const Polytope& p, const SliceCurve& curve, std::size_t i) {
    return surface_angle_walk(p, curve, i, false);
}

double surface_total_angle(const Polytope& p, const SliceCurve& curve, std::size_t i) {
    if (i >= curve.size()) throw std::out_of_range("corner index out of range");
    const Corner& corner = curve.corners[i];
    if (corner.kind == CornerKind::EdgeCrossing) return 2.0 * M_PI;
    double total = 0.0;
    for (int f : p.vertex_faces[corner.id]) total += face_wedge(p, f, corner).width;
    return total;
}

std::vector<double> planar_angles(const SliceCurve& curve) {
    const std::size_t m = curve.size();
    if (m < 3) throw std::invalid_argument("slice curve needs at least 3 corners");
    std::vector<double> phis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec3 u = curve.corners[(i + m - 1) % m].position - curve.corners[i].position;
        const Vec3 w = curve.corners[(i + 1) % m].position - curve.corners[i].position;
        phis[i] = angle_between(u, w);
    }
    return phis;
}

bool verify_angle_bounds(const SliceCurve& curve) {
    const double eps = tolerances().eps_angle;
    for (const Corner& c : curve.corners) {
        if (c.theta_right < c.phi - eps) return false;
        if (c.theta_right > 2.0 * M_PI - c.phi + eps) return false;
    }
    return true;
}

}  // namespace slicedev
