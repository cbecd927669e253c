#include "slicedev/hull.hpp"

#include <algorithm>
#include <cmath>

#include "slicedev/rng.hpp"

namespace slicedev {

Polytope make_cube() {
    std::vector<Vec3> v = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                           {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    std::vector<std::vector<int>> f = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                       {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
    return make_polytope(std::move(v), std::move(f));
}

Polytope make_tetrahedron() {
    std::vector<Vec3> v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    std::vector<std::vector<int>> f = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    return make_polytope(std::move(v), std::move(f));  // orientation repair flips if needed
}

std::vector<std::vector<int>> convex_hull_faces(const std::vector<Vec3>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 4) throw HullDegenerate("hull needs at least 4 points");
    double scale = 1.0;
    for (const Vec3& p : points)
        scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
    const double eps = 1e-9 * scale;

    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const Vec3 normal = (points[j] - points[i]).cross(points[k] - points[i]);
                if (normal.norm() <= eps * scale) continue;  // collinear triple
                const Vec3 nh = normal.normalized();
                bool pos = false, neg = false, near = false;
                for (int m = 0; m < n && !(pos && neg); ++m) {
                    if (m == i || m == j || m == k) continue;
                    const double d = nh.dot(points[m] - points[i]);
                    if (std::abs(d) <= eps) near = true;
                    else if (d > 0.0) pos = true;
                    else neg = true;
                }
                if (pos && neg) continue;
                if (near) throw HullDegenerate("four points are nearly coplanar");
                faces.push_back(pos ? std::vector<int>{i, k, j} : std::vector<int>{i, j, k});
            }
        }
    }
    if (faces.size() < 4) throw HullDegenerate("points are coplanar");

    std::vector<bool> used(n, false);
    for (const auto& f : faces)
        for (int v : f) used[v] = true;
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw HullDegenerate("a point lies inside the hull");

    for (auto& f : faces) {
        const auto smallest = std::min_element(f.begin(), f.end());
        std::rotate(f.begin(), smallest, f.end());
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

Polytope random_hull(int npoints, std::uint64_t seed) {
    if (npoints < 4) throw std::invalid_argument("random hull needs at least 4 points");
    std::string last_error = "?";
    for (int attempt = 0; attempt < 64; ++attempt) {
        SplitMix64 rng(attempt == 0 ? seed : derive_seed(seed, 0x8000u + attempt));
        std::vector<Vec3> pts;
        pts.reserve(npoints);
        for (int i = 0; i < npoints; ++i) {
            const double z = rng.uniform(-1.0, 1.0);
            const double t = rng.uniform(0.0, 2.0 * M_PI);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            pts.emplace_back(r * std::cos(t), r * std::sin(t), z);
        }
        try {
            auto faces = convex_hull_faces(pts);
            return make_polytope(std::move(pts), std::move(faces));
        } catch (const HullDegenerate& e) {
            last_error = e.what();
        } catch (const std::invalid_argument& e) {
            last_error = e.what();
        }
    }
    throw HullDegenerate("could not sample a nondegenerate hull: " + last_error);
}

}  // namespace slicedev
