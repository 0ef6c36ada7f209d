#include "toric/polytope.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>

namespace toric {

struct Polytope::VertexCache {
    std::once_flag once;
    std::vector<RationalVector> vertices;
    std::exception_ptr error;
};

Polytope::Polytope(std::size_t dim, std::vector<Halfspace> facets)
    : dim_(dim), facets_(std::move(facets)), cache_(std::make_shared<VertexCache>()) {
    for (const auto& h : facets_)
        if (h.normal.size() != dim_) throw std::invalid_argument("half-space normal has wrong dimension");
}

const std::vector<RationalVector>& Polytope::vertices() const {
    std::call_once(cache_->once, [this] {
        try {
            cache_->vertices = enumerate_vertices(*this);
        } catch (...) {
            cache_->error = std::current_exception();
        }
    });
    if (cache_->error) std::rethrow_exception(cache_->error);
    return cache_->vertices;
}

bool Polytope::contains(const RationalVector& u) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Halfspace& h) { return dot(u, h.normal) >= h.offset; });
}

Polytope Polytope::dilated(const Rational& k) const {
    if (k.sign() <= 0) throw std::invalid_argument("dilation factor must be positive");
    auto f = facets_;
    for (auto& h : f) h.offset *= k;
    return Polytope(dim_, std::move(f));
}

Polytope Polytope::intersected(Halfspace h) const {
    auto f = facets_;
    f.push_back(std::move(h));
    return Polytope(dim_, std::move(f));
}

Polytope divisor_polytope(const Fan& fan, const ToricDivisor& d) {
    if (d.size() != fan.ray_count()) throw std::invalid_argument("divisor length does not match the ray count");
    std::vector<Halfspace> hs;
    hs.reserve(fan.ray_count());
    for (std::size_t i = 0; i < fan.ray_count(); ++i) hs.push_back({fan.ray(i), -d.coefficients[i]});
    return Polytope(fan.dim(), std::move(hs));
}

std::vector<RationalVector> enumerate_vertices(const Polytope& p) {
    const std::size_t n = p.dim();
    const auto& hs = p.facets();
    std::vector<LatticeVector> normals;
    for (const auto& h : hs) normals.push_back(h.normal);
    if (!positively_spans(normals, n)) throw UnboundedError();

    std::set<RationalVector> found;
    for_each_subset(hs.size(), n, [&](const std::vector<std::size_t>& idx) {
        Matrix a(n, n);
        RationalVector b(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(hs[idx[r]].normal[c]);
            b[r] = hs[idx[r]].offset;
        }
        auto x = solve_exact(a, b);
        if (x && p.contains(*x)) found.insert(std::move(*x));
    });
    return {found.begin(), found.end()};
}

namespace {

std::size_t affine_rank(const std::vector<RationalVector>& pts, const std::vector<std::size_t>& subset,
                        std::size_t dim) {
    if (subset.empty()) return 0;
    std::vector<RationalVector> diffs;
    for (std::size_t k = 1; k < subset.size(); ++k) diffs.push_back(pts[subset[k]] - pts[subset[0]]);
    if (diffs.empty()) return 0;
    return rank(diffs, dim);
}

struct Triangulator {
    const std::vector<RationalVector>& pts;
    std::vector<std::vector<std::size_t>> facet_sets;  // vertex indices on each true facet
    std::vector<std::size_t> order;                    // position of each vertex in the apex priority
    std::size_t dim;

    // Simplices (as vertex index lists) of a pulling triangulation of the
    // face with vertex set `face` and dimension k.
    std::vector<std::vector<std::size_t>> run(const std::vector<std::size_t>& face, std::size_t k) const {
        if (k == 0) return {{face.front()}};
        std::size_t apex =
            *std::min_element(face.begin(), face.end(), [&](auto a, auto b) { return order[a] < order[b]; });
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::vector<std::size_t>> seen;
        for (const auto& fs : facet_sets) {
            std::vector<std::size_t> sub;
            std::set_intersection(face.begin(), face.end(), fs.begin(), fs.end(), std::back_inserter(sub));
            if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
            if (sub.size() < k || affine_rank(pts, sub, dim) != k - 1) continue;
            if (std::find(seen.begin(), seen.end(), sub) != seen.end()) continue;
            seen.push_back(sub);
            for (auto& s : run(sub, k - 1)) {
                s.push_back(apex);
                out.push_back(std::move(s));
            }
        }
        return out;
    }
};

Rational simplex_volume(const std::vector<RationalVector>& v, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r + 1][c] - v[0][c];
    return determinant(m).abs() / Rational(factorial(n));
}

}  // namespace

std::vector<Simplex> triangulate(const Polytope& p, std::span<const std::size_t> priority) {
    const auto& pts = p.vertices();
    const std::size_t n = p.dim();
    std::vector<std::size_t> all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    if (pts.size() < n + 1 || affine_rank(pts, all, n) < n) return {};

    Triangulator t{pts, {}, std::vector<std::size_t>(pts.size()), n};
    if (priority.size() != pts.size()) throw std::invalid_argument("priority must permute the vertex indices");
    {
        std::vector<bool> hit(pts.size(), false);
        for (std::size_t pos = 0; pos < priority.size(); ++pos) {
            if (priority[pos] >= pts.size() || hit[priority[pos]])
                throw std::invalid_argument("priority must permute the vertex indices");
            hit[priority[pos]] = true;
            t.order[priority[pos]] = pos;
        }
    }
    for (const auto& h : p.facets()) {
        std::vector<std::size_t> on;
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (dot(pts[k], h.normal) == h.offset) on.push_back(k);
        if (on.size() >= n && affine_rank(pts, on, n) == n - 1 &&
            std::find(t.facet_sets.begin(), t.facet_sets.end(), on) == t.facet_sets.end())
            t.facet_sets.push_back(std::move(on));
    }

    std::vector<Simplex> out;
    for (const auto& s : t.run(all, n)) {
        Simplex simplex;
        for (auto k : s) simplex.vertices.push_back(pts[k]);
        simplex.volume = simplex_volume(simplex.vertices, n);
        out.push_back(std::move(simplex));
    }
    return out;
}

std::vector<Simplex> triangulate(const Polytope& p) {
    std::vector<std::size_t> lex(p.vertices().size());
    std::iota(lex.begin(), lex.end(), 0);
    return triangulate(p, lex);
}

Rational volume(const Polytope& p) {
    Rational v;
    for (const auto& s : triangulate(p)) v += s.volume;
    return v;
}

Rational normalized_volume(const Polytope& p) { return volume(p) * Rational(factorial(p.dim())); }

RationalVector barycenter(const Polytope& p) {
    const std::size_t n = p.dim();
    Rational total;
    RationalVector weighted(n);
    for (const auto& s : triangulate(p)) {
        RationalVector c(n);
        for (const auto& v : s.vertices) c += v;
        weighted += c * (s.volume / Rational(static_cast<long long>(n + 1)));
        total += s.volume;
    }
    if (total.is_zero()) throw DegeneratePolytopeError();
    return weighted * (Rational(1) / total);
}

void for_each_lattice_point(const Polytope& p, const std::function<void(const LatticeVector&)>& visit) {
    const auto& verts = p.vertices();
    if (verts.empty()) return;
    const std::size_t n = p.dim();
    std::vector<Integer> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational mn = verts[0][i], mx = verts[0][i];
        for (const auto& v : verts) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = mn.ceil();
        hi[i] = mx.floor();
        if (lo[i] > hi[i]) return;
    }
    // <u, normal> is an integer, so <u, normal> >= offset iff >= ceil(offset).
    std::vector<Integer> bounds;
    for (const auto& h : p.facets()) bounds.push_back(h.offset.ceil());

    LatticeVector u(lo);
    Integer s;
    while (true) {
        bool inside = true;
        for (std::size_t f = 0; f < bounds.size() && inside; ++f) {
            s = 0;
            const auto& nrm = p.facets()[f].normal;
            for (std::size_t i = 0; i < n; ++i) s += nrm[i] * u[i];
            inside = s >= bounds[f];
        }
        if (inside) visit(u);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (u[i] < hi[i]) {
                ++u[i];
                break;
            }
            u[i] = lo[i];
            if (i == 0) return;
        }
    }
}

std::vector<LatticeVector> lattice_points(const Polytope& p) {
    std::vector<LatticeVector> pts;
    for_each_lattice_point(p, [&](const LatticeVector& u) { pts.push_back(u); });
    return pts;
}

Rational integrate_affine(const Polytope& p, const AffineFunction& f) {
    if (f.linear.size() != p.dim()) throw std::invalid_argument("affine function has wrong dimension");
    Rational total;
    for (const auto& s : triangulate(p)) {
        Rational mean;
        for (const auto& v : s.vertices) mean += f(v);
        total += s.volume * mean / Rational(static_cast<long long>(s.vertices.size()));
    }
    return total;
}

}  // namespace toric
