#include "hstar/polytope.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

// Ambient facet inequality from a chart-space one: the chart is
// y = (U*(x - p0))[0..r), so a chart normal n lifts to sum_i n_i * U.row(i).
Facet lift_facet(const IVec& chart_normal, const IntMatrix& u, const std::vector<IVec>& tight_ambient) {
    IVec normal(u.cols(), Int(0));
    for (std::size_t i = 0; i < chart_normal.size(); ++i)
        if (chart_normal[i] != 0)
            for (std::size_t j = 0; j < u.cols(); ++j) normal[j] += chart_normal[i] * u(i, j);
    normal = primitive(std::move(normal));
    return Facet{normal, dot(normal, tight_ambient.front())};
}

// Facets of a full-dimensional configuration: hyperplanes through r affinely
// independent points with all points on one side.
std::vector<Facet> chart_facet_scan(const std::vector<IVec>& pts, int r) {
    std::vector<Facet> out;
    if (r == 0) return out;
    std::set<std::pair<IVec, Int>> seen;
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(r);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r) {
            IntMatrix diffs(r - 1, r);
            for (int i = 1; i < r; ++i)
                for (int j = 0; j < r; ++j) diffs(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
            auto kernel = integer_kernel_basis(diffs);
            if (kernel.size() != 1) return;  // points do not span a hyperplane
            IVec normal = primitive(kernel[0]);
            Int b = dot(normal, pts[idx[0]]);
            bool le = true, ge = true;
            for (const IVec& p : pts) {
                Int v = dot(normal, p);
                if (v > b) le = false;
                if (v < b) ge = false;
                if (!le && !ge) return;  // cuts through the configuration
            }
            if (ge && !le) {
                for (Int& x : normal) x = -x;
                b = -b;
            }
            if (seen.insert({normal, b}).second) out.push_back(Facet{normal, b});
            return;
        }
        for (int i = start; i + (r - depth) <= n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    });
    return out;
}

using I64 = long long;

struct ScanProblem {
    std::vector<IVec> normals;
    std::vector<Int> offsets;
    IVec lo, hi;
};

bool fits_i64(const ScanProblem& sp) {
    const Int cap = (Int(1) << 62);
    for (std::size_t f = 0; f < sp.normals.size(); ++f) {
        Int acc = abs(sp.offsets[f]);
        for (std::size_t j = 0; j < sp.lo.size(); ++j)
            acc += abs(sp.normals[f][j]) * std::max(abs(sp.lo[j]), abs(sp.hi[j]));
        if (acc >= cap) return false;
    }
    return true;
}

template <typename T>
void dfs_scan(const std::vector<std::vector<T>>& normals, const std::vector<T>& offsets,
              const std::vector<T>& lo, const std::vector<T>& hi,
              const std::function<void(const std::vector<T>&)>& emit) {
    const std::size_t dim = lo.size();
    const std::size_t nf = normals.size();
    for (std::size_t j = 0; j < dim; ++j)
        if (lo[j] > hi[j]) return;
    // resmin[f][j] = minimal possible contribution of coordinates >= j.
    std::vector<std::vector<T>> resmin(nf, std::vector<T>(dim + 1, T(0)));
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t j = dim; j-- > 0;) {
            T a = normals[f][j] * lo[j], b = normals[f][j] * hi[j];
            resmin[f][j] = resmin[f][j + 1] + std::min(a, b);
        }
    for (std::size_t f = 0; f < nf; ++f)
        if (resmin[f][0] > offsets[f]) return;

    std::vector<T> x(dim);
    std::vector<std::vector<T>> partial(dim + 1, std::vector<T>(nf, T(0)));
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == dim) {
            emit(x);
            return;
        }
        for (T v = lo[j]; v <= hi[j]; ++v) {
            bool ok = true;
            for (std::size_t f = 0; f < nf; ++f) {
                partial[j + 1][f] = partial[j][f] + normals[f][j] * v;
                if (partial[j + 1][f] + resmin[f][j + 1] > offsets[f]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                x[j] = v;
                rec(j + 1);
            }
        }
    };
    rec(0);
}

void run_scan(const ScanProblem& sp, const std::function<void(IVec)>& emit) {
    const std::size_t dim = sp.lo.size();
    if (dim == 0) {
        bool ok = true;
        for (const Int& b : sp.offsets)
            if (b < 0) ok = false;
        if (ok) emit(IVec{});
        return;
    }
    if (fits_i64(sp)) {
        std::vector<std::vector<I64>> normals(sp.normals.size(), std::vector<I64>(dim));
        std::vector<I64> offsets(sp.offsets.size()), lo(dim), hi(dim);
        for (std::size_t f = 0; f < sp.normals.size(); ++f) {
            for (std::size_t j = 0; j < dim; ++j) normals[f][j] = sp.normals[f][j].convert_to<I64>();
            offsets[f] = sp.offsets[f].convert_to<I64>();
        }
        for (std::size_t j = 0; j < dim; ++j) {
            lo[j] = sp.lo[j].convert_to<I64>();
            hi[j] = sp.hi[j].convert_to<I64>();
        }
        dfs_scan<I64>(normals, offsets, lo, hi, [&](const std::vector<I64>& y) {
            IVec p(dim);
            for (std::size_t j = 0; j < dim; ++j) p[j] = y[j];
            emit(std::move(p));
        });
    } else {
        std::vector<std::vector<Int>> normals;
        for (const IVec& n : sp.normals) normals.push_back(n);
        dfs_scan<Int>(normals, sp.offsets, sp.lo, sp.hi, [&](const IVec& y) { emit(y); });
    }
}

// Chart-space scan of {y : n.y <= k*b} over the dilated vertex box, with the
// offsets shifted by `slack` (0 for closed, -1 for open inequalities).
ScanProblem dilate_problem(const LatticePolytope& p, const Int& k, const Int& slack) {
    ScanProblem sp;
    const int r = p.dim();
    if (!p.chart_vertices().empty() && r > 0) {
        sp.lo.assign(r, p.chart_vertices()[0][0]);
        sp.hi = sp.lo;
        for (const IVec& y : p.chart_vertices())
            for (int j = 0; j < r; ++j) {
                sp.lo[j] = std::min(sp.lo[j], y[j]);
                sp.hi[j] = std::max(sp.hi[j], y[j]);
            }
        for (int j = 0; j < r; ++j) {
            sp.lo[j] *= k;
            sp.hi[j] *= k;
        }
    }
    for (const Facet& f : p.chart_facets()) {
        sp.normals.push_back(f.normal);
        sp.offsets.push_back(k * f.offset + slack);
    }
    return sp;
}

}  // namespace

bool LatticePolytope::contains(const IVec& x) const {
    if (static_cast<int>(x.size()) != ambient_dim_) throw InvalidInputError("point has wrong dimension");
    for (const Facet& e : equations_)
        if (dot(e.normal, x) != e.offset) return false;
    for (const Facet& f : facets_)
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

IVec LatticePolytope::to_chart(const IVec& x) const {
    IVec diff = sub(x, base_point_);
    IVec full = chart_u_.apply(diff);
    return IVec(full.begin(), full.begin() + dim_);
}

IVec LatticePolytope::from_chart(const IVec& y) const {
    IVec x = base_point_;
    for (int j = 0; j < dim_; ++j)
        for (int i = 0; i < ambient_dim_; ++i) x[i] += y[j] * lat_basis_[j][i];
    return x;
}

LatticePolytope from_vertices(const std::vector<IVec>& points) {
    if (points.empty()) throw InvalidInputError("from_vertices needs at least one point");
    const int d = static_cast<int>(points[0].size());
    for (const IVec& p : points)
        if (static_cast<int>(p.size()) != d) throw InvalidInputError("points of mixed dimension");

    std::vector<IVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope poly;
    poly.ambient_dim_ = d;
    poly.base_point_ = pts[0];

    IntMatrix diffs(d, pts.size() - 1);
    for (std::size_t j = 1; j < pts.size(); ++j)
        for (int i = 0; i < d; ++i) diffs(i, j - 1) = pts[j][i] - pts[0][i];
    SnfResult snf = smith_normal_form(diffs);
    const int r = static_cast<int>(snf.divisors().size());
    poly.dim_ = r;
    poly.chart_u_ = snf.u;

    // Integer inverse of the unimodular u gives the saturated direction basis.
    IntMatrix uinv(d, d);
    for (int j = 0; j < d; ++j) {
        IVec e(d, Int(0));
        e[j] = 1;
        QVec col = solve_unique_rational(snf.u, e);
        for (int i = 0; i < d; ++i) uinv(i, j) = numerator(col[i]);
    }
    for (int j = 0; j < r; ++j) poly.lat_basis_.push_back(uinv.column(j));

    for (int i = r; i < d; ++i) {
        IVec normal = snf.u.row(i);
        poly.equations_.push_back(Facet{normal, dot(normal, pts[0])});
    }

    std::vector<IVec> chart_pts;
    for (const IVec& p : pts) {
        IVec full = snf.u.apply(sub(p, pts[0]));
        chart_pts.emplace_back(full.begin(), full.begin() + r);
    }

    std::vector<Facet> cfacets = chart_facet_scan(chart_pts, r);

    // A point is extreme iff its tight facet normals span the chart space.
    std::vector<char> extreme(pts.size(), 0);
    if (r == 0) {
        extreme[0] = 1;
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<IVec> tight;
            for (const Facet& f : cfacets)
                if (dot(f.normal, chart_pts[i]) == f.offset) tight.push_back(f.normal);
            if (tight.size() >= static_cast<std::size_t>(r) &&
                rank(IntMatrix::from_rows(tight)) == static_cast<std::size_t>(r))
                extreme[i] = 1;
        }
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (extreme[i]) {
            poly.vertices_.push_back(pts[i]);
            poly.chart_vertices_.push_back(chart_pts[i]);
        }

    poly.chart_facets_ = cfacets;
    for (const Facet& f : cfacets) {
        std::vector<IVec> tight;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(f.normal, chart_pts[i]) == f.offset) tight.push_back(pts[i]);
        poly.facets_.push_back(lift_facet(f.normal, snf.u, tight));
    }
    return poly;
}

std::vector<IVec> lattice_points(const LatticePolytope& p) {
    ScanProblem sp = dilate_problem(p, 1, 0);
    std::vector<IVec> out;
    run_scan(sp, [&](IVec y) { out.push_back(p.from_chart(y)); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Chart-to-ambient for the k-th dilate: x = k*p0 + B*y.
IVec dilate_from_chart(const LatticePolytope& p, const Int& k, const IVec& y) {
    IVec x = scale(k, p.base_point());
    for (int j = 0; j < p.dim(); ++j)
        for (int i = 0; i < p.ambient_dim(); ++i) x[i] += y[j] * p.lattice_basis()[j][i];
    return x;
}

std::vector<IVec> dilate_points(const LatticePolytope& p, const Int& k) {
    ScanProblem sp = dilate_problem(p, k, 0);
    std::vector<IVec> out;
    run_scan(sp, [&](IVec y) { out.push_back(dilate_from_chart(p, k, y)); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<IVec> interior_lattice_points(const LatticePolytope& p, const Int& k) {
    if (!p.full_dimensional()) throw NotFullDimensionalError();
    ScanProblem sp = dilate_problem(p, k, -1);
    std::vector<IVec> out;
    run_scan(sp, [&](IVec y) { out.push_back(dilate_from_chart(p, k, y)); });
    std::sort(out.begin(), out.end());
    return out;
}

Int dilate_count(const LatticePolytope& p, const Int& k) {
    ScanProblem sp = dilate_problem(p, k, 0);
    Int n = 0;
    run_scan(sp, [&](IVec) { ++n; });
    return n;
}

Int dilate_interior_count(const LatticePolytope& p, const Int& k) {
    if (!p.full_dimensional()) throw NotFullDimensionalError();
    ScanProblem sp = dilate_problem(p, k, -1);
    Int n = 0;
    run_scan(sp, [&](IVec) { ++n; });
    return n;
}

std::vector<std::vector<int>> pulling_cells(const std::vector<IVec>& points,
                                            const std::vector<int>& vertex_indices,
                                            const std::vector<int>& order) {
    std::vector<int> rank_of(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = static_cast<int>(i);

    std::map<std::vector<int>, std::vector<std::vector<int>>> memo;

    std::function<const std::vector<std::vector<int>>&(const std::vector<int>&, const std::vector<int>&)> pull =
        [&](const std::vector<int>& face_pts, const std::vector<int>& face_verts)
            -> const std::vector<std::vector<int>>& {
        auto it = memo.find(face_pts);
        if (it != memo.end()) return it->second;

        std::vector<IVec> vpts;
        for (int i : face_verts) vpts.push_back(points[i]);
        LatticePolytope face = from_vertices(vpts);

        std::vector<std::vector<int>> cells;
        if (face_pts.size() == static_cast<std::size_t>(face.dim()) + 1) {
            cells.push_back(face_pts);
        } else {
            int v = face_pts[0];
            for (int i : face_pts)
                if (rank_of[i] > rank_of[v]) v = i;
            for (std::size_t fi = 0; fi < face.facets().size(); ++fi) {
                const Facet& f = face.facets()[fi];
                if (dot(f.normal, points[v]) == f.offset) continue;  // facet contains the pulled point
                std::vector<int> sub_pts, sub_verts;
                for (int i : face_pts)
                    if (dot(f.normal, points[i]) == f.offset) sub_pts.push_back(i);
                for (int i : face_verts)
                    if (dot(f.normal, points[i]) == f.offset) sub_verts.push_back(i);
                for (const std::vector<int>& s : pull(sub_pts, sub_verts)) {
                    std::vector<int> cell = s;
                    cell.push_back(v);
                    std::sort(cell.begin(), cell.end());
                    cells.push_back(std::move(cell));
                }
            }
        }
        std::sort(cells.begin(), cells.end());
        return memo.emplace(face_pts, std::move(cells)).first->second;
    };

    std::vector<int> all(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
    return pull(all, vertex_indices);
}

Int normalized_volume(const LatticePolytope& p) {
    if (!p.full_dimensional()) throw NotFullDimensionalError();
    const int r = p.dim();
    const auto& verts = p.chart_vertices();
    std::vector<int> idx(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) idx[i] = static_cast<int>(i);
    Int vol = 0;
    for (const std::vector<int>& cell : pulling_cells(verts, idx, idx)) {
        IntMatrix m(r, r);
        for (int i = 1; i <= r; ++i)
            for (int j = 0; j < r; ++j) m(i - 1, j) = verts[cell[i]][j] - verts[cell[0]][j];
        vol += abs(determinant(m));
    }
    return vol;
}

bool AffineLattice::contains(const IVec& x) const {
    IVec diff = sub(x, base_point);
    if (basis.empty()) return is_zero(diff);
    IntMatrix b = IntMatrix::from_columns(basis);
    SnfResult snf = smith_normal_form(b);
    IVec t = snf.u.apply(diff);
    const std::size_t rk = snf.divisors().size();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i < rk) {
            if (t[i] % snf.d(i, i) != 0) return false;
        } else if (t[i] != 0) {
            return false;
        }
    }
    return true;
}

AffineLattice affine_span_lattice(const std::vector<IVec>& points) {
    if (points.empty()) throw InvalidInputError("affine_span_lattice needs at least one point");
    std::vector<IVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    AffineLattice gamma;
    gamma.base_point = pts[0];
    const int d = static_cast<int>(pts[0].size());
    if (pts.size() > 1) {
        IntMatrix diffs(d, pts.size() - 1);
        for (std::size_t j = 1; j < pts.size(); ++j)
            for (int i = 0; i < d; ++i) diffs(i, j - 1) = pts[j][i] - pts[0][i];
        SnfResult snf = smith_normal_form(diffs);
        std::vector<Int> div = snf.divisors();
        IntMatrix uinv(d, d);
        for (int j = 0; j < d; ++j) {
            IVec e(d, Int(0));
            e[j] = 1;
            QVec col = solve_unique_rational(snf.u, e);
            for (int i = 0; i < d; ++i) uinv(i, j) = numerator(col[i]);
        }
        for (std::size_t j = 0; j < div.size(); ++j) gamma.basis.push_back(scale(div[j], uinv.column(j)));
    }

    std::vector<IVec> homog;
    for (const IVec& p : pts) {
        IVec h(d + 1);
        h[0] = 1;
        for (int i = 0; i < d; ++i) h[i + 1] = p[i];
        homog.push_back(std::move(h));
    }
    gamma.index_in_ambient = lattice_index(homog);
    return gamma;
}

bool is_spanning(const LatticePolytope& p) {
    AffineLattice gamma = affine_span_lattice(lattice_points(p));
    return gamma.index_in_ambient.has_value() && *gamma.index_in_ambient == 1;
}

LatticePolytope spanning_polytope(const LatticePolytope& p) {
    if (!p.full_dimensional()) throw NotFullDimensionalError();
    AffineLattice gamma = affine_span_lattice(lattice_points(p));
    IntMatrix b = IntMatrix::from_columns(gamma.basis);
    std::vector<IVec> new_verts;
    for (const IVec& v : p.vertices()) {
        QVec y = solve_unique_rational(b, sub(v, gamma.base_point));
        IVec yi(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (!is_integer(y[i])) throw InternalError("vertex not in the span lattice");
            yi[i] = numerator(y[i]);
        }
        new_verts.push_back(std::move(yi));
    }
    return from_vertices(new_verts);
}

std::optional<IVec> k_idp_witness(const LatticePolytope& p, int k) {
    if (k < 1) throw InvalidInputError("k must be positive");
    std::vector<IVec> pts = lattice_points(p);
    std::set<IVec> reachable(pts.begin(), pts.end());
    for (int j = 2; j <= k; ++j) {
        std::set<IVec> next;
        for (const IVec& r : reachable)
            for (const IVec& q : pts) {
                IVec s = add(r, q);
                bool inside = true;
                for (const Facet& e : p.hull_equations())
                    if (dot(e.normal, s) != Int(j) * e.offset) {
                        inside = false;
                        break;
                    }
                if (inside)
                    for (const Facet& f : p.facets())
                        if (dot(f.normal, s) > Int(j) * f.offset) {
                            inside = false;
                            break;
                        }
                if (inside) next.insert(std::move(s));
            }
        reachable = std::move(next);
    }
    for (const IVec& target : dilate_points(p, k))
        if (!reachable.count(target)) return target;
    return std::nullopt;
}

bool is_k_idp(const LatticePolytope& p, int k) { return !k_idp_witness(p, k).has_value(); }

}  // namespace hstar
