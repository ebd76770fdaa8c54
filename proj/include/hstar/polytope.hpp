#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hstar/exact_linalg.hpp"
#include "hstar/numeric.hpp"

namespace hstar {

// Linear condition normal·x (<= | ==) offset with primitive integer normal.
struct Facet {
    IVec normal;
    Int offset;
    bool operator==(const Facet&) const = default;
};

// A lattice polytope given by its irredundant vertex set together with an
// exact facet description. Lower-dimensional polytopes carry the equations of
// their affine hull and facet inequalities valid inside it.
class LatticePolytope {
public:
    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_dim_; }

    const std::vector<IVec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Facet>& hull_equations() const { return equations_; }

    bool contains(const IVec& x) const;

    // Internal affine chart: lattice points of the affine hull are exactly
    // base_point + lat_basis * y with y integral, and y = (U*(x-base))[0..dim).
    const IVec& base_point() const { return base_point_; }
    const IntMatrix& chart() const { return chart_u_; }
    const std::vector<IVec>& lattice_basis() const { return lat_basis_; }
    IVec to_chart(const IVec& x) const;
    IVec from_chart(const IVec& y) const;
    const std::vector<Facet>& chart_facets() const { return chart_facets_; }
    const std::vector<IVec>& chart_vertices() const { return chart_vertices_; }

    friend LatticePolytope from_vertices(const std::vector<IVec>& points);

private:
    int ambient_dim_ = 0;
    int dim_ = 0;
    std::vector<IVec> vertices_;       // lex sorted
    std::vector<Facet> facets_;        // ambient inequalities
    std::vector<Facet> equations_;     // ambient hull equations (empty iff full-dim)
    IVec base_point_;
    IntMatrix chart_u_;                // unimodular; first dim_ rows give chart coords
    std::vector<IVec> lat_basis_;      // basis of the saturated direction lattice
    std::vector<IVec> chart_vertices_; // vertices in chart coordinates
    std::vector<Facet> chart_facets_;  // facet inequalities in chart coordinates
};

// Convex hull of finitely many lattice points; duplicates and non-extreme
// points are dropped. Lower-dimensional input is allowed.
LatticePolytope from_vertices(const std::vector<IVec>& points);

// P cap Z^d, sorted lexicographically.
std::vector<IVec> lattice_points(const LatticePolytope& p);

// (kP)° cap Z^d. Requires a full-dimensional polytope.
std::vector<IVec> interior_lattice_points(const LatticePolytope& p, const Int& k);

// |kP cap Z^d| without materializing the hull of kP.
Int dilate_count(const LatticePolytope& p, const Int& k);
Int dilate_interior_count(const LatticePolytope& p, const Int& k);

// d! times the Euclidean volume, via a placing of homogenized vertex simplices.
Int normalized_volume(const LatticePolytope& p);

// Affine lattice: base point plus integer span of the basis.
struct AffineLattice {
    IVec base_point;
    std::vector<IVec> basis;
    // Index of span_Z({1} x points) inside Z^{d+1}; nullopt when infinite.
    std::optional<Int> index_in_ambient;

    bool contains(const IVec& x) const;
};

// Gamma = p0 + span_Z{p_i - p0} for the given lattice points.
AffineLattice affine_span_lattice(const std::vector<IVec>& points);

// True iff the lattice points of P affinely span the full ambient lattice.
bool is_spanning(const LatticePolytope& p);

// P rewritten in coordinates of a basis of Gamma_P; the image is spanning and
// lattice-point equivalent to P.
LatticePolytope spanning_polytope(const LatticePolytope& p);

// Every lattice point of kP is a sum of k lattice points of P.
bool is_k_idp(const LatticePolytope& p, int k);

// Lex-first point of kP that is not a sum of k lattice points of P, if any.
std::optional<IVec> k_idp_witness(const LatticePolytope& p, int k);

// Pulling triangulation of an affine point configuration, as maximal simplices
// of index subsets. Each face recursion pulls the point of the face that comes
// last in `order`; in particular the final point of `order` is a vertex of
// every maximal cell. `vertex_indices` must list the extreme points.
std::vector<std::vector<int>> pulling_cells(const std::vector<IVec>& points,
                                            const std::vector<int>& vertex_indices,
                                            const std::vector<int>& order);

}  // namespace hstar
