#pragma once

#include <cstdint>
#include <vector>

#include "hstar/polytope.hpp"

namespace hstar {

// Ordered set of distinct integer vectors at height 1 (first coordinate 1),
// spanning the cone C = cone over the polytope they came from.
class VectorSet {
public:
    explicit VectorSet(std::vector<IVec> vectors, std::vector<char> vertex_flags = {});

    int hdim() const { return hdim_; }  // d+1
    std::size_t size() const { return vecs_.size(); }
    const std::vector<IVec>& vectors() const { return vecs_; }
    const IVec& operator[](std::size_t i) const { return vecs_[i]; }
    bool is_vertex(std::size_t i) const { return vertex_flags_[i] != 0; }
    int index_of(const IVec& v) const;  // -1 when absent

    bool operator==(const VectorSet&) const = default;

private:
    int hdim_ = 0;
    std::vector<IVec> vecs_;
    std::vector<char> vertex_flags_;
};

// {(1, m) : m lattice point of P}, with the vertex vectors flagged.
VectorSet homogenize(const LatticePolytope& p);

struct Triangulation {
    VectorSet base;
    std::vector<std::vector<int>> max_cells;  // sorted index subsets, sorted list

    Triangulation(VectorSet b, std::vector<std::vector<int>> cells);
    const std::vector<IVec>& rays(std::size_t cell) const = delete;
};

// Pulling triangulation of cone(A). The recursion pulls, within each face, the
// vector of the face that comes last in `order`; the last vector of `order` is
// therefore a ray of every maximal cell.
Triangulation pulling_triangulation(const VectorSet& a, const std::vector<int>& order);

struct GenericPoint {
    QVec xi;
};

// A rational point strictly inside cone(A) avoiding every hyperplane spanned
// by linearly independent elements of A (hence generic for all triangulations
// of A at once). Deterministic in the seed.
GenericPoint sample_generic_point(const VectorSet& a, std::uint64_t seed);

// Generic point whose coefficient signs on the basis `cell` are negative
// exactly on `index_set`; used to realize prescribed half-open index sets.
GenericPoint generic_point_with_index_set(const VectorSet& a, const std::vector<int>& cell,
                                          const std::vector<int>& index_set, std::uint64_t seed);

// Exhaustive genericity test (exponential in dim; test oracle for small sets).
bool is_generic_brute_force(const VectorSet& a, const QVec& xi);

struct HalfOpenCell {
    std::vector<int> cell;       // ray indices into the base set
    std::vector<int> index_set;  // subset of `cell`: rays with negative xi-coefficient
};

HalfOpenCell half_open_index_set(const Triangulation& t, const GenericPoint& xi,
                                 const std::vector<int>& cell);

struct BoxPoint {
    IVec point;
    Int height;
};

// Lattice points of the half-open fundamental parallelepiped of the given
// rays: coordinates in [0,1) except (0,1] at the open positions. The count
// equals |det| of the ray matrix.
std::vector<BoxPoint> box_points(const std::vector<IVec>& rays, const std::vector<int>& open_positions);

struct Reduction {
    std::vector<int> cell;  // the unique half-open cell containing v
    IVec box_point;
    Int height;
};

// Reduce a lattice point of the cone modulo the ray lattice of its half-open
// cell; the height of the box point is h*_{T,xi}(v).
Reduction reduce_point(const Triangulation& t, const GenericPoint& xi, const IVec& v);

// Validation helpers for the partition property (seeded sample points).
bool cells_partition_cone(const Triangulation& t, const GenericPoint& xi, std::size_t samples,
                          std::uint64_t seed);

}  // namespace hstar
