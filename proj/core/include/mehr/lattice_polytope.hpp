#pragma once

#include <utility>
#include <vector>

#include "mehr/point.hpp"

namespace mehr {

enum class Containment { Interior, Boundary, Outside };

/// Facet inequality <normal, x> <= offset with a primitive outer normal.
struct FacetInequality {
    Point normal;
    Coord offset = 0;
    bool operator==(const FacetInequality&) const = default;
};

/// Affine-hull equation <normal, x> = value, normal primitive with the first
/// nonzero entry positive.
struct AffineEquation {
    Point normal;
    Coord value = 0;
    bool operator==(const AffineEquation&) const = default;
};

struct HalfspaceDescription {
    std::vector<AffineEquation> equations;  // span the orthogonal complement of the affine hull
    std::vector<FacetInequality> facets;    // facet-defining within the affine hull, lex-sorted
};

/// Convex hull of a finite set of lattice points. Generators need not be
/// minimal; the vertex subset, affine hull and facet description are computed
/// eagerly at construction and the object is immutable afterwards.
class LatticePolytope {
public:
    LatticePolytope(int ambient_dimension, std::vector<Point> generators);

    static LatticePolytope single_point(Point p);
    static LatticePolytope origin(int ambient_dimension);

    int ambient_dimension() const { return ambient_; }
    /// Affine dimension (0 for a point).
    int dim() const { return dim_; }

    const std::vector<Point>& generators() const { return generators_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const HalfspaceDescription& halfspace_description() const { return hrep_; }

    /// Classification relative to the affine hull: Interior means relative
    /// interior; points off the affine hull are Outside.
    Containment contains(const Point& z) const;

    /// max <direction, x> over the polytope.
    Coord support(const Point& direction) const;

    /// Componentwise min/max of the generators.
    std::pair<Point, Point> bounding_box() const;

    /// Equality of point sets (vertex sets agree), not of generator lists.
    bool operator==(const LatticePolytope& o) const {
        return ambient_ == o.ambient_ && vertices_ == o.vertices_;
    }

private:
    LatticePolytope() = default;
    // Full construction; hull_candidates must have the same convex hull as
    // generators (callers pass a smaller superset of the vertices).
    LatticePolytope(int ambient, std::vector<Point> generators, std::vector<Point> hull_candidates);
    // Cache transfer for maps that carry a known H-representation.
    static LatticePolytope from_known_hrep(int ambient, std::vector<Point> generators,
                                           HalfspaceDescription hrep, int dim);
    void build(std::vector<Point> hull_candidates);
    void compute_vertices();

    int ambient_ = 0;
    int dim_ = -1;
    std::vector<Point> generators_;
    std::vector<Point> vertices_;
    HalfspaceDescription hrep_;

    friend LatticePolytope minkowski_sum(const LatticePolytope&, const LatticePolytope&);
    friend LatticePolytope dilate(const LatticePolytope&, Coord);
    friend LatticePolytope translate(const LatticePolytope&, const Point&);
    friend class MinkowskiFamily;
};

/// Convex hull of all pairwise generator sums.
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// r-fold dilate; dilate(P, 0) is the origin polytope {0}.
LatticePolytope dilate(const LatticePolytope& p, Coord r);

LatticePolytope translate(const LatticePolytope& p, const Point& t);

/// Primitive outer facet normals, lex-sorted. Requires a full-dimensional
/// polytope ("facet normals require full dimension").
std::vector<Point> facet_normals(const LatticePolytope& p);

/// The face of P maximizing a, rewritten in lattice coordinates of the
/// hyperplane lattice normal^perp cap Z^d (so lattice volumes are preserved).
struct ProjectedFace {
    LatticePolytope face;
    Point normal;
};
ProjectedFace face_in_direction(const LatticePolytope& p, const Point& a);

/// P expressed in a lattice basis of its own affine hull; the result is
/// full-dimensional in Z^dim(P) and lattice-point counts are preserved.
LatticePolytope affine_hull_coordinates(const LatticePolytope& p);

}  // namespace mehr
