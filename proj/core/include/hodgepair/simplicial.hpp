#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgepair/pair.hpp"
#include "hodgepair/rational.hpp"

namespace hodgepair {

/// Finite abstract simplicial complex with one positive weight per simplex.
/// Simplices are stored per dimension as strictly increasing vertex tuples,
/// sorted lexicographically within each dimension; that order fixes both the
/// orientation and the cochain coordinate of every simplex. Weights are the
/// diagonal Gram entries of the cochain inner products, the discrete stand-in
/// for a metric.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim][index] -> tuple
    std::vector<std::vector<Rational>> weights;            // parallel to simplices

    /// Top dimension; -1 for the empty complex.
    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    /// Number of q-simplices (0 outside the stored range).
    int count(int q) const;
    /// Coordinate of a tuple among the q-simplices, if present.
    std::optional<int> index_of(int q, const std::vector<int>& simplex) const;
};

/// A face-closed selection of simplices of a parent complex, stored in the
/// same per-dimension layout. Marks where relative cochains must vanish.
struct BoundarySubcomplex {
    std::vector<std::vector<std::vector<int>>> simplices;

    bool empty() const;
    bool contains(int q, const std::vector<int>& simplex) const;
};

/// Build a complex from arbitrary simplex tuples: vertices are sorted within
/// each tuple, the face closure is computed, and weights default to 1.
/// Explicit weights are keyed by dimension and must match the number of
/// simplices of that dimension after closure, in lexicographic order.
/// Errors: repeated vertices, negative vertex ids, nonpositive or
/// wrongly-counted weights.
SimplicialComplex make_complex(
    const std::vector<std::vector<int>>& simplices,
    const std::map<int, std::vector<Rational>>& weights = {});

/// Parse `{"simplices": [[v,...],...], "weights": {"<dim>": [w,...]}?}`.
/// Weights accept integers, decimal strings, or "p/q" rational strings.
SimplicialComplex load_complex(const std::string& json_text);

/// A parsed mesh file: the complex plus its resolved boundary. The optional
/// "boundary" key is either "auto" (default when absent) or an explicit list
/// of simplex tuples to close up.
struct LoadedMesh {
    SimplicialComplex complex;
    BoundarySubcomplex boundary;
};

LoadedMesh load_mesh(const std::string& json_text);

/// Geometric boundary: the closure of all (d-1)-simplices lying in exactly
/// one top simplex. Requires a pure d-dimensional pseudomanifold-with-
/// boundary (every simplex a face of a top one; every (d-1)-simplex in at
/// most two top ones); violations raise Error naming the offending simplex.
BoundarySubcomplex boundary_subcomplex(const SimplicialComplex& k);

/// Face closure of an explicit simplex list, validated against the parent.
BoundarySubcomplex explicit_subcomplex(
    const SimplicialComplex& k, const std::vector<std::vector<int>>& simplices);

/// Signed incidence matrix of d: C^q -> C^{q+1}; rows are (q+1)-simplices,
/// columns q-simplices, entry (-1)^i where the column is the row's i-th face.
RatMatrix coboundary_matrix(const SimplicialComplex& k, int q);

/// The nested pair of cochain complexes on k: the big complex applies the
/// full coboundary everywhere; the small one restricts its domain to the
/// cochains vanishing on the boundary subcomplex. Both live on the same
/// weighted cochain spaces, so an empty boundary yields the trivial pair.
ComplexPair cochain_pair(const SimplicialComplex& k,
                         const BoundarySubcomplex& b);

/// Cone over k: a fresh apex vertex is joined to every simplex. Weights of
/// existing simplices are kept; new simplices get weight 1. The cone over
/// the empty complex is a single point.
SimplicialComplex cone(const SimplicialComplex& k);

/// Absolute (or relative-to-b) rational cohomology dimensions for
/// q = 0..dim(k), computed by a self-contained fraction-free integer rank
/// routine. This is the independent oracle the pair machinery is compared
/// against: it deliberately shares no code with the relation-based
/// cohomology path.
std::vector<int> reference_cohomology(const SimplicialComplex& k);
std::vector<int> reference_cohomology(const SimplicialComplex& k,
                                      const BoundarySubcomplex& b);

/// The same complex with fresh positive weights drawn from a seeded
/// counter-based generator; used to test weight invariance of dimensions.
SimplicialComplex reweight(const SimplicialComplex& k, std::uint64_t seed);

}  // namespace hodgepair
