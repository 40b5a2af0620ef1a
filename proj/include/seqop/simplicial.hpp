#pragma once
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Finite simplicial sets.  Only nondegenerate simplices are stored; an
// arbitrary simplex is a pair (base, vmap) with base nondegenerate and vmap a
// monotone surjection of vertex sets, so every face and degeneracy operator
// is composition of monotone maps plus a face-table lookup when a vertex
// collapse makes the base smaller.

namespace seqop {

struct DegSimplex {
    int base_dim = 0;
    int base_id = 0;
    std::vector<int> vmap;  // monotone onto 0..base_dim; size = dim + 1
    int dim() const { return (int)vmap.size() - 1; }
    bool nondegenerate() const { return (int)vmap.size() == base_dim + 1; }
    auto operator<=>(const DegSimplex&) const = default;
};

class FiniteSimplicialSet {
public:
    // returns the index of the new simplex within its dimension
    int add_simplex(int dim, const std::string& name);
    // faces d_0..d_dim of a nondegenerate simplex, each of one lower dimension
    void set_faces(int dim, int idx, std::vector<DegSimplex> faces);
    void set_basepoint(int idx);
    std::optional<int> basepoint() const { return base_; }

    int top_dimension() const { return (int)names_.size() - 1; }
    int count(int dim) const;
    const std::string& name(int dim, int idx) const;
    std::optional<std::pair<int, int>> find(const std::string& name) const;

    DegSimplex nondeg(int dim, int idx) const;
    DegSimplex face(int dim, int idx, int i) const;  // table lookup
    DegSimplex face(const DegSimplex& x, int i) const;
    DegSimplex degeneracy(const DegSimplex& x, int j) const;
    // iterated face keeping exactly the vertices in keep (sorted, nonempty)
    DegSimplex restrict(const DegSimplex& x, const std::vector<int>& keep) const;

    // face-table shapes and the identities d_i d_j = d_{j-1} d_i for i < j;
    // throws std::invalid_argument on the first violation
    void validate() const;

    std::string show(const DegSimplex& x) const;

private:
    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<std::vector<DegSimplex>>> faces_;
    std::optional<int> base_;
};

// the simplex on vertices 0..n; simplices are named by their vertex digits
FiniteSimplicialSet standard_simplex(int n);
// one basepoint and one n-cell whose faces collapse to the point
FiniteSimplicialSet boundary_quotient(int n);
// the projective plane: one vertex, an edge loop, and a triangle glued along
// the edge twice
FiniteSimplicialSet projective_plane();

// structured text reader: {"dimensions": {"0": ["v"], ...},
// "faces": {"e": ["v", "s0 v", ...], ...}, "basepoint": "v"};
// face entries name a simplex with an optional degeneracy word in front
FiniteSimplicialSet load_simplicial_set(const std::string& text);

}  // namespace seqop
