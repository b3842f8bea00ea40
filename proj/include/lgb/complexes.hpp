#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgb/monomial.hpp"
#include "lgb/monomial_ideal.hpp"

namespace lgb {

/// Simplicial complex on a labelled vertex set, stored by its facets as
/// bitmasks over `vertices()` (at most 64 vertices).
///
/// facets() == {0}  is {emptyset}, the empty complex;
/// facets() == {}   is the void complex with no faces at all.
class SimplicialComplex {
public:
    using Mask = std::uint64_t;

    SimplicialComplex() = default;
    /// Facets are re-minimalized (faces contained in others dropped).
    SimplicialComplex(std::vector<Var> vertices, std::vector<Mask> facets);
    static SimplicialComplex simplex(std::vector<Var> vertices);
    static SimplicialComplex empty_complex(std::vector<Var> vertices);
    static SimplicialComplex from_facets(std::vector<Var> vertices, const std::vector<std::vector<Var>>& facets);

    const std::vector<Var>& vertices() const { return vertices_; }
    const std::vector<Mask>& facets() const { return facets_; }
    std::vector<std::vector<Var>> facet_lists() const;

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_.front() == 0; }
    bool is_simplex() const { return facets_.size() == 1; }
    bool has_face(const std::vector<Var>& face) const;
    int index_of(Var v) const;

    int dim() const;
    bool is_pure() const;
    int codimension() const { return static_cast<int>(vertices_.size()) - dim() - 1; }

    /// Sorted facets as vertex lists; equal complexes give equal keys.
    std::string key() const;
    std::string to_string() const;
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }

private:
    std::vector<Var> vertices_;
    std::vector<Mask> facets_;
};

struct ComplexBudget {
    /// Facets produced plus VD search nodes (0 = unlimited).
    std::size_t max_faces = 0;
    std::size_t used = 0;
    void charge(std::size_t n);
};

/// Stanley-Reisner complex of a squarefree monomial ideal on its ambient ring.
SimplicialComplex from_squarefree(const MonomialIdeal& a, ComplexBudget* budget = nullptr);
/// Stanley-Reisner ideal of a complex (minimal non-faces).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c);

/// Both drop v from the ground set. A vertex outside the ground set leaves
/// the complex unchanged.
SimplicialComplex link(const SimplicialComplex& c, Var v);
SimplicialComplex deletion(const SimplicialComplex& c, Var v);

struct ConeReduction {
    SimplicialComplex complex;
    std::vector<Var> removed;
};
ConeReduction remove_cone_points(const SimplicialComplex& c);

/// Vertex decomposition tree. Leaves are "simplex" or "empty".
struct VDCertificate {
    enum class Kind { Simplex, Empty, Node };
    Kind kind = Kind::Empty;
    Var vertex = 0;
    std::shared_ptr<const VDCertificate> link;
    std::shared_ptr<const VDCertificate> deletion;

    friend bool operator==(const VDCertificate& a, const VDCertificate& b);
};

struct VDResult {
    bool decomposable = false;
    std::shared_ptr<const VDCertificate> certificate;
    /// For failures: the complexes where no shedding vertex worked.
    std::vector<std::string> trace;
};

/// Side conditions of a shedding vertex: {v} a face, link and deletion pure,
/// dim(c) = dim(deletion) = dim(link) + 1. For a cone point v only the link
/// is checked, since c is then a cone over its link.
bool check_shedding(const SimplicialComplex& c, Var v);

/// Memoized exhaustive search. `preferred` vertices are tried first (in
/// that order), then the rest ascending.
VDResult is_vertex_decomposable(const SimplicialComplex& c, const std::vector<Var>& preferred = {},
                                ComplexBudget* budget = nullptr);

/// Re-checks a certificate against a complex, stripping cone points at
/// every level as the search does.
bool replay_certificate(const SimplicialComplex& c, const VDCertificate& cert, std::string* why = nullptr);

} // namespace lgb
