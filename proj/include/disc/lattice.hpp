#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "disc/exactgeom.hpp"
#include "disc/support.hpp"

namespace disc
{

/// B(n, k) with every discriminantal normal precomputed as a primitive integer row.
class DiscriminantalArrangement
{
public:
    /// Certifies genericity; throws ScaleGuardError when C(n, k+1) > 64.
    explicit DiscriminantalArrangement(ArrangementSpec spec);

    const ArrangementSpec& spec() const noexcept { return spec_; }
    int circuit_count() const noexcept { return static_cast<int>(normals_.rows()); }
    Circuit circuit(int index) const;
    /// Row i: normal of D_I for the circuit of colex index i.
    const IntegerMatrix& normals() const noexcept { return normals_; }

    /// Primitive integer basis (as columns) of X_f = intersection of D_I, I in f.
    IntegerMatrix intersection_basis(Support f) const;
    /// All circuits whose normal is orthogonal to every column of basis.
    Support support_of(const IntegerMatrix& basis) const;

    Support closure(Support f) const { return support_of(intersection_basis(f)); }
    int rank_of(Support f) const;

private:
    ArrangementSpec spec_;
    IntegerMatrix normals_;
};

Support closure(const ArrangementSpec& spec, Support f);

using ElementId = std::size_t;

struct LatticeElement
{
    Support support;
    int rank = 0;
    RationalMatrix basis;  // rank rows spanning the normals indexed by support
};

struct LatticeLimits
{
    std::size_t max_elements = 1'000'000;
};

class Lattice
{
public:
    Lattice(ArrangementSpec spec, int width, std::vector<LatticeElement> elements,
            std::vector<std::pair<ElementId, ElementId>> covers);

    const ArrangementSpec& spec() const noexcept { return spec_; }
    int width() const noexcept { return width_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<LatticeElement>& elements() const noexcept { return elements_; }
    const LatticeElement& element(ElementId id) const { return elements_.at(id); }
    const std::vector<std::vector<ElementId>>& levels() const noexcept { return levels_; }
    /// Sorted (lower, upper) pairs of the transitive reduction of the order.
    const std::vector<std::pair<ElementId, ElementId>>& covers() const noexcept { return covers_; }

    std::optional<ElementId> find(Support f) const;
    bool contains(Support f) const { return index_.contains(f.bits); }
    bool less_equal(ElementId x, ElementId y) const;
    ElementId bottom() const noexcept { return 0; }
    ElementId top() const noexcept { return elements_.size() - 1; }

private:
    ArrangementSpec spec_;
    int width_;
    std::vector<LatticeElement> elements_;
    std::vector<std::vector<ElementId>> levels_;
    std::vector<std::pair<ElementId, ElementId>> covers_;
    std::unordered_map<std::uint64_t, ElementId> index_;
};

/// All closed supports by breadth-first extension, sorted by (rank, bitstring);
/// covers by transitive reduction of support containment.
Lattice build_lattice(const ArrangementSpec& spec, const LatticeLimits& limits = {});

std::optional<LatticeElement> element_by_support(const Lattice& lat, Support f);

/// Elements z with F(x) within F(z) within F(y), in element order. Throws unless x <= y.
std::vector<ElementId> interval(const Lattice& lat, ElementId x, ElementId y);

/// Transitive reduction of the containment order on an arbitrary family of supports.
std::vector<std::pair<std::size_t, std::size_t>> containment_covers(const std::vector<Support>& family);

}  // namespace disc
