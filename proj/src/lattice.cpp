#include "disc/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace disc
{

namespace
{

int checked_width(const ArrangementSpec& spec)
{
    require_generic(spec);
    const std::uint64_t count = circuit_count(spec.n, spec.k);
    if (count > static_cast<std::uint64_t>(kMaxSupportWidth)) {
        throw ScaleGuardError("C(n,k+1) = " + std::to_string(count) +
                              " circuits exceeds the 64-bit support width; lower n");
    }
    return static_cast<int>(count);
}

// Kernel of [old kernel constraints; normal]: combine columns to cancel normal . column.
IntegerMatrix restrict_kernel(const IntegerMatrix& kernel, const IntegerVector& normal)
{
    const IntegerVector hits = kernel.transpose() * normal;
    Eigen::Index pivot = 0;
    while (pivot < hits.size() && hits(pivot) == 0) {
        ++pivot;
    }
    if (pivot == hits.size()) {
        return kernel;
    }
    IntegerMatrix out(kernel.rows(), kernel.cols() - 1);
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < kernel.cols(); ++i) {
        if (i == pivot) {
            continue;
        }
        out.col(col) = kernel.col(i) * hits(pivot) - kernel.col(pivot) * hits(i);
        make_primitive(out.col(col));
        ++col;
    }
    return out;
}

}  // namespace

DiscriminantalArrangement::DiscriminantalArrangement(ArrangementSpec spec) : spec_(std::move(spec))
{
    const int width = checked_width(spec_);
    normals_.resize(width, spec_.n);
    for (int i = 0; i < width; ++i) {
        const DiscriminantalNormal dn =
            discriminantal_normal(spec_, circuit_unrank(CircuitIndex{static_cast<std::uint64_t>(i)},
                                                        spec_.n, spec_.k));
        IntegerVector row = clear_denominators(dn.vector.transpose()).transpose();
        make_primitive(row);
        normals_.row(i) = row.transpose();
    }
}

Circuit DiscriminantalArrangement::circuit(int index) const
{
    return circuit_unrank(CircuitIndex{static_cast<std::uint64_t>(index)}, spec_.n, spec_.k);
}

IntegerMatrix DiscriminantalArrangement::intersection_basis(Support f) const
{
    IntegerMatrix rows(f.size(), spec_.n);
    Eigen::Index r = 0;
    for (int i = 0; i < circuit_count(); ++i) {
        if (f.contains(i)) {
            rows.row(r++) = normals_.row(i);
        }
    }
    return integer_kernel(rows);
}

Support DiscriminantalArrangement::support_of(const IntegerMatrix& basis) const
{
    const IntegerMatrix hits = normals_ * basis;
    Support out;
    for (Eigen::Index i = 0; i < hits.rows(); ++i) {
        bool zero = true;
        for (Eigen::Index j = 0; j < hits.cols() && zero; ++j) {
            zero = hits(i, j) == 0;
        }
        if (zero) {
            out.bits |= std::uint64_t{1} << i;
        }
    }
    return out;
}

int DiscriminantalArrangement::rank_of(Support f) const
{
    return spec_.n - static_cast<int>(intersection_basis(f).cols());
}

Support closure(const ArrangementSpec& spec, Support f)
{
    return DiscriminantalArrangement(spec).closure(f);
}

Lattice::Lattice(ArrangementSpec spec, int width, std::vector<LatticeElement> elements,
                 std::vector<std::pair<ElementId, ElementId>> covers)
    : spec_(std::move(spec)), width_(width), elements_(std::move(elements)), covers_(std::move(covers))
{
    for (ElementId id = 0; id < elements_.size(); ++id) {
        const auto r = static_cast<std::size_t>(elements_[id].rank);
        if (levels_.size() <= r) {
            levels_.resize(r + 1);
        }
        levels_[r].push_back(id);
        index_.emplace(elements_[id].support.bits, id);
    }
}

std::optional<ElementId> Lattice::find(Support f) const
{
    const auto it = index_.find(f.bits);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Lattice::less_equal(ElementId x, ElementId y) const
{
    return element(x).support.subset_of(element(y).support);
}

std::vector<std::pair<std::size_t, std::size_t>> containment_covers(const std::vector<Support>& family)
{
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::vector<std::size_t> uppers;
    std::vector<std::size_t> minimal;
    for (std::size_t x = 0; x < family.size(); ++x) {
        uppers.clear();
        for (std::size_t y = 0; y < family.size(); ++y) {
            if (y != x && family[x].subset_of(family[y]) && family[x] != family[y]) {
                uppers.push_back(y);
            }
        }
        std::stable_sort(uppers.begin(), uppers.end(), [&](std::size_t a, std::size_t b) {
            return family[a].size() < family[b].size();
        });
        // A non-minimal upper bound lies above some minimal one of smaller size.
        minimal.clear();
        for (const std::size_t y : uppers) {
            const bool above_minimal = std::any_of(minimal.begin(), minimal.end(), [&](std::size_t m) {
                return family[m].subset_of(family[y]);
            });
            if (!above_minimal) {
                minimal.push_back(y);
                covers.emplace_back(x, y);
            }
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

Lattice build_lattice(const ArrangementSpec& spec, const LatticeLimits& limits)
{
    const DiscriminantalArrangement arrangement(spec);
    const int width = arrangement.circuit_count();

    struct Node
    {
        Support support;
        int rank;
        IntegerMatrix kernel;
        RationalMatrix basis;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::uint64_t, std::size_t> seen;

    IntegerMatrix identity = IntegerMatrix::Identity(spec.n, spec.n);
    const Support bottom = arrangement.support_of(identity);
    nodes.push_back(Node{bottom, 0, std::move(identity), RationalMatrix(0, spec.n)});
    seen.emplace(bottom.bits, 0);

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        Support covered = nodes[head].support;
        for (int j = 0; j < width; ++j) {
            if (covered.contains(j)) {
                continue;
            }
            // Adding an independent normal raises the rank by exactly one.
            IntegerMatrix kernel = restrict_kernel(nodes[head].kernel, arrangement.normals().row(j).transpose());
            const Support next = arrangement.support_of(kernel);
            // Every circuit of next yields the same closure from this element.
            covered = covered | next;
            if (seen.contains(next.bits)) {
                continue;
            }
            if (nodes.size() >= limits.max_elements) {
                throw ScaleGuardError("lattice exceeds " + std::to_string(limits.max_elements) +
                                      " elements; lower n");
            }
            RationalMatrix basis(nodes[head].basis.rows() + 1, spec.n);
            basis.topRows(nodes[head].basis.rows()) = nodes[head].basis;
            basis.row(basis.rows() - 1) = arrangement.normals().row(j).cast<Rational>();
            seen.emplace(next.bits, nodes.size());
            nodes.push_back(Node{next, nodes[head].rank + 1, std::move(kernel), std::move(basis)});
        }
    }

    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (nodes[a].rank != nodes[b].rank) {
            return nodes[a].rank < nodes[b].rank;
        }
        return order_key(nodes[a].support, width) < order_key(nodes[b].support, width);
    });

    std::vector<LatticeElement> elements;
    std::vector<Support> supports;
    elements.reserve(nodes.size());
    for (const std::size_t i : order) {
        elements.push_back(LatticeElement{nodes[i].support, nodes[i].rank, std::move(nodes[i].basis)});
        supports.push_back(nodes[i].support);
    }
    return Lattice(spec, width, std::move(elements), containment_covers(supports));
}

std::optional<LatticeElement> element_by_support(const Lattice& lat, Support f)
{
    const auto id = lat.find(f);
    if (!id) {
        return std::nullopt;
    }
    return lat.element(*id);
}

std::vector<ElementId> interval(const Lattice& lat, ElementId x, ElementId y)
{
    if (x >= lat.size() || y >= lat.size()) {
        throw PreconditionError("interval: element id out of range");
    }
    if (!lat.less_equal(x, y)) {
        throw PreconditionError("interval: lower element is not below upper element");
    }
    const Support lo = lat.element(x).support;
    const Support hi = lat.element(y).support;
    std::vector<ElementId> out;
    for (ElementId z = 0; z < lat.size(); ++z) {
        const Support s = lat.element(z).support;
        if (lo.subset_of(s) && s.subset_of(hi)) {
            out.push_back(z);
        }
    }
    return out;
}

}  // namespace disc
