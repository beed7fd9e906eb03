#pragma once

#include <cstdint>
#include <vector>

#include "apkit/rational.hpp"

namespace apkit {

enum class GroupKind { FiniteCyclic, LatticeWindow, FineLattice };

/// Element of a discrete abelian group model; integer coordinates, to be read
/// as coords*h for FineLattice groups.
struct GroupElement {
    std::vector<std::int64_t> c;

    GroupElement() = default;
    explicit GroupElement(std::int64_t v) : c{v} {}
    explicit GroupElement(std::vector<std::int64_t> coords) : c(std::move(coords)) {}

    std::int64_t scalar() const { return c.at(0); }
    bool isZero() const {
        for (auto v : c) if (v != 0) return false;
        return true;
    }
    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.c == b.c; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return a.c != b.c; }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.c < b.c; }
};

/// Discrete abelian group model: a finite cyclic group, an integer lattice
/// enumerated through windows, or a fine lattice h*Z standing in for R.
/// The group metric is translation invariant with d_G(t,0) = |t|_inf (times h
/// for FineLattice; cyclic word metric for FiniteCyclic).
class Group {
public:
    static Group finiteCyclic(std::int64_t n);
    static Group latticeWindow(int dim, std::int64_t radiusSteps);
    static Group fineLattice(const Rational& step, double radiusReal);

    GroupKind kind() const { return kind_; }
    int dim() const { return dim_; }
    std::int64_t order() const { return n_; }            // FiniteCyclic only
    std::int64_t radiusSteps() const { return radiusSteps_; }
    const Rational& step() const { return step_; }       // 1 for integer groups
    bool discrete() const { return kind_ != GroupKind::FineLattice; }

    GroupElement zero() const { return GroupElement(std::vector<std::int64_t>(dim_, 0)); }
    GroupElement make(std::vector<std::int64_t> coords) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;

    /// d_G(a, 0).
    double norm(const GroupElement& a) const;
    Rational normExact(const GroupElement& a) const;
    /// d_G(a, b) = d_G(a-b, 0).
    double metric(const GroupElement& a, const GroupElement& b) const { return norm(sub(a, b)); }

    /// All enumerable t with d_G(t,0) < r, sorted lexicographically.
    std::vector<GroupElement> ball(double r) const;

    /// Deterministic lexicographic enumeration of all elements with
    /// d_G(t,0) <= W (real units). FiniteCyclic returns the whole group.
    std::vector<GroupElement> windowElements(double W) const;

    /// Number of window elements without materializing them.
    std::int64_t windowCount(double W) const;

    /// Real-unit window W -> step radius on the lattice (exact floor on the
    /// rational grid).
    std::int64_t stepsFor(double W) const;

    /// Flat index of an element inside the box of step radius R (lexicographic
    /// layout); FiniteCyclic indexes by representative in [0, n).
    std::int64_t boxIndex(const GroupElement& a, std::int64_t R) const;
    std::int64_t boxSize(std::int64_t R) const;
    bool inBox(const GroupElement& a, std::int64_t R) const;

    /// Enumeration guard; windowElements/ball throw ResourceError above this.
    static constexpr std::int64_t kEnumerationCap = 20'000'000;

private:
    Group() = default;

    GroupKind kind_ = GroupKind::LatticeWindow;
    int dim_ = 1;
    std::int64_t n_ = 0;            // FiniteCyclic order
    std::int64_t radiusSteps_ = 0;  // representable coordinate range
    Rational step_ = Rational(1);
};

}  // namespace apkit
