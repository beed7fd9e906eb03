#include "apkit/group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "apkit/errors.hpp"

namespace apkit {

Group Group::finiteCyclic(std::int64_t n) {
    if (n < 1) throw UsageError("FiniteCyclic group needs n >= 1");
    Group g;
    g.kind_ = GroupKind::FiniteCyclic;
    g.dim_ = 1;
    g.n_ = n;
    g.radiusSteps_ = n;
    return g;
}

Group Group::latticeWindow(int dim, std::int64_t radiusSteps) {
    if (dim < 1) throw UsageError("lattice dimension must be positive");
    if (radiusSteps < 0) throw UsageError("window radius must be nonnegative");
    Group g;
    g.kind_ = GroupKind::LatticeWindow;
    g.dim_ = dim;
    g.radiusSteps_ = radiusSteps;
    return g;
}

Group Group::fineLattice(const Rational& step, double radiusReal) {
    if (!(step > Rational(0))) throw UsageError("FineLattice step must be positive");
    if (radiusReal < 0) throw UsageError("window radius must be nonnegative");
    Group g;
    g.kind_ = GroupKind::FineLattice;
    g.dim_ = 1;
    g.step_ = step;
    g.radiusSteps_ = static_cast<std::int64_t>(std::floor(radiusReal / step.toDouble() + 1e-9));
    return g;
}

GroupElement Group::make(std::vector<std::int64_t> coords) const {
    if (static_cast<int>(coords.size()) != dim_)
        throw UsageError("group element has wrong dimension");
    if (kind_ == GroupKind::FiniteCyclic) {
        std::int64_t v = coords[0] % n_;
        if (v < 0) v += n_;
        coords[0] = v;
    }
    return GroupElement(std::move(coords));
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
    if (a.c.size() != b.c.size() || static_cast<int>(a.c.size()) != dim_)
        throw UsageError("mixed-group operands in add");
    std::vector<std::int64_t> out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = checked_add(a.c[i], b.c[i]);
    return make(std::move(out));
}

GroupElement Group::sub(const GroupElement& a, const GroupElement& b) const {
    if (a.c.size() != b.c.size() || static_cast<int>(a.c.size()) != dim_)
        throw UsageError("mixed-group operands in sub");
    std::vector<std::int64_t> out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = checked_sub(a.c[i], b.c[i]);
    return make(std::move(out));
}

GroupElement Group::neg(const GroupElement& a) const {
    if (static_cast<int>(a.c.size()) != dim_) throw UsageError("mixed-group operand in neg");
    std::vector<std::int64_t> out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = checked_neg(a.c[i]);
    return make(std::move(out));
}

Rational Group::normExact(const GroupElement& a) const {
    if (kind_ == GroupKind::FiniteCyclic) {
        std::int64_t v = a.c[0] % n_;
        if (v < 0) v += n_;
        return Rational(std::min(v, n_ - v));
    }
    std::int64_t m = 0;
    for (auto v : a.c) m = std::max(m, v < 0 ? checked_neg(v) : v);
    return step_ * Rational(m);
}

double Group::norm(const GroupElement& a) const { return normExact(a).toDouble(); }

std::int64_t Group::stepsFor(double W) const {
    if (!std::isfinite(W) || W < 0) throw UsageError("window radius must be finite and nonnegative");
    if (kind_ == GroupKind::FiniteCyclic) return n_;
    // floor(W/h) on the rational grid, tolerant of W arriving as a double.
    double steps = W / step_.toDouble();
    return static_cast<std::int64_t>(std::floor(steps + 1e-9));
}

std::int64_t Group::boxSize(std::int64_t R) const {
    if (kind_ == GroupKind::FiniteCyclic) return n_;
    std::int64_t side = checked_add(checked_mul(2, R), 1);
    std::int64_t total = 1;
    for (int i = 0; i < dim_; ++i) total = checked_mul(total, side);
    return total;
}

bool Group::inBox(const GroupElement& a, std::int64_t R) const {
    if (kind_ == GroupKind::FiniteCyclic) return true;
    for (auto v : a.c)
        if (v < -R || v > R) return false;
    return true;
}

std::int64_t Group::boxIndex(const GroupElement& a, std::int64_t R) const {
    if (kind_ == GroupKind::FiniteCyclic) {
        std::int64_t v = a.c[0] % n_;
        if (v < 0) v += n_;
        return v;
    }
    std::int64_t side = 2 * R + 1;
    std::int64_t idx = 0;
    for (int i = 0; i < dim_; ++i) {
        std::int64_t v = a.c[i];
        if (v < -R || v > R) throw WindowingError("element outside box", std::abs(v), R);
        idx = idx * side + (v + R);
    }
    return idx;
}

std::int64_t Group::windowCount(double W) const {
    if (kind_ == GroupKind::FiniteCyclic) return n_;
    return boxSize(stepsFor(W));
}

std::vector<GroupElement> Group::windowElements(double W) const {
    std::int64_t count = windowCount(W);
    if (count > kEnumerationCap)
        throw ResourceError("window enumeration of " + std::to_string(count) +
                            " elements exceeds cap");
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(count));
    if (kind_ == GroupKind::FiniteCyclic) {
        for (std::int64_t v = 0; v < n_; ++v) out.emplace_back(v);
        return out;
    }
    std::int64_t R = stepsFor(W);
    std::vector<std::int64_t> cur(dim_, -R);
    while (true) {
        out.emplace_back(cur);
        int i = dim_ - 1;
        while (i >= 0 && cur[i] == R) { cur[i] = -R; --i; }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

std::vector<GroupElement> Group::ball(double r) const {
    if (!std::isfinite(r) || r < 0) throw UsageError("ball radius must be finite and nonnegative");
    std::vector<GroupElement> out;
    if (kind_ == GroupKind::FiniteCyclic) {
        for (std::int64_t v = 0; v < n_; ++v) {
            if (static_cast<double>(std::min(v, n_ - v)) < r) out.emplace_back(v);
        }
        return out;
    }
    // Strict inequality: largest step radius with |c|*h < r.
    double steps = r / step_.toDouble();
    auto R = static_cast<std::int64_t>(std::ceil(steps - 1e-9)) - 1;
    if (R < 0) R = 0;  // ball always contains 0
    if (boxSize(R) > kEnumerationCap) throw ResourceError("ball enumeration exceeds cap");
    std::vector<std::int64_t> cur(dim_, -R);
    while (true) {
        out.emplace_back(cur);
        int i = dim_ - 1;
        while (i >= 0 && cur[i] == R) { cur[i] = -R; --i; }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

}  // namespace apkit
