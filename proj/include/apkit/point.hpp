#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "apkit/group.hpp"

namespace apkit {

enum class CodomainMetric { Euclidean, Torus };

/// Function sampled on a box of the group (whole group for FiniteCyclic).
/// Values are m-vectors stored row-major in lexicographic element order; the
/// Torus codomain reads each component as an angle with circular distance.
struct SampledFunction {
    std::int64_t domainRadius = 0;  // step radius of the sample box
    int codomainDim = 1;
    CodomainMetric codomain = CodomainMetric::Euclidean;
    std::vector<double> values;

    friend bool operator==(const SampledFunction&, const SampledFunction&) = default;
};

/// Pure point measure: strictly sorted support, nonzero rational weights.
struct PointMeasure {
    std::vector<GroupElement> support;
    std::vector<Rational> weights;

    friend bool operator==(const PointMeasure&, const PointMeasure&) = default;
};

/// Uniformly discrete point set, strictly sorted. windowRadius records the
/// generation window when known (-1 otherwise).
struct PointSet {
    std::vector<GroupElement> elements;
    std::int64_t windowRadius = -1;

    friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Point of a table-backed fixture (index into the fixture's point list).
struct TablePoint {
    int index = 0;

    friend bool operator==(const TablePoint&, const TablePoint&) = default;
};

using Point = std::variant<SampledFunction, PointMeasure, PointSet, TablePoint>;

/// Sort support/weight pairs, merge duplicate support points by weight
/// addition, drop zero weights.
PointMeasure normalize_measure(std::vector<GroupElement> support, std::vector<Rational> weights);

/// Sort and dedupe.
PointSet normalize_point_set(std::vector<GroupElement> elements, std::int64_t windowRadius = -1);

/// Minimal pairwise separation in the group metric (infinity sentinel for
/// fewer than two points).
double min_separation(const Group& g, const PointSet& s);

const double* sample_at(const Group& g, const SampledFunction& f, const GroupElement& e);

double codomain_distance(const SampledFunction& f, const double* a, const double* b);

void validate_function(const Group& g, const SampledFunction& f);

}  // namespace apkit
