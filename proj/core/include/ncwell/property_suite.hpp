#pragma once

#include <string>
#include <vector>

namespace ncwell {

/// Result of exercising one algebraic law on randomized instances.
struct PropertyResult {
    std::string name;
    int instances = 0;
    int failures = 0;
    double milliseconds = 0.0;
    std::string first_failure; ///< description of the first failing instance, if any

    bool passed() const { return failures == 0; }
};

struct PropertySuiteResult {
    std::vector<PropertyResult> properties;

    bool all_passed() const;
    int total_instances() const;
};

/// Exercises the structural laws of the scalar field, the operator algebra,
/// and the phase-space maps on deterministically seeded random instances:
/// Jacobi identity, associativity, adjoint involution and antihomomorphism,
/// normal-ordering idempotence, commutator antisymmetry/bilinearity, scalar
/// canonicalization, map homomorphism and round-trip, Hermiticity
/// preservation, commutative limit, and bucket re-summation.
PropertySuiteResult run_property_suite(int instances_per_property = 200,
                                       unsigned long long seed = 0x9E3779B97F4A7C15ull);

} // namespace ncwell
