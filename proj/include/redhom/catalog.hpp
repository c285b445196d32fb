#pragma once

// Built-in rings and a small language for naming modules on the command line.
//
// Ring ids: R1 = k[x,y]/(x²,xy,y²), R2 = k[x]/(x^e), R3 = k[x,y]/(x^a,y^b),
// R4 = the 5-dimensional Gorenstein algebra with x²=y²=z²=w, R5 = k.
// A suffix qP picks the field (R1q2); eE and aAbB pick exponents (R2q5e3,
// R3q2a2b3). Defaults: e = 2, a = b = 2.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "redhom/module.hpp"

namespace redhom {

struct CatalogEntry {
    std::string id;
    std::string description;
};

std::vector<CatalogEntry> catalog_entries(std::uint32_t p);

/// p_override (from --p) wins over a q suffix. Throws InputError for unknown ids.
RingSpec catalog_ring(const std::string& id, std::optional<std::uint32_t> p_override = std::nullopt);

/// Module names:
///   k | free:R | zero | cyclic:LABEL,LABEL,…  (Λ modulo the listed basis elements)
///   syzygy:N:SPEC | transpose:SPEC | dual:SPEC | power:R:SPEC | sum:SPEC|SPEC
///   random:SEED:MAXDIM | file:PATH (JSON module document)
Module parse_module(const AlgebraPtr& alg, const std::string& spec);

/// Cokernel of a random Λ-matrix with entries in m, retried until 0 < dim <= max_dim.
Module random_module(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_dim);

/// Fixed named modules (k, Λ, Ωk, tr k, k⊕Λ) followed by seeded random ones.
struct SampleModule {
    std::string name;
    Module module;
};
std::vector<SampleModule> sample_modules(const AlgebraPtr& alg, std::uint64_t seed, std::size_t random_count,
                                         std::size_t max_dim);

}  // namespace redhom
