#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "wienerlab/graph.hpp"
#include "wienerlab/poly.hpp"

namespace wienerlab {

enum class FamilyKind {
    Complete,           // K_n
    CompleteBipartite,  // K_{m,n}
    Wheel,              // W_n = C_{n-1} + K_1, n vertices in total
    Petersen,
    Path,               // P_n
    EvenCycle,          // C_n, n even
    OddCycle,           // C_n, n odd
    Hypercube,          // Q_n
};

// `n` is the vertex count for every family except Hypercube (dimension) and
// CompleteBipartite (part sizes m, n). Petersen ignores both.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Complete;
    std::size_t m = 0;
    std::size_t n = 0;

    static FamilySpec complete(std::size_t n) { return {FamilyKind::Complete, 0, n}; }
    static FamilySpec complete_bipartite(std::size_t m, std::size_t n) { return {FamilyKind::CompleteBipartite, m, n}; }
    static FamilySpec wheel(std::size_t n) { return {FamilyKind::Wheel, 0, n}; }
    static FamilySpec petersen() { return {FamilyKind::Petersen, 0, 10}; }
    static FamilySpec path(std::size_t n) { return {FamilyKind::Path, 0, n}; }
    // EvenCycle or OddCycle according to the parity of n.
    static FamilySpec cycle(std::size_t n) {
        return {n % 2 == 0 ? FamilyKind::EvenCycle : FamilyKind::OddCycle, 0, n};
    }
    static FamilySpec hypercube(std::size_t dim) { return {FamilyKind::Hypercube, 0, dim}; }
};

// Throws InvalidParameter when the parameters do not describe a simple graph
// of the family.
void validate(const FamilySpec& spec);

Graph construct(const FamilySpec& spec);

// The printed closed forms, evaluated without building the graph.
Poly closed_form_poly(const FamilySpec& spec);
Int closed_form_index(const FamilySpec& spec);

// CLI syntax: "K:7", "Kmn:3,4", "W:6", "P:10", "C:9", "Q:5", "petersen".
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

}  // namespace wienerlab
