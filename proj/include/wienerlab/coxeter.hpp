#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wienerlab/graph.hpp"
#include "wienerlab/poly.hpp"

namespace wienerlab::coxeter {

enum class Family { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

// `rank` is the rank for A, B, D; the dihedral parameter m for I2(m); unused
// for the exceptional types.
struct Spec {
    Family family = Family::A;
    unsigned rank = 1;
};

Family parse_family(std::string_view name);
std::string to_string(const Spec& spec);

// Exponents from the standard tables. Throws InvalidRank outside
// A_n (n>=1), B_n (n>=2), D_n (n>=4), I2(m) (m>=2).
std::vector<unsigned> exponents(const Spec& spec);

// prod over exponents e of (1 + e q).
Poly poincare_poly(const Spec& spec);

// Every table entry exercised by the verification suites.
std::vector<Spec> catalogue();

// Permutations of 0..n-1 in one-line notation, ranked lexicographically.
std::vector<std::vector<std::uint8_t>> permutations(unsigned n);
std::size_t permutation_rank(const std::vector<std::uint8_t>& perm);

// n minus the number of cycles.
unsigned absolute_length(const std::vector<std::uint8_t>& perm);

inline constexpr unsigned kMaxReflectionRank = 6;

// G_W for W = S_n: vertices are permutations (by lexicographic rank, so the
// identity is vertex 0); w ~ w t for every transposition t. Throws
// RankTooLarge for n > 6 and InvalidRank for n < 2.
Graph reflection_graph(unsigned n);

struct WgwCheck {
    Poly ordered;         // ordered_wiener(G_W)
    Poly scaled_poincare; // n! * Pi(A_{n-1}; q)
    Poly from_identity;   // relative_wiener(G_W, identity)
    Poly poincare;        // Pi(A_{n-1}; q)

    bool ok() const { return ordered == scaled_poincare && from_identity == poincare; }
};

WgwCheck check_wgw(unsigned n);
bool verify_wgw(unsigned n);

}  // namespace wienerlab::coxeter
