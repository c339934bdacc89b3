#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "symrem/hypergraph.hpp"
#include "symrem/rational.hpp"

namespace symrem {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget; // backtracking node cap
};

// A (total) vertex map F -> G; in the partite case each vertex stays in its
// part, so the flat image array encodes the per-part map tuple.
struct Homomorphism {
    std::vector<VertexId> image; // image[v of F] = vertex of G
};

struct HomCount {
    Int count;
    Int total_maps;      // |V(G)|^|V(F)|, or the per-part product
    Rational density;    // count / total_maps, exact

    bool zero() const { return count == 0; }
};

// Number of maps from F to G sending every edge to an edge. Maps are
// arbitrary, not injections. Deterministic and independent of vertex
// labeling. Throws BudgetError when the node cap is hit.
HomCount count_homomorphisms(const Hypergraph& F, const Hypergraph& G,
                             const SearchOptions& opts = {});

// t(F,G) = 0? Early-exits on the first homomorphism found.
bool is_free(const Hypergraph& F, const Hypergraph& G, const SearchOptions& opts = {});

// One witness homomorphism if any exists. The witness always re-validates.
std::optional<Homomorphism> find_homomorphism(const Hypergraph& F, const Hypergraph& G,
                                              const SearchOptions& opts = {});

// Check that `h` really is a homomorphism from F to G.
bool validate_homomorphism(const Hypergraph& F, const Hypergraph& G, const Homomorphism& h);

// One sorted list of G-edge ids per homomorphism image set {f(e) : e in F},
// deduplicated (homs with equal image sets collapse) and sorted. Empty iff
// is_free(F,G). Requires F to have at least one edge.
std::vector<std::vector<EdgeId>> enumerate_copies(const Hypergraph& F, const Hypergraph& G,
                                                  const SearchOptions& opts = {});

} // namespace symrem
