#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "symrem/errors.hpp"
#include "symrem/label.hpp"
#include "symrem/rational.hpp"

namespace symrem {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using EdgeTuple = std::vector<VertexId>;

// Directed k-uniform hypergraphs, plain and t-partite, over a flattened
// vertex space. Vertices get global indices 0..n-1; in the partite case the
// parts are contiguous index ranges, so an edge tuple determines its
// edge-type (the strictly increasing sequence of parts its coordinates lie
// in). Edges are stored sorted and deduplicated; instances are immutable
// after construction.
class Hypergraph {
public:
    enum class Kind { Directed, Partite };

    // Plain directed graph. Rejects repeated coordinates and unknown labels.
    static Hypergraph directed(std::vector<Label> vertices, unsigned k,
                               const std::vector<std::vector<Label>>& edges);

    // t-partite graph; edges are (type, tuple) pairs with 0-based part
    // indices, strictly increasing (non-canonical input is rejected).
    static Hypergraph partite(std::vector<std::vector<Label>> parts, unsigned k,
                              const std::vector<std::pair<std::vector<unsigned>,
                                                          std::vector<Label>>>& edges);

    // Construction from already-resolved vertex indices (library builders).
    static Hypergraph directed_from_indices(std::vector<Label> vertices, unsigned k,
                                            std::vector<EdgeTuple> edges);
    static Hypergraph partite_from_indices(std::vector<std::vector<Label>> parts, unsigned k,
                                           std::vector<EdgeTuple> edges);

    Kind kind() const { return kind_; }
    unsigned arity() const { return k_; }
    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t part_count() const { return part_offsets_.size() - 1; }
    std::size_t part_size(std::size_t i) const {
        return part_offsets_[i + 1] - part_offsets_[i];
    }
    VertexId part_begin(std::size_t i) const { return part_offsets_[i]; }
    unsigned part_of(VertexId v) const;
    const Label& label(VertexId v) const { return labels_[v]; }
    const std::vector<Label>& labels() const { return labels_; }

    std::size_t edge_count() const { return edges_.size() / k_; }
    std::span<const VertexId> edge(EdgeId e) const {
        return {edges_.data() + std::size_t{e} * k_, k_};
    }
    EdgeTuple edge_tuple(EdgeId e) const {
        auto s = edge(e);
        return EdgeTuple(s.begin(), s.end());
    }

    std::optional<EdgeId> edge_id(std::span<const VertexId> tuple) const;
    bool has_edge(std::span<const VertexId> tuple) const { return edge_id(tuple).has_value(); }

    // Throws UniverseMismatch unless `tuple` is a valid member of this
    // graph's edge universe (arity, vertex range, distinctness / part order).
    void check_universe_tuple(std::span<const VertexId> tuple) const;

    // Edge-type of a tuple (partite): the 0-based part index sequence.
    std::vector<unsigned> type_of(std::span<const VertexId> tuple) const;

    // G minus S. Tuples of S must be in the universe but need not be edges.
    Hypergraph subtract(const std::vector<EdgeTuple>& removed) const;

    // |V|^k, the denominator used when reporting removal-set ratios.
    Int universe_size() const { return int_pow(Int(vertex_count()), k_); }

    // Number of maps (or per-part map tuples) from F's vertices into this
    // graph; the denominator of the homomorphism density.
    Int total_maps_from(const Hypergraph& F) const;

    // Plain encoding of a partite graph: disjoint-union vertex set (labels
    // prefixed with the part index), identical edge tuples, types enforced
    // purely by edge membership.
    Hypergraph flatten_to_directed() const;

    // Resolve a label (directed) or part-local label (partite) to its index.
    std::optional<VertexId> vertex_by_label(const Label& l) const;
    std::optional<VertexId> vertex_by_label(unsigned part, const Label& l) const;

    std::string tuple_string(std::span<const VertexId> tuple) const;

    bool operator==(const Hypergraph& other) const {
        return kind_ == other.kind_ && k_ == other.k_ && labels_ == other.labels_ &&
               part_offsets_ == other.part_offsets_ && edges_ == other.edges_;
    }

private:
    Hypergraph() = default;

    void finalize(std::vector<EdgeTuple> edges, bool validate);
    void build_lookup();

    Kind kind_ = Kind::Directed;
    unsigned k_ = 0;
    std::vector<Label> labels_;
    std::vector<VertexId> part_offsets_; // size part_count()+1; directed: {0, n}
    std::vector<VertexId> edges_;        // flat, stride k, sorted lexicographically
    std::unordered_map<std::uint64_t, std::vector<EdgeId>> lookup_; // tuple hash -> ids
};

std::uint64_t tuple_hash(std::span<const VertexId> tuple);

// Lexicographic comparison of edge tuples.
inline bool tuple_less(std::span<const VertexId> a, std::span<const VertexId> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace symrem
