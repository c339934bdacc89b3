#include "symrem/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace symrem {

std::uint64_t tuple_hash(std::span<const VertexId> tuple) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (VertexId v : tuple) {
        h ^= v;
        h *= 0x100000001b3ull;
    }
    return h;
}

unsigned Hypergraph::part_of(VertexId v) const {
    auto it = std::upper_bound(part_offsets_.begin(), part_offsets_.end(), v);
    return static_cast<unsigned>(it - part_offsets_.begin()) - 1;
}

Hypergraph Hypergraph::directed(std::vector<Label> vertices, unsigned k,
                                const std::vector<std::vector<Label>>& edges) {
    if (k == 0) fail(ErrorKind::BadInput, "arity must be positive");
    std::unordered_map<Label, VertexId, LabelHash> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!index.emplace(vertices[i], static_cast<VertexId>(i)).second)
            fail(ErrorKind::BadInput, "duplicate vertex label " + vertices[i].str());
    }
    std::vector<EdgeTuple> resolved;
    resolved.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.size() != k)
            fail(ErrorKind::UniverseMismatch,
                 "edge has " + std::to_string(e.size()) + " coordinates, expected " +
                     std::to_string(k));
        EdgeTuple tup;
        tup.reserve(k);
        for (const Label& l : e) {
            auto it = index.find(l);
            if (it == index.end())
                fail(ErrorKind::UnknownVertex, "edge coordinate " + l.str() + " is not a vertex");
            tup.push_back(it->second);
        }
        resolved.push_back(std::move(tup));
    }
    Hypergraph g;
    g.kind_ = Kind::Directed;
    g.k_ = k;
    g.labels_ = std::move(vertices);
    g.part_offsets_ = {0, static_cast<VertexId>(g.labels_.size())};
    g.finalize(std::move(resolved), true);
    return g;
}

Hypergraph Hypergraph::partite(std::vector<std::vector<Label>> parts, unsigned k,
                               const std::vector<std::pair<std::vector<unsigned>,
                                                           std::vector<Label>>>& edges) {
    if (k == 0) fail(ErrorKind::BadInput, "arity must be positive");
    if (parts.empty()) fail(ErrorKind::BadInput, "a partite graph needs at least one part");
    if (k > parts.size())
        fail(ErrorKind::BadInput, "arity " + std::to_string(k) + " exceeds part count " +
                                      std::to_string(parts.size()));

    Hypergraph g;
    g.kind_ = Kind::Partite;
    g.k_ = k;
    g.part_offsets_ = {0};
    std::vector<std::unordered_map<Label, VertexId, LabelHash>> index(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (const Label& l : parts[p]) {
            if (!index[p].emplace(l, static_cast<VertexId>(g.labels_.size())).second)
                fail(ErrorKind::BadInput,
                     "duplicate label " + l.str() + " in part " + std::to_string(p));
            g.labels_.push_back(l);
        }
        g.part_offsets_.push_back(static_cast<VertexId>(g.labels_.size()));
    }

    std::vector<EdgeTuple> resolved;
    resolved.reserve(edges.size());
    for (const auto& [type, tuple] : edges) {
        if (type.size() != k || tuple.size() != k)
            fail(ErrorKind::BadEdgeType, "edge type and tuple must both have " +
                                             std::to_string(k) + " entries");
        for (std::size_t j = 0; j < k; ++j) {
            if (type[j] >= parts.size())
                fail(ErrorKind::BadEdgeType,
                     "part index " + std::to_string(type[j]) + " out of range");
            if (j > 0 && type[j] <= type[j - 1])
                fail(ErrorKind::BadEdgeType, "part indices must be strictly increasing");
        }
        EdgeTuple tup;
        tup.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            auto it = index[type[j]].find(tuple[j]);
            if (it == index[type[j]].end())
                fail(ErrorKind::PartMismatch, "coordinate " + tuple[j].str() +
                                                  " is not in part " + std::to_string(type[j]));
            tup.push_back(it->second);
        }
        resolved.push_back(std::move(tup));
    }
    g.finalize(std::move(resolved), false);
    return g;
}

Hypergraph Hypergraph::directed_from_indices(std::vector<Label> vertices, unsigned k,
                                             std::vector<EdgeTuple> edges) {
    if (k == 0) fail(ErrorKind::BadInput, "arity must be positive");
    Hypergraph g;
    g.kind_ = Kind::Directed;
    g.k_ = k;
    g.labels_ = std::move(vertices);
    g.part_offsets_ = {0, static_cast<VertexId>(g.labels_.size())};
    g.finalize(std::move(edges), true);
    return g;
}

Hypergraph Hypergraph::partite_from_indices(std::vector<std::vector<Label>> parts, unsigned k,
                                            std::vector<EdgeTuple> edges) {
    if (k == 0) fail(ErrorKind::BadInput, "arity must be positive");
    if (k > parts.size()) fail(ErrorKind::BadInput, "arity exceeds part count");
    Hypergraph g;
    g.kind_ = Kind::Partite;
    g.k_ = k;
    g.part_offsets_ = {0};
    for (auto& part : parts) {
        for (auto& l : part) g.labels_.push_back(std::move(l));
        g.part_offsets_.push_back(static_cast<VertexId>(g.labels_.size()));
    }
    g.finalize(std::move(edges), true);
    return g;
}

void Hypergraph::finalize(std::vector<EdgeTuple> edges, bool validate) {
    if (validate) {
        for (const auto& e : edges) check_universe_tuple(e);
    } else {
        // typed-input path: parts and ranges were checked during resolution,
        // distinctness is implied by part disjointness
        for (const auto& e : edges)
            if (e.size() != k_) fail(ErrorKind::UniverseMismatch, "bad edge arity");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_.reserve(edges.size() * k_);
    for (const auto& e : edges) edges_.insert(edges_.end(), e.begin(), e.end());
    build_lookup();
}

void Hypergraph::build_lookup() {
    lookup_.clear();
    for (EdgeId e = 0; e < edge_count(); ++e) lookup_[tuple_hash(edge(e))].push_back(e);
}

std::optional<EdgeId> Hypergraph::edge_id(std::span<const VertexId> tuple) const {
    auto it = lookup_.find(tuple_hash(tuple));
    if (it == lookup_.end()) return std::nullopt;
    for (EdgeId e : it->second) {
        auto s = edge(e);
        if (std::equal(s.begin(), s.end(), tuple.begin(), tuple.end())) return e;
    }
    return std::nullopt;
}

void Hypergraph::check_universe_tuple(std::span<const VertexId> tuple) const {
    if (tuple.size() != k_)
        fail(ErrorKind::UniverseMismatch, "tuple arity " + std::to_string(tuple.size()) +
                                              " does not match graph arity " +
                                              std::to_string(k_));
    for (VertexId v : tuple)
        if (v >= labels_.size())
            fail(ErrorKind::UniverseMismatch, "vertex index " + std::to_string(v) +
                                                  " out of range");
    if (kind_ == Kind::Directed) {
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j)
                if (tuple[i] == tuple[j])
                    fail(ErrorKind::RepeatedCoordinate,
                         "tuple " + tuple_string(tuple) + " repeats a coordinate");
    } else {
        unsigned prev = 0;
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            unsigned p = part_of(tuple[j]);
            if (j > 0 && p <= prev)
                fail(ErrorKind::UniverseMismatch,
                     "tuple " + tuple_string(tuple) + " does not have strictly increasing parts");
            prev = p;
        }
    }
}

std::vector<unsigned> Hypergraph::type_of(std::span<const VertexId> tuple) const {
    std::vector<unsigned> type;
    type.reserve(tuple.size());
    for (VertexId v : tuple) type.push_back(part_of(v));
    return type;
}

Hypergraph Hypergraph::subtract(const std::vector<EdgeTuple>& removed) const {
    std::unordered_set<std::uint64_t> gone;
    std::vector<EdgeTuple> gone_tuples;
    for (const auto& t : removed) {
        check_universe_tuple(t);
        gone.insert(tuple_hash(t));
        gone_tuples.push_back(t);
    }
    auto is_removed = [&](std::span<const VertexId> e) {
        if (!gone.count(tuple_hash(e))) return false;
        for (const auto& t : gone_tuples)
            if (std::equal(e.begin(), e.end(), t.begin(), t.end())) return true;
        return false;
    };
    Hypergraph g;
    g.kind_ = kind_;
    g.k_ = k_;
    g.labels_ = labels_;
    g.part_offsets_ = part_offsets_;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto s = edge(e);
        if (!is_removed(s)) g.edges_.insert(g.edges_.end(), s.begin(), s.end());
    }
    g.build_lookup();
    return g;
}

Int Hypergraph::total_maps_from(const Hypergraph& F) const {
    Int total = 1;
    if (kind_ == Kind::Directed) {
        total = int_pow(Int(vertex_count()), static_cast<unsigned>(F.vertex_count()));
    } else {
        for (std::size_t p = 0; p < part_count(); ++p)
            total *= int_pow(Int(part_size(p)), static_cast<unsigned>(F.part_size(p)));
    }
    return total;
}

Hypergraph Hypergraph::flatten_to_directed() const {
    if (kind_ == Kind::Directed) return *this;
    std::vector<Label> flat;
    flat.reserve(labels_.size());
    for (VertexId v = 0; v < labels_.size(); ++v)
        flat.emplace_back(std::to_string(part_of(v)) + ":" + labels_[v].str());
    std::vector<EdgeTuple> tuples;
    tuples.reserve(edge_count());
    for (EdgeId e = 0; e < edge_count(); ++e) tuples.push_back(edge_tuple(e));
    return directed_from_indices(std::move(flat), k_, std::move(tuples));
}

std::optional<VertexId> Hypergraph::vertex_by_label(const Label& l) const {
    for (VertexId v = 0; v < labels_.size(); ++v)
        if (labels_[v] == l) return v;
    return std::nullopt;
}

std::optional<VertexId> Hypergraph::vertex_by_label(unsigned part, const Label& l) const {
    for (VertexId v = part_offsets_[part]; v < part_offsets_[part + 1]; ++v)
        if (labels_[v] == l) return v;
    return std::nullopt;
}

std::string Hypergraph::tuple_string(std::span<const VertexId> tuple) const {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        if (tuple[i] < labels_.size()) {
            if (kind_ == Kind::Partite)
                out += std::to_string(part_of(tuple[i])) + ":";
            out += labels_[tuple[i]].str();
        } else {
            out += "#" + std::to_string(tuple[i]);
        }
    }
    return out + ")";
}

} // namespace symrem
