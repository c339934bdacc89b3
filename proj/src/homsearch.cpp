#include "symrem/homsearch.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "symrem/bitset.hpp"

namespace symrem {

namespace {

constexpr VertexId kHole = ~VertexId{0};

struct KeyHash {
    std::size_t operator()(const EdgeTuple& t) const { return tuple_hash(t); }
};

// Candidate-value sets for a partially mapped tuple: key is the tuple with
// one coordinate replaced by a hole marker, value is the bitset of G-vertices
// completing it to an edge. One entry per (edge of G, position).
class HoleIndex {
public:
    HoleIndex(const Hypergraph& G) : empty_(G.vertex_count()) {
        const unsigned k = G.arity();
        EdgeTuple key(k);
        for (EdgeId e = 0; e < G.edge_count(); ++e) {
            auto tup = G.edge(e);
            for (unsigned p = 0; p < k; ++p) {
                std::copy(tup.begin(), tup.end(), key.begin());
                key[p] = kHole;
                auto [it, fresh] = index_.try_emplace(key, Bitset{});
                if (fresh) it->second = Bitset(G.vertex_count());
                it->second.set(tup[p]);
            }
        }
    }

    const Bitset& allowed(const EdgeTuple& holed_key) const {
        auto it = index_.find(holed_key);
        return it == index_.end() ? empty_ : it->second;
    }

private:
    std::unordered_map<EdgeTuple, Bitset, KeyHash> index_;
    Bitset empty_;
};

// One propagation step: when the trigger depth is reached, all coordinates of
// the edge except `hole_pos` are assigned and the vertex at `hole_pos` gets
// its candidate set narrowed.
struct Constraint {
    std::vector<VertexId> f_edge; // F vertex ids, in edge order
    unsigned hole_pos;
    VertexId target;              // f_edge[hole_pos]
};

class Search {
public:
    Search(const Hypergraph& F, const Hypergraph& G, std::uint64_t budget)
        : F_(F), G_(G), budget_(budget), index_(G) {
        check_compatible();

        degree_.assign(F_.vertex_count(), 0);
        for (EdgeId e = 0; e < F_.edge_count(); ++e)
            for (VertexId v : F_.edge(e)) ++degree_[v];

        for (VertexId v = 0; v < F_.vertex_count(); ++v)
            if (degree_[v] > 0) order_.push_back(v);
        std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
            return degree_[a] > degree_[b];
        });
        position_.assign(F_.vertex_count(), ~std::size_t{0});
        for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;

        // Schedule each F-edge at the depth where all but its latest vertex
        // are assigned; k=1 edges fire before the search starts.
        init_constraints_.clear();
        triggers_.assign(order_.size(), {});
        for (EdgeId e = 0; e < F_.edge_count(); ++e) {
            auto tup = F_.edge(e);
            Constraint c;
            c.f_edge.assign(tup.begin(), tup.end());
            std::size_t last = 0, second = 0;
            for (unsigned j = 0; j < tup.size(); ++j)
                if (position_[tup[j]] >= position_[tup[last]]) last = j;
            c.hole_pos = static_cast<unsigned>(last);
            c.target = tup[last];
            if (tup.size() == 1) {
                init_constraints_.push_back(std::move(c));
                continue;
            }
            bool first = true;
            for (unsigned j = 0; j < tup.size(); ++j) {
                if (j == last) continue;
                if (first || position_[tup[j]] > position_[tup[second]]) second = j;
                first = false;
            }
            triggers_[position_[tup[second]]].push_back(std::move(c));
        }

        // initial candidate sets: whole target (own part in the partite case)
        candidates_.reserve(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) {
            Bitset b(G_.vertex_count());
            if (F_.kind() == Hypergraph::Kind::Partite) {
                unsigned p = F_.part_of(order_[i]);
                for (VertexId v = G_.part_begin(p);
                     v < G_.part_begin(p) + G_.part_size(p); ++v)
                    b.set(v);
            } else {
                b.fill();
            }
            candidates_.push_back(std::move(b));
        }

        assignment_.assign(F_.vertex_count(), kHole);
    }

    // Enumerates assignments of the edge-covered vertices; the callback
    // returns false to stop the whole search.
    void run(const std::function<bool(const std::vector<VertexId>&)>& emit) {
        for (const Constraint& c : init_constraints_)
            if (!narrow(c)) return;
        emit_ = &emit;
        descend(0);
        emit_ = nullptr;
    }

    std::uint64_t nodes() const { return nodes_; }

    // Vertices of F that appear in no edge map freely.
    Int free_choice_factor() const {
        Int factor = 1;
        for (VertexId v = 0; v < F_.vertex_count(); ++v) {
            if (degree_[v] > 0) continue;
            std::size_t choices = F_.kind() == Hypergraph::Kind::Partite
                                      ? G_.part_size(F_.part_of(v))
                                      : G_.vertex_count();
            factor *= Int(choices);
        }
        return factor;
    }

    // Deterministic completion of a covered-vertex assignment to a total map;
    // empty if some isolated vertex has nowhere to go.
    std::optional<std::vector<VertexId>> complete(std::vector<VertexId> map) const {
        for (VertexId v = 0; v < F_.vertex_count(); ++v) {
            if (map[v] != kHole) continue;
            if (F_.kind() == Hypergraph::Kind::Partite) {
                unsigned p = F_.part_of(v);
                if (G_.part_size(p) == 0) return std::nullopt;
                map[v] = G_.part_begin(p);
            } else {
                if (G_.vertex_count() == 0) return std::nullopt;
                map[v] = 0;
            }
        }
        return map;
    }

private:
    void check_compatible() const {
        if (F_.kind() != G_.kind())
            fail(ErrorKind::UniverseMismatch, "template and target must both be directed "
                                              "or both be partite");
        if (F_.arity() != G_.arity())
            fail(ErrorKind::UniverseMismatch,
                 "arity mismatch: template " + std::to_string(F_.arity()) + ", target " +
                     std::to_string(G_.arity()));
        if (F_.kind() == Hypergraph::Kind::Partite &&
            F_.part_count() != G_.part_count())
            fail(ErrorKind::UniverseMismatch,
                 "part count mismatch: template " + std::to_string(F_.part_count()) +
                     ", target " + std::to_string(G_.part_count()));
    }

    bool narrow(const Constraint& c) {
        EdgeTuple key(c.f_edge.size());
        for (std::size_t j = 0; j < c.f_edge.size(); ++j)
            key[j] = j == c.hole_pos ? kHole : assignment_[c.f_edge[j]];
        return candidates_[position_[c.target]].intersect_with(index_.allowed(key));
    }

    bool descend(std::size_t depth) {
        if (depth == order_.size()) return (*emit_)(assignment_);

        const Bitset& cand = candidates_[depth];
        const VertexId u = order_[depth];
        for (std::size_t x = cand.next_set(0); x < cand.size(); x = cand.next_set(x + 1)) {
            if (++nodes_ > budget_) throw BudgetError(nodes_ - 1);
            assignment_[u] = static_cast<VertexId>(x);

            saved_.clear();
            bool alive = true;
            for (const Constraint& c : triggers_[depth]) {
                std::size_t tpos = position_[c.target];
                if (!saved_.count(tpos)) saved_.emplace(tpos, candidates_[tpos]);
                if (!narrow(c)) {
                    alive = false;
                    break;
                }
            }
            if (alive) {
                auto saved = std::move(saved_);
                saved_.clear();
                bool keep_going = descend(depth + 1);
                for (auto& [pos, bits] : saved) candidates_[pos] = std::move(bits);
                if (!keep_going) return false;
            } else {
                for (auto& [pos, bits] : saved_) candidates_[pos] = std::move(bits);
                saved_.clear();
            }
        }
        assignment_[u] = kHole;
        return true;
    }

    const Hypergraph& F_;
    const Hypergraph& G_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    HoleIndex index_;

    std::vector<unsigned> degree_;
    std::vector<VertexId> order_;          // covered vertices, search order
    std::vector<std::size_t> position_;    // F vertex -> order position
    std::vector<Constraint> init_constraints_;
    std::vector<std::vector<Constraint>> triggers_; // per depth
    std::vector<Bitset> candidates_;       // per order position
    std::vector<VertexId> assignment_;
    std::unordered_map<std::size_t, Bitset> saved_;
    const std::function<bool(const std::vector<VertexId>&)>* emit_ = nullptr;
};

} // namespace

HomCount count_homomorphisms(const Hypergraph& F, const Hypergraph& G,
                             const SearchOptions& opts) {
    Search search(F, G, opts.budget);
    Int total = G.total_maps_from(F);
    if (total == 0 && F.vertex_count() > 0)
        fail(ErrorKind::EmptyTarget,
             "target has an empty vertex set where the template needs images");

    std::uint64_t covered_count = 0;
    search.run([&](const std::vector<VertexId>&) {
        ++covered_count;
        return true;
    });
    Int count = Int(covered_count) * search.free_choice_factor();

    HomCount result;
    result.count = count;
    result.total_maps = total;
    result.density = total == 0 ? Rational(0) : Rational(count, total);
    return result;
}

bool is_free(const Hypergraph& F, const Hypergraph& G, const SearchOptions& opts) {
    return !find_homomorphism(F, G, opts).has_value();
}

std::optional<Homomorphism> find_homomorphism(const Hypergraph& F, const Hypergraph& G,
                                              const SearchOptions& opts) {
    Search search(F, G, opts.budget);
    std::optional<std::vector<VertexId>> found;
    search.run([&](const std::vector<VertexId>& map) {
        found = map;
        return false;
    });
    if (!found) return std::nullopt;
    auto total = search.complete(std::move(*found));
    if (!total) return std::nullopt;
    return Homomorphism{std::move(*total)};
}

bool validate_homomorphism(const Hypergraph& F, const Hypergraph& G, const Homomorphism& h) {
    if (h.image.size() != F.vertex_count()) return false;
    for (VertexId v = 0; v < F.vertex_count(); ++v) {
        if (h.image[v] >= G.vertex_count()) return false;
        if (F.kind() == Hypergraph::Kind::Partite &&
            F.part_of(v) != G.part_of(h.image[v]))
            return false;
    }
    EdgeTuple mapped(F.arity());
    for (EdgeId e = 0; e < F.edge_count(); ++e) {
        auto tup = F.edge(e);
        for (unsigned j = 0; j < F.arity(); ++j) mapped[j] = h.image[tup[j]];
        if (!G.has_edge(mapped)) return false;
    }
    return true;
}

std::vector<std::vector<EdgeId>> enumerate_copies(const Hypergraph& F, const Hypergraph& G,
                                                  const SearchOptions& opts) {
    if (F.edge_count() == 0)
        fail(ErrorKind::EmptyTemplate, "template has no edges; removal is meaningless");
    Search search(F, G, opts.budget);
    std::set<std::vector<EdgeId>> image_sets;
    EdgeTuple mapped(F.arity());
    std::vector<EdgeId> image;
    search.run([&](const std::vector<VertexId>& map) {
        image.clear();
        for (EdgeId e = 0; e < F.edge_count(); ++e) {
            auto tup = F.edge(e);
            for (unsigned j = 0; j < F.arity(); ++j) mapped[j] = map[tup[j]];
            image.push_back(*G.edge_id(mapped));
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        image_sets.insert(image);
        return true;
    });
    return {image_sets.begin(), image_sets.end()};
}

} // namespace symrem
