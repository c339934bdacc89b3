#include "symrem/groups.hpp"

#include <unordered_map>

namespace symrem {

FiniteGroup FiniteGroup::cyclic_product(const std::vector<std::int64_t>& moduli) {
    FiniteGroup g;
    std::size_t order = 1;
    for (std::int64_t m : moduli) {
        if (m < 1) fail(ErrorKind::BadModulus, "modulus " + std::to_string(m) + " must be >= 1");
        order *= static_cast<std::size_t>(m);
        if (order > (1u << 24))
            fail(ErrorKind::BadInput, "group order too large for desk-scale use");
    }
    g.moduli_ = moduli;
    g.order_ = order;
    g.identity_ = 0;
    return g;
}

FiniteGroup FiniteGroup::table(std::vector<Label> elements,
                               const std::vector<std::vector<Label>>& mul_table,
                               bool verify_assoc) {
    const std::size_t n = elements.size();
    if (n == 0) fail(ErrorKind::BadInput, "table group needs at least one element");
    if (mul_table.size() != n)
        fail(ErrorKind::BadInput, "multiplication table must have one row per element");

    std::unordered_map<Label, GroupElem, LabelHash> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(elements[i], static_cast<GroupElem>(i)).second)
            fail(ErrorKind::BadInput, "duplicate element label " + elements[i].str());

    FiniteGroup g;
    g.order_ = n;
    g.elements_ = std::move(elements);
    g.mul_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (mul_table[i].size() != n)
            fail(ErrorKind::BadInput, "table row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            auto it = index.find(mul_table[i][j]);
            if (it == index.end())
                fail(ErrorKind::NotClosed, "table entry " + mul_table[i][j].str() +
                                               " is not a declared element");
            g.mul_[i * n + j] = it->second;
        }
    }

    // rows and columns must be permutations (cancellation)
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            if (row[g.mul_[i * n + j]])
                fail(ErrorKind::NotClosed,
                     "row " + g.elements_[i].str() + " is not a permutation");
            row[g.mul_[i * n + j]] = true;
            if (col[g.mul_[j * n + i]])
                fail(ErrorKind::NotClosed,
                     "column " + g.elements_[i].str() + " is not a permutation");
            col[g.mul_[j * n + i]] = true;
        }
    }

    // find a two-sided identity
    bool found_identity = false;
    for (std::size_t e = 0; e < n && !found_identity; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = g.mul_[e * n + x] == x && g.mul_[x * n + e] == x;
        if (ok) {
            g.identity_ = static_cast<GroupElem>(e);
            found_identity = true;
        }
    }
    if (!found_identity) fail(ErrorKind::NoIdentity, "no two-sided identity element");

    g.inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n; ++b) {
            if (g.mul_[a * n + b] == g.identity_ && g.mul_[b * n + a] == g.identity_) {
                g.inv_[a] = static_cast<GroupElem>(b);
                found = true;
                break;
            }
        }
        if (!found)
            fail(ErrorKind::NoInverse, "element " + g.elements_[a].str() + " has no inverse");
    }

    if (verify_assoc) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (g.mul_[g.mul_[a * n + b] * n + c] != g.mul_[a * n + g.mul_[b * n + c]])
                        fail(ErrorKind::NotAssociative,
                             "(" + g.elements_[a].str() + "*" + g.elements_[b].str() + ")*" +
                                 g.elements_[c].str() + " differs from the right-associated product");
    }
    return g;
}

GroupElem FiniteGroup::multiply(GroupElem a, GroupElem b) const {
    check_elem(a);
    check_elem(b);
    if (!moduli_.empty()) {
        GroupElem result = 0;
        std::size_t stride = order_;
        GroupElem ra = a, rb = b;
        for (std::int64_t m : moduli_) {
            stride /= static_cast<std::size_t>(m);
            auto da = ra / stride, db = rb / stride;
            ra %= stride;
            rb %= stride;
            result += static_cast<GroupElem>(((da + db) % m) * stride);
        }
        return result;
    }
    if (order_ == 1) return 0;
    return mul_[std::size_t{a} * order_ + b];
}

GroupElem FiniteGroup::invert(GroupElem a) const {
    check_elem(a);
    if (!moduli_.empty()) {
        GroupElem result = 0;
        std::size_t stride = order_;
        GroupElem ra = a;
        for (std::int64_t m : moduli_) {
            stride /= static_cast<std::size_t>(m);
            auto da = ra / stride;
            ra %= stride;
            result += static_cast<GroupElem>(((m - da) % m) * stride);
        }
        return result;
    }
    if (order_ == 1) return 0;
    return inv_[a];
}

bool FiniteGroup::is_abelian() const {
    if (is_cyclic_product()) return true;
    for (GroupElem a = 0; a < order_; ++a)
        for (GroupElem b = a + 1; b < order_; ++b)
            if (multiply(a, b) != multiply(b, a)) return false;
    return true;
}

std::vector<std::int64_t> FiniteGroup::residues(GroupElem a) const {
    check_elem(a);
    if (!is_cyclic_product())
        fail(ErrorKind::BadInput, "residues are only defined for cyclic products");
    std::vector<std::int64_t> r(moduli_.size());
    std::size_t stride = order_;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        stride /= static_cast<std::size_t>(moduli_[i]);
        r[i] = a / stride;
        a %= stride;
    }
    return r;
}

GroupElem FiniteGroup::from_residues(const std::vector<std::int64_t>& r) const {
    if (!is_cyclic_product())
        fail(ErrorKind::BadInput, "residues are only defined for cyclic products");
    if (r.size() != moduli_.size())
        fail(ErrorKind::UnknownElement, "expected " + std::to_string(moduli_.size()) +
                                            " residues, got " + std::to_string(r.size()));
    GroupElem a = 0;
    std::size_t stride = order_;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        stride /= static_cast<std::size_t>(moduli_[i]);
        std::int64_t m = moduli_[i];
        std::int64_t res = ((r[i] % m) + m) % m;
        a += static_cast<GroupElem>(res * static_cast<std::int64_t>(stride));
    }
    return a;
}

GroupElem FiniteGroup::scale(std::int64_t c, GroupElem a) const {
    check_elem(a);
    if (!moduli_.empty()) {
        auto r = residues(a);
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t m = moduli_[i];
            r[i] = ((r[i] * (c % m)) % m + m) % m;
        }
        return from_residues(r);
    }
    // repeated multiplication; negative coefficients go through the inverse,
    // and a^|G| = identity lets us reduce the repeat count
    GroupElem base = c < 0 ? invert(a) : a;
    std::uint64_t reps = c < 0 ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    GroupElem acc = identity();
    for (std::uint64_t i = 0; i < reps % order_; ++i) acc = multiply(acc, base);
    return acc;
}

Label FiniteGroup::label_of(GroupElem a) const {
    check_elem(a);
    if (!moduli_.empty()) {
        if (moduli_.size() == 1) return Label(static_cast<std::int64_t>(a));
        auto r = residues(a);
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(r[i]);
        }
        return Label(s);
    }
    if (order_ == 1 && elements_.empty()) return Label(std::int64_t{0});
    return elements_[a];
}

std::optional<GroupElem> FiniteGroup::elem_by_label(const Label& l) const {
    for (GroupElem a = 0; a < order_; ++a)
        if (label_of(a) == l) return a;
    return std::nullopt;
}

std::vector<GroupElem> FiniteGroup::canonical_generators() const {
    std::vector<GroupElem> gens;
    if (!moduli_.empty()) {
        std::size_t stride = order_;
        for (std::int64_t m : moduli_) {
            stride /= static_cast<std::size_t>(m);
            gens.push_back(static_cast<GroupElem>(m > 1 ? stride : 0));
        }
        return gens;
    }
    for (GroupElem a = 0; a < order_; ++a) gens.push_back(a);
    return gens;
}

std::vector<Label> FiniteGroup::element_labels() const {
    std::vector<Label> out;
    out.reserve(order_);
    for (GroupElem a = 0; a < order_; ++a) out.push_back(label_of(a));
    return out;
}

} // namespace symrem
