#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symrem/errors.hpp"
#include "symrem/label.hpp"

namespace symrem {

using GroupElem = std::uint32_t; // dense element index, identity first for products

// A finite group, either a product of cyclic groups Z_{n_1} x ... x Z_{n_m}
// (elements are residue tuples under componentwise addition, indexed in
// mixed-radix order) or an explicit multiplication table. Identity, inverse
// and closure laws are always checked for tables; associativity on demand.
class FiniteGroup {
public:
    static FiniteGroup cyclic_product(const std::vector<std::int64_t>& moduli);
    static FiniteGroup table(std::vector<Label> elements,
                             const std::vector<std::vector<Label>>& mul_table,
                             bool verify_assoc = false);

    std::size_t order() const { return order_; }
    GroupElem identity() const { return identity_; }
    GroupElem multiply(GroupElem a, GroupElem b) const;
    GroupElem invert(GroupElem a) const;

    bool is_cyclic_product() const { return !moduli_.empty() || order_ == 1; }
    const std::vector<std::int64_t>& moduli() const { return moduli_; }

    bool is_abelian() const;

    // Residue tuple of an element (cyclic products only).
    std::vector<std::int64_t> residues(GroupElem a) const;
    GroupElem from_residues(const std::vector<std::int64_t>& r) const;

    // residue scaled by an integer coefficient, i.e. c-fold sum of a
    GroupElem scale(std::int64_t c, GroupElem a) const;

    Label label_of(GroupElem a) const;
    std::optional<GroupElem> elem_by_label(const Label& l) const;

    // Elements whose closure is the whole group: the unit vector of each
    // cyclic factor for products, every element for table groups.
    std::vector<GroupElem> canonical_generators() const;

    // All element labels in index order (vertex set of a Cayley graph).
    std::vector<Label> element_labels() const;

    void check_elem(GroupElem a) const {
        if (a >= order_)
            fail(ErrorKind::UnknownElement,
                 "element index " + std::to_string(a) + " out of range");
    }

private:
    FiniteGroup() = default;

    std::size_t order_ = 0;
    GroupElem identity_ = 0;
    std::vector<std::int64_t> moduli_;        // empty for table groups
    std::vector<Label> elements_;             // table groups: declared labels
    std::vector<GroupElem> mul_;              // table groups: order x order
    std::vector<GroupElem> inv_;              // table groups
};

} // namespace symrem
