#include "attnet/mp_graph.hpp"

#include <stdexcept>

namespace attnet {

std::map<std::string, int> attribute_sizes(const CohortSlice& slice) {
    std::map<std::string, int> sizes;
    for (const MemberRecord& rec : slice.members) {
        for (AttributeKind kind : kAttributeKinds) {
            if (auto label = shared_attribute_label(rec, kind))
                ++sizes[std::string(kind_name(kind)) + ":" + *label];
        }
    }
    return sizes;
}

double pair_weight(const std::string& i, const std::string& j, const CohortSlice& slice) {
    if (i == j) throw std::invalid_argument("pair_weight requires two distinct members");
    const MemberRecord* rec_i = nullptr;
    const MemberRecord* rec_j = nullptr;
    for (const MemberRecord& rec : slice.members) {
        if (rec.member_id == i) rec_i = &rec;
        if (rec.member_id == j) rec_j = &rec;
    }
    if (!rec_i || !rec_j)
        throw std::invalid_argument("pair_weight members must both belong to the slice");

    auto sizes = attribute_sizes(slice);
    double weight = 0.0;
    for (AttributeKind kind : kAttributeKinds) {
        auto label_i = shared_attribute_label(*rec_i, kind);
        auto label_j = shared_attribute_label(*rec_j, kind);
        if (label_i && label_j && *label_i == *label_j)
            weight += 1.0 / sizes.at(std::string(kind_name(kind)) + ":" + *label_i);
    }
    return weight;
}

MpGraph build_mp_graph(const CohortSlice& slice) {
    MpGraph mp;
    for (const MemberRecord& rec : slice.members) mp.graph.add_node(rec.member_id);
    mp.attribute_sizes = attribute_sizes(slice);

    for (const MemberRecord& rec : slice.members) {
        auto& attrs = mp.member_attributes[rec.member_id];
        for (AttributeKind kind : kAttributeKinds) {
            if (auto label = shared_attribute_label(rec, kind))
                attrs.push_back(std::string(kind_name(kind)) + ":" + *label);
        }
    }

    // Accumulate per-pair sums first; each attribute with g holders adds
    // 1/g to all of its pairs.
    std::map<std::string, std::vector<int>> holders;
    for (std::size_t idx = 0; idx < slice.members.size(); ++idx) {
        for (const std::string& attr : mp.member_attributes[slice.members[idx].member_id])
            holders[attr].push_back(static_cast<int>(idx));
    }
    std::map<std::pair<int, int>, double> weights;
    for (const auto& [attr, group] : holders) {
        const double share = 1.0 / static_cast<double>(group.size());
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size(); ++b)
                weights[{group[a], group[b]}] += share;
        }
    }
    for (const auto& [pair, w] : weights) mp.graph.add_edge_idx(pair.first, pair.second, w);
    return mp;
}

}  // namespace attnet
