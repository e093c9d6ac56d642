#include "qv/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qv {

// Generator words for every named subgroup.  Groups marked "S5" are images
// of subgroups of S5 (acting on 0..4) under the action on Sylow 5-subgroups,
// so they sit inside the nonstandard S5.  Each entry is checked on first use.
const std::vector<NamedGroupSpec>& named_group_table() {
    static const std::vector<NamedGroupSpec> table = {
        {"S6", "S6", {"(01)", "(012345)"}, 720, "", 1, "full symmetric group"},
        {"A6", "S6", {"(012)", "(12345)"}, 360, "S6", 1, "alternating group"},
        {"S5st", "S6", {"(01234)", "(01)"}, 120, "S6", 0, "point stabilizer"},
        {"A5st", "S6", {"(012)", "(01234)"}, 60, "A6", 0, "even point stabilizer"},
        {"S5nst", "S5", {"(01234)", "(01)"}, 120, "S6", 1, "S5 on its Sylow 5-subgroups"},
        {"A5nst", "S5", {"(012)", "(01234)"}, 60, "S5nst", 1, ""},
        {"S4nst", "S5", {"(0123)", "(01)"}, 24, "S5nst", -1, ""},
        {"A4nst", "S5", {"(012)", "(01)(23)"}, 12, "A5nst", -1, ""},
        {"D12nst", "S5", {"(012)", "(01)", "(34)"}, 12, "S5nst", -1, "S3 x S2 in S5"},
        {"F20", "S5", {"(01234)", "(1243)"}, 20, "S5nst", 0, "normalizer of a Sylow 5-subgroup"},
        {"F36", "S6", {"(012)", "(345)", "(0314)(25)"}, 36, "A6", -1, "even part of S3 wr S2"},
        {"D10", "S5", {"(01234)", "(14)(23)"}, 10, "A5nst", -1, ""},
        {"S3'", "S5", {"(012)", "(01)(34)"}, 6, "A5nst", -1, "S3 inside A5"},
        {"V4", "S5", {"(01)(23)", "(02)(13)"}, 4, "A5nst", -1, "mu2 x mu2"},
        {"mu5", "S5", {"(01234)"}, 5, "A5nst", -1, ""},
    };
    return table;
}

const PermGroup& named_group(const std::string& name) {
    static std::recursive_mutex mu;
    static std::map<std::string, PermGroup> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    const auto& table = named_group_table();
    auto spec = std::find_if(table.begin(), table.end(), [&](const NamedGroupSpec& s) { return s.name == name; });
    if (spec == table.end()) throw std::invalid_argument("unknown named group: " + name);
    std::vector<Perm> gens;
    for (const auto& w : spec->gens) {
        Perm p = Perm::parse(w);
        gens.push_back(spec->via == "S5" ? sylow5_action(p) : p);
    }
    PermGroup g = PermGroup::generate(gens, name);
    if (g.order() != spec->order)
        throw std::logic_error("named group " + name + " has order " + std::to_string(g.order()) + ", expected " +
                               std::to_string(spec->order));
    if (spec->transitive == 1 && !g.is_transitive()) throw std::logic_error("named group " + name + " is not transitive");
    if (spec->transitive == 0 && !g.has_fixed_point()) throw std::logic_error("named group " + name + " has no fixed point");
    if (!spec->parent.empty() && !g.is_subgroup_of(named_group(spec->parent)))
        throw std::logic_error("named group " + name + " is not inside " + spec->parent);
    return cache.emplace(name, std::move(g)).first->second;
}

std::vector<std::string> named_group_names() {
    std::vector<std::string> out;
    for (const auto& s : named_group_table()) out.push_back(s.name);
    return out;
}

}  // namespace qv
