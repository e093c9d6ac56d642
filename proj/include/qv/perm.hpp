#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qv {

constexpr int kDegree = 6;
constexpr int kS6Order = 720;

// A permutation of {0,...,5}.  Composition is right-to-left:
// (p * q)(i) = p(q(i)).
class Perm {
public:
    Perm();  // identity
    explicit Perm(const std::array<int, kDegree>& images);
    // Cycle notation with single-digit points, e.g. "(012)(34)"; "" or "()" is the identity.
    static Perm parse(const std::string& cycles);
    static Perm from_index(int idx);

    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    Perm operator*(const Perm& q) const;
    Perm inverse() const;
    int sign() const;
    int order() const;
    // Lengths of the nontrivial cycles, descending; empty for the identity.
    std::vector<int> cycle_type() const;
    bool is_identity() const;
    int fixed_points() const;
    // Rank in [0, 720) (Lehmer code); a bijection with S6.
    int index() const;
    std::string str() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::array<std::int8_t, kDegree> img_;
};

std::string cycle_type_str(const std::vector<int>& ct);

using ElementSet = std::bitset<kS6Order>;

class PermGroup {
public:
    PermGroup();  // trivial group
    static PermGroup generate(const std::vector<Perm>& gens, std::string name = "");
    static PermGroup from_set(const ElementSet& elems, std::string name = "");

    const std::string& name() const { return name_; }
    PermGroup& rename(std::string n) {
        name_ = std::move(n);
        return *this;
    }
    const std::vector<Perm>& gens() const { return gens_; }
    const std::vector<Perm>& elements() const { return elems_; }
    const ElementSet& element_set() const { return set_; }
    int order() const { return static_cast<int>(elems_.size()); }
    bool contains(const Perm& p) const { return set_.test(static_cast<std::size_t>(p.index())); }
    bool is_subgroup_of(const PermGroup& g) const { return (set_ & ~g.set_).none(); }

    std::vector<std::vector<int>> orbits() const;
    bool is_transitive() const { return orbits().size() == 1; }
    bool has_fixed_point() const;

    PermGroup intersect(const PermGroup& o, std::string name = "") const;
    PermGroup stabilizer(int point, std::string name = "") const;
    PermGroup even_part(std::string name = "") const;
    PermGroup conjugate(const Perm& g) const;  // g H g^-1

    // Representatives r_1..r_k of the left cosets r_i H of H in this group,
    // with r_1 = identity; ordered by the smallest element of each coset.
    std::vector<Perm> left_coset_reps(const PermGroup& h) const;

    bool operator==(const PermGroup& o) const { return set_ == o.set_; }

private:
    std::string name_;
    std::vector<Perm> gens_;
    std::vector<Perm> elems_;  // sorted by index
    ElementSet set_;
};

// Conjugacy class labels.  For permutation groups the label is the cycle
// type with an optional split tag; cover groups add the element order.
struct ClassLabel {
    std::vector<int> cycle_type;
    int order = 1;
    int split = 0;       // 0 = not split; 1, 2, ... distinguish classes sharing (type, order)
    bool central = false;  // the non-trivial central element of a cover
    std::string str() const;
    bool operator<(const ClassLabel& o) const;
    bool operator==(const ClassLabel& o) const;
};

struct ConjClass {
    ClassLabel label;
    std::vector<int> members;  // element ids, ascending
    int size() const { return static_cast<int>(members.size()); }
    int rep() const { return members.front(); }
};

// Orbits of element ids under a set of permutations of the ids.  With the
// maps x -> g x g^-1 for generators g this gives the conjugacy classes.
std::vector<std::vector<int>> id_orbits(int n, const std::vector<std::vector<int>>& maps);

// Conjugacy classes of a permutation group; element ids are Perm::index().
// Classes are sorted by (order, cycle type), split classes tagged 1, 2, ...
// in order of their smallest element.
std::vector<ConjClass> conjugacy_classes(const PermGroup& g);

// Number of elements of `sub` in each ambient class (element ids as used by
// the classes).  Throws if some element of `sub` lies in no class.
std::vector<int> fusion_counts(const std::vector<ConjClass>& classes, const std::vector<int>& sub_ids);
std::vector<int> fusion_counts(const std::vector<ConjClass>& classes, const PermGroup& sub);

// One representative of each conjugacy class (under `g`) of subgroups of g
// of order at least `min_order`, found by closing cyclic subgroups under
// joins.  Sorted by decreasing order.
std::vector<PermGroup> subgroup_classes(const PermGroup& g, int min_order = 1);
// All cyclic subgroups up to conjugacy in g.
std::vector<PermGroup> cyclic_subgroup_classes(const PermGroup& g);

// The action of S5 (on {0..4}) on its six Sylow 5-subgroups, as a map into
// S6.  Sylow subgroups are numbered by their sorted element indices.
Perm sylow5_action(const Perm& g);
// The image of that action: a transitive S5 inside S6.
PermGroup nonstandard_s5();

// Named subgroups, built from the generator table in named_groups.cpp and
// validated by order and the recorded structural properties.
struct NamedGroupSpec {
    std::string name;
    std::string via;  // "S6": generators are in S6; "S5": words in S5 pushed through sylow5_action
    std::vector<std::string> gens;
    int order;
    std::string parent;  // must be a subgroup of this named group ("" for none)
    int transitive;      // 1: transitive on six points, 0: has a fixed point, -1: unchecked
    std::string note;
};
const std::vector<NamedGroupSpec>& named_group_table();
const PermGroup& named_group(const std::string& name);
std::vector<std::string> named_group_names();

}  // namespace qv
