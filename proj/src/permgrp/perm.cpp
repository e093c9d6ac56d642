#include "qv/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qv {

namespace {

constexpr int kFact[kDegree + 1] = {1, 1, 2, 6, 24, 120, 720};

}  // namespace

Perm::Perm() {
    for (int i = 0; i < kDegree; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
}

Perm::Perm(const std::array<int, kDegree>& images) {
    std::array<bool, kDegree> seen{};
    for (int i = 0; i < kDegree; ++i) {
        int x = images[static_cast<std::size_t>(i)];
        if (x < 0 || x >= kDegree || seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("Perm: not a bijection");
        seen[static_cast<std::size_t>(x)] = true;
        img_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(x);
    }
}

Perm Perm::parse(const std::string& s) {
    std::array<int, kDegree> img;
    std::iota(img.begin(), img.end(), 0);
    std::vector<int> cyc;
    bool open = false;
    for (char ch : s) {
        if (ch == '(') {
            if (open) throw std::invalid_argument("Perm::parse: nested cycle in " + s);
            open = true;
            cyc.clear();
        } else if (ch == ')') {
            if (!open) throw std::invalid_argument("Perm::parse: unbalanced ) in " + s);
            open = false;
            for (std::size_t k = 0; k < cyc.size(); ++k) img[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
        } else if (ch >= '0' && ch < '0' + kDegree) {
            if (!open) throw std::invalid_argument("Perm::parse: point outside a cycle in " + s);
            cyc.push_back(ch - '0');
        } else if (ch != ' ' && ch != ',') {
            throw std::invalid_argument("Perm::parse: bad character in " + s);
        }
    }
    if (open) throw std::invalid_argument("Perm::parse: unterminated cycle in " + s);
    return Perm(img);
}

Perm Perm::from_index(int idx) {
    if (idx < 0 || idx >= kS6Order) throw std::out_of_range("Perm::from_index");
    std::vector<int> avail{0, 1, 2, 3, 4, 5};
    std::array<int, kDegree> img{};
    for (int i = 0; i < kDegree; ++i) {
        int f = kFact[kDegree - 1 - i];
        int c = idx / f;
        idx %= f;
        img[static_cast<std::size_t>(i)] = avail[static_cast<std::size_t>(c)];
        avail.erase(avail.begin() + c);
    }
    return Perm(img);
}

Perm Perm::operator*(const Perm& q) const {
    Perm r;
    for (int i = 0; i < kDegree; ++i) r.img_[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(q.img_[static_cast<std::size_t>(i)])];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    for (int i = 0; i < kDegree; ++i) r.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = static_cast<std::int8_t>(i);
    return r;
}

int Perm::sign() const {
    int s = 1;
    for (int c : cycle_type()) s *= (c % 2 == 0) ? -1 : 1;
    return s;
}

int Perm::order() const {
    int o = 1;
    for (int c : cycle_type()) o = std::lcm(o, c);
    return o;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<int> ct;
    std::array<bool, kDegree> seen{};
    for (int i = 0; i < kDegree; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        if (len > 1) ct.push_back(len);
    }
    std::sort(ct.rbegin(), ct.rend());
    return ct;
}

bool Perm::is_identity() const { return fixed_points() == kDegree; }

int Perm::fixed_points() const {
    int n = 0;
    for (int i = 0; i < kDegree; ++i) n += img_[static_cast<std::size_t>(i)] == i;
    return n;
}

int Perm::index() const {
    int idx = 0;
    for (int i = 0; i < kDegree; ++i) {
        int c = 0;
        for (int j = i + 1; j < kDegree; ++j) c += img_[static_cast<std::size_t>(j)] < img_[static_cast<std::size_t>(i)];
        idx += c * kFact[kDegree - 1 - i];
    }
    return idx;
}

std::string Perm::str() const {
    std::ostringstream os;
    std::array<bool, kDegree> seen{};
    for (int i = 0; i < kDegree; ++i) {
        if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
        os << "(";
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            os << j;
        }
        os << ")";
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

std::string cycle_type_str(const std::vector<int>& ct) {
    if (ct.empty()) return "id";
    std::string s = "[";
    for (std::size_t i = 0; i < ct.size(); ++i) s += (i ? "," : "") + std::to_string(ct[i]);
    return s + "]";
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup() : name_("1") {
    elems_.push_back(Perm());
    set_.set(static_cast<std::size_t>(Perm().index()));
}

PermGroup PermGroup::generate(const std::vector<Perm>& gens, std::string name) {
    PermGroup g;
    g.name_ = std::move(name);
    g.gens_ = gens;
    std::vector<Perm> frontier{Perm()};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& x : frontier)
            for (const Perm& s : gens) {
                Perm y = x * s;
                auto id = static_cast<std::size_t>(y.index());
                if (!g.set_.test(id)) {
                    g.set_.set(id);
                    next.push_back(y);
                }
            }
        frontier.swap(next);
    }
    g.elems_.clear();
    for (int i = 0; i < kS6Order; ++i)
        if (g.set_.test(static_cast<std::size_t>(i))) g.elems_.push_back(Perm::from_index(i));
    return g;
}

PermGroup PermGroup::from_set(const ElementSet& elems, std::string name) {
    PermGroup g;
    g.name_ = std::move(name);
    g.set_ = elems;
    g.elems_.clear();
    for (int i = 0; i < kS6Order; ++i)
        if (elems.test(static_cast<std::size_t>(i))) g.elems_.push_back(Perm::from_index(i));
    if (!elems.test(static_cast<std::size_t>(Perm().index()))) throw std::invalid_argument("PermGroup::from_set: no identity");
    for (const Perm& a : g.elems_)
        for (const Perm& b : g.elems_)
            if (!elems.test(static_cast<std::size_t>((a * b).index())))
                throw std::invalid_argument("PermGroup::from_set: not closed under composition");
    // A small generating set, greedily.
    PermGroup cur;
    for (const Perm& a : g.elems_) {
        if (cur.contains(a)) continue;
        g.gens_.push_back(a);
        cur = generate(g.gens_);
        if (cur.order() == g.order()) break;
    }
    return g;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> out;
    std::array<bool, kDegree> seen{};
    for (int i = 0; i < kDegree; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> orb;
        for (const Perm& p : elems_) {
            int j = p(i);
            if (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                orb.push_back(j);
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(orb);
    }
    return out;
}

bool PermGroup::has_fixed_point() const {
    for (const auto& o : orbits())
        if (o.size() == 1) return true;
    return false;
}

PermGroup PermGroup::intersect(const PermGroup& o, std::string name) const { return from_set(set_ & o.set_, std::move(name)); }

PermGroup PermGroup::stabilizer(int point, std::string name) const {
    ElementSet s;
    for (const Perm& p : elems_)
        if (p(point) == point) s.set(static_cast<std::size_t>(p.index()));
    return from_set(s, std::move(name));
}

PermGroup PermGroup::even_part(std::string name) const {
    ElementSet s;
    for (const Perm& p : elems_)
        if (p.sign() == 1) s.set(static_cast<std::size_t>(p.index()));
    return from_set(s, std::move(name));
}

PermGroup PermGroup::conjugate(const Perm& g) const {
    std::vector<Perm> gens;
    Perm gi = g.inverse();
    for (const Perm& s : gens_) gens.push_back(g * s * gi);
    return generate(gens, name_);
}

std::vector<Perm> PermGroup::left_coset_reps(const PermGroup& h) const {
    if (!h.is_subgroup_of(*this)) throw std::invalid_argument("left_coset_reps: not a subgroup");
    std::vector<Perm> reps;
    ElementSet covered;
    for (const Perm& g : elems_) {
        if (covered.test(static_cast<std::size_t>(g.index()))) continue;
        reps.push_back(g);
        for (const Perm& x : h.elements()) covered.set(static_cast<std::size_t>((g * x).index()));
    }
    return reps;
}

// ---------------------------------------------------------------------------

std::string ClassLabel::str() const {
    std::string s = std::to_string(order) + ":";
    if (central)
        s += "z";
    else
        s += cycle_type_str(cycle_type);
    if (split > 0) s += static_cast<char>('a' + split - 1);
    return s;
}

bool ClassLabel::operator<(const ClassLabel& o) const {
    return std::tie(order, cycle_type, central, split) < std::tie(o.order, o.cycle_type, o.central, o.split);
}

bool ClassLabel::operator==(const ClassLabel& o) const {
    return order == o.order && cycle_type == o.cycle_type && central == o.central && split == o.split;
}

std::vector<std::vector<int>> id_orbits(int n, const std::vector<std::vector<int>>& maps) {
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int c = static_cast<int>(out.size());
        std::vector<int> orb{s};
        comp[static_cast<std::size_t>(s)] = c;
        for (std::size_t k = 0; k < orb.size(); ++k)
            for (const auto& m : maps) {
                int y = m[static_cast<std::size_t>(orb[k])];
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = c;
                    orb.push_back(y);
                }
            }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g) {
    std::vector<ConjClass> out;
    ElementSet seen;
    for (const Perm& x : g.elements()) {
        if (seen.test(static_cast<std::size_t>(x.index()))) continue;
        ConjClass c;
        std::vector<Perm> orb{x};
        seen.set(static_cast<std::size_t>(x.index()));
        for (std::size_t k = 0; k < orb.size(); ++k)
            for (const Perm& s : g.gens()) {
                Perm y = s * orb[k] * s.inverse();
                if (!seen.test(static_cast<std::size_t>(y.index()))) {
                    seen.set(static_cast<std::size_t>(y.index()));
                    orb.push_back(y);
                }
            }
        for (const Perm& y : orb) c.members.push_back(y.index());
        std::sort(c.members.begin(), c.members.end());
        c.label.cycle_type = x.cycle_type();
        c.label.order = x.order();
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
        if (!(a.label == b.label)) return a.label < b.label;
        return a.rep() < b.rep();
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        bool dup_prev = i > 0 && out[i - 1].label.cycle_type == out[i].label.cycle_type && out[i - 1].label.order == out[i].label.order;
        bool dup_next = i + 1 < out.size() && out[i + 1].label.cycle_type == out[i].label.cycle_type &&
                        out[i + 1].label.order == out[i].label.order;
        if (dup_prev)
            out[i].label.split = out[i - 1].label.split + 1;
        else if (dup_next)
            out[i].label.split = 1;
    }
    return out;
}

std::vector<int> fusion_counts(const std::vector<ConjClass>& classes, const std::vector<int>& sub_ids) {
    std::map<int, int> where;
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int m : classes[c].members) where[m] = static_cast<int>(c);
    std::vector<int> counts(classes.size(), 0);
    for (int x : sub_ids) {
        auto it = where.find(x);
        if (it == where.end()) throw std::invalid_argument("fusion_counts: element " + std::to_string(x) + " not in the ambient group");
        ++counts[static_cast<std::size_t>(it->second)];
    }
    return counts;
}

std::vector<int> fusion_counts(const std::vector<ConjClass>& classes, const PermGroup& sub) {
    std::vector<int> ids;
    for (const Perm& p : sub.elements()) ids.push_back(p.index());
    return fusion_counts(classes, ids);
}

namespace {

// Mark every conjugate of h under g as seen; returns false if h was already seen.
bool mark_conjugates(const PermGroup& g, const PermGroup& h, std::set<std::string>& seen) {
    if (seen.count(h.element_set().to_string())) return false;
    for (const Perm& x : g.elements()) {
        ElementSet c;
        Perm xi = x.inverse();
        for (const Perm& y : h.elements()) c.set(static_cast<std::size_t>((x * y * xi).index()));
        seen.insert(c.to_string());
    }
    return true;
}

std::vector<Perm> cyclic_generators(const PermGroup& g) {
    // One generator per cyclic subgroup.
    std::vector<Perm> out;
    std::set<std::string> seen;
    for (const Perm& x : g.elements()) {
        if (x.is_identity()) continue;
        PermGroup c = PermGroup::generate({x});
        if (seen.insert(c.element_set().to_string()).second) out.push_back(x);
    }
    return out;
}

}  // namespace

std::vector<PermGroup> cyclic_subgroup_classes(const PermGroup& g) {
    std::vector<PermGroup> out;
    std::set<std::string> seen;
    for (const Perm& x : cyclic_generators(g)) {
        PermGroup c = PermGroup::generate({x}, "<" + x.str() + ">");
        if (mark_conjugates(g, c, seen)) out.push_back(c);
    }
    return out;
}

std::vector<PermGroup> subgroup_classes(const PermGroup& g, int min_order) {
    std::vector<Perm> cyc = cyclic_generators(g);
    std::set<std::string> seen;
    std::vector<PermGroup> reps;
    PermGroup triv;
    mark_conjugates(g, triv, seen);
    reps.push_back(triv);
    // Every subgroup is a join of cyclic subgroups; joining class
    // representatives with all cyclic subgroups reaches a conjugate of each.
    for (std::size_t k = 0; k < reps.size(); ++k) {
        for (const Perm& c : cyc) {
            if (reps[k].contains(c)) continue;
            std::vector<Perm> gens = reps[k].gens();
            gens.push_back(c);
            PermGroup j = PermGroup::generate(gens);
            if (mark_conjugates(g, j, seen)) reps.push_back(j);
        }
    }
    std::vector<PermGroup> out;
    for (auto& h : reps)
        if (h.order() >= min_order) out.push_back(h);
    std::stable_sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) { return a.order() > b.order(); });
    return out;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::vector<int>>& sylow5_subgroups() {
    static const std::vector<std::vector<int>> sylows = [] {
        PermGroup s5 = PermGroup::generate({Perm::parse("(01234)"), Perm::parse("(01)")});
        std::set<std::vector<int>> found;
        for (const Perm& x : s5.elements()) {
            if (x.order() != 5) continue;
            std::vector<int> ids;
            PermGroup cyc = PermGroup::generate({x});
            for (const Perm& y : cyc.elements()) ids.push_back(y.index());
            found.insert(ids);
        }
        if (found.size() != 6) throw std::logic_error("S5 should have six Sylow 5-subgroups");
        return std::vector<std::vector<int>>(found.begin(), found.end());
    }();
    return sylows;
}

}  // namespace

Perm sylow5_action(const Perm& g) {
    if (g(5) != 5) throw std::invalid_argument("sylow5_action: argument must fix the point 5");
    const auto& syl = sylow5_subgroups();
    std::array<int, kDegree> img{};
    Perm gi = g.inverse();
    for (int i = 0; i < kDegree; ++i) {
        std::vector<int> c;
        for (int id : syl[static_cast<std::size_t>(i)]) c.push_back((g * Perm::from_index(id) * gi).index());
        std::sort(c.begin(), c.end());
        auto it = std::find(syl.begin(), syl.end(), c);
        img[static_cast<std::size_t>(i)] = static_cast<int>(it - syl.begin());
    }
    return Perm(img);
}

PermGroup nonstandard_s5() {
    return PermGroup::generate({sylow5_action(Perm::parse("(01234)")), sylow5_action(Perm::parse("(01)"))}, "S5nst");
}

}  // namespace qv
