#include "qv/rep.hpp"

#include <stdexcept>

namespace qv {

ClassData class_data(const CoverGroup& g) {
    ClassData cd;
    cd.classes = g.classes();
    cd.group_order = g.order();
    for (std::size_t c = 0; c < cd.classes.size(); ++c)
        for (int m : cd.classes[c].members) cd.class_of[m] = static_cast<int>(c);
    cd.power.assign(kMaxPower + 1, std::vector<int>(cd.classes.size()));
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
        int r = cd.classes[c].rep(), x = 0;
        for (int k = 0; k <= kMaxPower; ++k) {
            cd.power[static_cast<std::size_t>(k)][c] = cd.class_of.at(x);
            x = g.mul(x, r);
        }
    }
    return cd;
}

ClassData class_data(const PermGroup& g) {
    ClassData cd;
    cd.classes = conjugacy_classes(g);
    cd.group_order = g.order();
    for (std::size_t c = 0; c < cd.classes.size(); ++c)
        for (int m : cd.classes[c].members) cd.class_of[m] = static_cast<int>(c);
    cd.power.assign(kMaxPower + 1, std::vector<int>(cd.classes.size()));
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
        Perm r = Perm::from_index(cd.classes[c].rep()), x;
        for (int k = 0; k <= kMaxPower; ++k) {
            cd.power[static_cast<std::size_t>(k)][c] = cd.class_of.at(x.index());
            x = x * r;
        }
    }
    return cd;
}

Character character_from(const ClassData& cd, const std::function<CycNum(int)>& value_at_rep) {
    Character chi;
    chi.reserve(cd.classes.size());
    for (const auto& c : cd.classes) chi.push_back(value_at_rep(c.rep()));
    return chi;
}

Character dual(const Character& chi) {
    Character out;
    out.reserve(chi.size());
    for (const auto& v : chi) out.push_back(v.conj());
    return out;
}

Character product(const Character& a, const Character& b) {
    if (a.size() != b.size()) throw std::invalid_argument("product: characters on different class sets");
    Character out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
    return out;
}

Character sym_power_character(const ClassData& cd, const Character& chi, int d) {
    if (d < 0 || d > kMaxPower) throw std::invalid_argument("sym_power_character: degree out of range");
    const std::size_t nc = chi.size();
    const FieldCtx& ctx = *chi.front().ctx();
    // Newton: d h_d = sum_{k=1}^d p_k h_{d-k}, with p_k(g) = chi(g^k).
    std::vector<Character> h(static_cast<std::size_t>(d) + 1, Character(nc, CycNum(ctx, 0)));
    for (std::size_t c = 0; c < nc; ++c) h[0][c] = CycNum(ctx, 1);
    for (int m = 1; m <= d; ++m)
        for (std::size_t c = 0; c < nc; ++c) {
            CycNum s(ctx, 0);
            for (int k = 1; k <= m; ++k)
                s.add_product(chi[static_cast<std::size_t>(cd.power[static_cast<std::size_t>(k)][c])],
                              h[static_cast<std::size_t>(m - k)][c]);
            h[static_cast<std::size_t>(m)][c] = s * make_rational(1, m);
        }
    return h[static_cast<std::size_t>(d)];
}

Rational inner_product(const std::vector<int>& counts, const Character& a, const Character& b) {
    if (counts.size() != a.size() || counts.size() != b.size()) throw std::invalid_argument("inner_product: size mismatch");
    long total = 0;
    CycNum s;
    for (std::size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] == 0) continue;
        total += counts[c];
        s += a[c] * b[c].conj() * Rational(counts[c]);
    }
    if (total == 0) throw std::invalid_argument("inner_product: empty subgroup");
    if (!s.bound()) return Rational(0);
    if (!s.is_rational()) throw std::logic_error("inner_product: non-rational value " + s.str());
    return s.rational_value() / Rational(total);
}

Rational trivial_multiplicity(const std::vector<int>& counts, const Character& chi) {
    Character one;
    for (const auto& v : chi) one.push_back(CycNum(*v.ctx(), 1));
    return inner_product(counts, chi, one);
}

}  // namespace qv
