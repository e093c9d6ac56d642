#include "qv/rep.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace qv {

std::vector<Mat> matrix_closure(const std::vector<Mat>& gens, int cap) {
    if (gens.empty()) return {};
    std::vector<Mat> out{Mat::identity(gens.front().ctx(), gens.front().rows())};
    std::unordered_set<Mat, MatHash> seen(out.begin(), out.end());
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const Mat& g : gens) {
            Mat y = out[k] * g;
            if (seen.insert(y).second) {
                out.push_back(std::move(y));
                if (static_cast<int>(out.size()) > cap) throw std::length_error("matrix_closure: group larger than cap");
            }
        }
    return out;
}

CoverGroup::CoverGroup(const FieldCtx& ctx, const std::vector<Mat>& gen_mats, const std::vector<Perm>& gen_perms, int cap)
    : ctx_(&ctx), pre_(kS6Order) {
    if (gen_mats.size() != gen_perms.size() || gen_mats.empty()) throw std::invalid_argument("CoverGroup: generator lists differ");
    const int n = gen_mats.front().rows();
    mats_.push_back(Mat::identity(ctx, n));
    proj_.push_back(Perm());
    index_.emplace(mats_.front(), 0);
    for (std::size_t k = 0; k < mats_.size(); ++k)
        for (std::size_t g = 0; g < gen_mats.size(); ++g) {
            Mat y = mats_[k] * gen_mats[g];
            if (index_.count(y)) continue;
            int id = static_cast<int>(mats_.size());
            if (id >= cap) throw std::length_error("CoverGroup: group larger than cap");
            index_.emplace(y, id);
            mats_.push_back(std::move(y));
            proj_.push_back(proj_[k] * gen_perms[g]);
        }
    for (int id = 0; id < order(); ++id) {
        auto& slot = pre_[static_cast<std::size_t>(proj(id).index())];
        slot.push_back(id);
        if (slot.size() > 2) throw std::logic_error("CoverGroup: projection has a kernel larger than 2");
        const Mat& m = matrix(id);
        std::pair<int, int> pr{-1, -1};
        for (int i = 0; i < n && pr.first < 0; ++i)
            for (int j = 0; j < n; ++j)
                if (!m(i, j).is_zero()) {
                    pr = {i, j};
                    break;
                }
        probe_.push_back(pr);
    }
    for (const Mat& g : gen_mats) gen_ids_.push_back(find(g));
    central_ = find(-mats_.front());
    if (central_ >= 0 && !proj(central_).is_identity()) throw std::logic_error("CoverGroup: -I does not project to the identity");
}

int CoverGroup::find(const Mat& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

int CoverGroup::mul(int a, int b) const {
    Perm r = proj(a) * proj(b);
    const auto& cand = preimages(r);
    if (cand.size() == 1) return cand.front();
    // The two preimages differ by sign; one entry of the product decides.
    int c = cand.front();
    auto [i, j] = probe_[static_cast<std::size_t>(c)];
    const Mat &A = matrix(a), &B = matrix(b);
    CycNum v(ctx(), 0);
    for (int k = 0; k < dim(); ++k) v.add_product(A(i, k), B(k, j));
    if (v == matrix(c)(i, j)) return c;
    return cand.back();
}

int CoverGroup::inv(int a) const {
    const auto& cand = preimages(proj(a).inverse());
    if (cand.size() == 1) return cand.front();
    const Mat& A = matrix(a);
    const Mat& C = matrix(cand.front());
    CycNum v(ctx(), 0);
    for (int k = 0; k < dim(); ++k) v.add_product(A(0, k), C(k, 0));
    return v.is_one() ? cand.front() : cand.back();
}

int CoverGroup::pow(int a, int k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = 0, base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

int CoverGroup::element_order(int a) const {
    int k = proj(a).order();
    int y = pow(a, k);
    return y == 0 ? k : 2 * k;
}

std::vector<int> CoverGroup::preimage(const PermGroup& h) const {
    std::vector<int> out;
    for (const Perm& p : h.elements())
        for (int id : preimages(p)) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> CoverGroup::lift_generators(const PermGroup& h) const {
    std::vector<int> out;
    for (const Perm& p : h.gens()) out.push_back(preimages(p).front());
    if (central_ >= 0) out.push_back(central_);
    return out;
}

std::vector<int> CoverGroup::closure(const std::vector<int>& gens) const {
    std::vector<char> seen(static_cast<std::size_t>(order()), 0);
    std::vector<int> out{0};
    seen[0] = 1;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int g : gens) {
            int y = mul(out[k], g);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> CoverGroup::classes_within(const std::vector<int>& sub_gens) const {
    std::vector<int> elems = closure(sub_gens);
    std::vector<int> local(static_cast<std::size_t>(order()), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) local[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> maps;
    for (int g : sub_gens) {
        int gi = inv(g);
        std::vector<int> m(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) m[i] = local[static_cast<std::size_t>(mul(mul(g, elems[i]), gi))];
        maps.push_back(std::move(m));
    }
    auto orbs = id_orbits(static_cast<int>(elems.size()), maps);
    for (auto& o : orbs)
        for (int& x : o) x = elems[static_cast<std::size_t>(x)];
    return orbs;
}

std::vector<ConjClass> CoverGroup::classes() const {
    auto orbs = classes_within(gen_ids_);
    std::vector<ConjClass> out;
    for (auto& o : orbs) {
        ConjClass c;
        c.members = o;
        std::sort(c.members.begin(), c.members.end());
        int r = c.rep();
        c.label.cycle_type = proj(r).cycle_type();
        c.label.order = element_order(r);
        c.label.central = r == central_;
        out.push_back(std::move(c));
    }
    auto key_less = [](const ClassLabel& a, const ClassLabel& b) {
        return std::tie(a.order, a.cycle_type, a.central) < std::tie(b.order, b.cycle_type, b.central);
    };
    std::sort(out.begin(), out.end(), [&](const ConjClass& a, const ConjClass& b) {
        if (key_less(a.label, b.label) || key_less(b.label, a.label)) return key_less(a.label, b.label);
        int t = compare_lex(matrix(a.rep()).trace(), matrix(b.rep()).trace());
        if (t != 0) return t < 0;
        return a.rep() < b.rep();
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto same = [&](std::size_t a, std::size_t b) { return !key_less(out[a].label, out[b].label) && !key_less(out[b].label, out[a].label); };
        if (i > 0 && same(i - 1, i))
            out[i].label.split = out[i - 1].label.split + 1;
        else if (i + 1 < out.size() && same(i, i + 1))
            out[i].label.split = 1;
    }
    return out;
}

}  // namespace qv
