#include "workspace.hpp"

namespace qv {

void to_json(pipeline::json& j, const CycNum& x) {
    const FieldCtx& ctx = x.bound() ? *x.ctx() : FieldCtx::default_ctx();
    CycNum b = x.bound() ? x : CycNum(ctx, 0);
    pipeline::json coeffs = pipeline::json::array();
    for (const Rational& r : b.coeffs()) coeffs.push_back(r.get_str());
    j = pipeline::json{{"order", ctx.order()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace qv

namespace qv::pipeline {

json rational_or_cyc(const CycNum& x) {
    json j = x;
    if (x.bound() && x.is_rational()) j["rational"] = x.rational_value().get_str();
    return j;
}

json points_json(const std::vector<Vec>& pts) {
    json out = json::array();
    for (const Vec& p : pts) out.push_back(p);
    return out;
}

json Witness::finish() && {
    if (!mismatches_.empty()) data_["mismatches"] = std::move(mismatches_);
    return std::move(data_);
}

Workspace::Workspace(const Config& cfg) : cfg_(cfg), ctx_(&FieldCtx::get(cfg.field_order)), rng_(cfg.seed) {}

const std::vector<Table1Row>& Workspace::table1_rows() const {
    return cfg_.table1_override ? *cfg_.table1_override : table1();
}

const CoverGroup& Workspace::cover() { return spin_cover(*ctx_); }

const ClassData& Workspace::cover_classes() {
    if (!cover_cd_) cover_cd_ = class_data(cover());
    return *cover_cd_;
}

const Character& Workspace::u4_character() {
    if (!u4_) {
        const CoverGroup& g = cover();
        u4_ = character_from(cover_classes(), [&](int id) { return g.matrix(id).trace(); });
    }
    return *u4_;
}

const std::vector<int>& Workspace::cover_counts(const std::string& group) {
    auto it = cover_counts_.find(group);
    if (it == cover_counts_.end())
        it = cover_counts_.emplace(group, fusion_counts(cover_classes().classes, cover().preimage(named_group(group)))).first;
    return it->second;
}

const ClassData& Workspace::s6_classes() {
    if (!s6_cd_) s6_cd_ = class_data(named_group("S6"));
    return *s6_cd_;
}

const Character& Workspace::w5_character() {
    if (!w5_) w5_ = character_from(s6_classes(), [&](int idx) { return w5_model(*ctx_, Perm::from_index(idx)).trace(); });
    return *w5_;
}

const Character& Workspace::sign_character() {
    if (!sign_) sign_ = character_from(s6_classes(), [&](int idx) { return CycNum(*ctx_, Perm::from_index(idx).sign()); });
    return *sign_;
}

const std::vector<int>& Workspace::s6_counts(const std::string& group) {
    auto it = s6_counts_.find(group);
    if (it == s6_counts_.end()) it = s6_counts_.emplace(group, fusion_counts(s6_classes().classes, named_group(group))).first;
    return it->second;
}

std::vector<Mat> Workspace::u4_gens(const std::string& group) { return generator_matrices(cover(), named_group(group)); }

std::vector<Mat> Workspace::w5_gens(const std::string& group) {
    std::vector<Mat> out;
    for (const Perm& p : named_group(group).gens()) out.push_back(w5_model(*ctx_, p));
    return out;
}

const P3Scene& Workspace::scene() { return p3_scene(*ctx_); }

const P4Orbits& Workspace::p4_orbits() {
    if (!orbits_) orbits_ = build_orbits(*ctx_);
    return *orbits_;
}

const std::vector<OrbitInfo>& Workspace::a5_census() {
    if (!census_) {
        const PermGroup& h = named_group("A5nst");
        census_ = small_orbit_census(u4_gens("A5nst"), census_candidates(*ctx_, &cover(), h, 15), 15);
    }
    return *census_;
}

const std::vector<MForm>& Workspace::six_line_system() {
    if (!six_) six_ = system_through_lines(scene().six1, 4);
    return *six_;
}

std::vector<ProjLine> Workspace::ten_lines() {
    std::vector<ProjLine> ten = scene().L;
    ten.insert(ten.end(), scene().Lp.begin(), scene().Lp.end());
    return ten;
}

const std::vector<MForm>& Workspace::ten_line_system() {
    if (!ten_) ten_ = system_through_lines(ten_lines(), 4);
    return *ten_;
}

const ImageResult& Workspace::six_line_image() {
    if (!img6_) img6_ = identify_image(cover(), named_group("A6"), six_line_system());
    return *img6_;
}

const ImageResult& Workspace::ten_line_image() {
    if (!img10_) img10_ = identify_image(cover(), named_group("S5nst"), ten_line_system());
    return *img10_;
}

}  // namespace qv::pipeline
