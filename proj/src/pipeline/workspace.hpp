#pragma once

#include "qv/geom3.hpp"
#include "qv/pipeline.hpp"
#include "qv/quartic4.hpp"
#include "qv/rep.hpp"

#include <map>
#include <optional>
#include <random>
#include <set>

namespace nlohmann {
template <>
struct adl_serializer<mpq_class> {
    template <class J>
    static void to_json(J& j, const mpq_class& r) {
        j = r.get_str();
    }
};
}  // namespace nlohmann

namespace qv {
// {order, coeffs}: the power-basis coefficients in Q(zeta_order), as rational strings.
void to_json(pipeline::json& j, const CycNum& x);
}  // namespace qv

namespace qv::pipeline {

json rational_or_cyc(const CycNum& x);
json points_json(const std::vector<Vec>& pts);

// Collects the witness of one check.  A check fails iff some expectation
// was recorded as a mismatch.
class Witness {
public:
    void set(const std::string& key, json v) { data_[key] = std::move(v); }
    json& operator[](const std::string& key) { return data_[key]; }

    template <class A, class B>
    bool expect(const std::string& what, const A& actual, const B& expected) {
        if (actual == expected) return true;
        mismatches_.push_back({{"what", what}, {"expected", json(expected)}, {"actual", json(actual)}});
        return false;
    }
    bool expect_true(const std::string& what, bool cond) { return expect(what, cond, true); }
    void mismatch(json m) { mismatches_.push_back(std::move(m)); }

    bool ok() const { return mismatches_.empty(); }
    json finish() &&;

private:
    json data_ = json::object();
    json mismatches_ = json::array();
};

// Data shared between checks, built on first use.  Single-threaded.
class Workspace {
public:
    explicit Workspace(const Config& cfg);

    const Config& config() const { return cfg_; }
    const FieldCtx& ctx() const { return *ctx_; }
    std::mt19937_64& rng() { return rng_; }
    CycNum num(long a, long b = 1) const { return CycNum(*ctx_, make_rational(a, b)); }

    const std::vector<Table1Row>& table1_rows() const;

    const CoverGroup& cover();
    const ClassData& cover_classes();
    const Character& u4_character();
    // Element counts of the preimage of a named subgroup in each cover class.
    const std::vector<int>& cover_counts(const std::string& group);

    const ClassData& s6_classes();
    const Character& w5_character();
    const Character& sign_character();
    const std::vector<int>& s6_counts(const std::string& group);

    std::vector<Mat> u4_gens(const std::string& group);
    std::vector<Mat> w5_gens(const std::string& group);

    const P3Scene& scene();
    const P4Orbits& p4_orbits();
    const std::vector<OrbitInfo>& a5_census();
    const std::vector<MForm>& six_line_system();
    const std::vector<MForm>& ten_line_system();
    const ImageResult& six_line_image();
    const ImageResult& ten_line_image();
    std::vector<ProjLine> ten_lines();

private:
    Config cfg_;
    const FieldCtx* ctx_;
    std::mt19937_64 rng_;
    std::optional<ClassData> cover_cd_, s6_cd_;
    std::optional<Character> u4_, w5_, sign_;
    std::map<std::string, std::vector<int>> cover_counts_, s6_counts_;
    std::optional<P4Orbits> orbits_;
    std::optional<std::vector<OrbitInfo>> census_;
    std::optional<std::vector<MForm>> six_, ten_;
    std::optional<ImageResult> img6_, img10_;
};

inline void add_check(std::vector<CheckSpec>& out, std::string name, int criterion, std::vector<std::string> deps,
                      std::string claim, std::function<void(Workspace&, Witness&)> f) {
    out.push_back({std::move(name), criterion, std::move(deps), std::move(claim), std::move(f)});
}

void add_table_checks(std::vector<CheckSpec>& out);
void add_p4_checks(std::vector<CheckSpec>& out);
void add_geometry_checks(std::vector<CheckSpec>& out);

}  // namespace qv::pipeline
