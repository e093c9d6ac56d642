#include "workspace.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <set>

#ifndef QV_VERSION
#define QV_VERSION "0.0.0"
#endif

namespace qv::pipeline {

const char* version() { return QV_VERSION; }

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

UnknownCheck::UnknownCheck(const std::string& n) : std::invalid_argument("unknown check: " + n), name(n) {}

namespace {

std::vector<CheckSpec> build_registry() {
    std::vector<CheckSpec> out;
    add_table_checks(out);
    add_p4_checks(out);
    add_geometry_checks(out);
    // dependencies must be registered earlier, which also rules out cycles
    std::set<std::string> seen;
    for (const CheckSpec& c : out) {
        for (const std::string& d : c.deps)
            if (!seen.count(d)) throw std::logic_error("check " + c.name + " depends on unregistered or later check " + d);
        if (!seen.insert(c.name).second) throw std::logic_error("duplicate check name " + c.name);
    }
    return out;
}

CheckReport run_one(const CheckSpec& spec, Workspace& ws, const std::map<std::string, Status>& done) {
    CheckReport rep;
    rep.name = spec.name;
    json blocked = json::array();
    for (const std::string& d : spec.deps)
        if (done.at(d) != Status::Pass) blocked.push_back(d);
    if (!blocked.empty()) {
        rep.status = Status::Skipped;
        rep.witness = json{{"blocked_by", std::move(blocked)}};
        return rep;
    }

    auto t0 = std::chrono::steady_clock::now();
    Witness w;
    bool ok = false;
    try {
        spec.runner(ws, w);
        ok = w.ok();
        rep.witness = std::move(w).finish();
    } catch (const FieldTooSmall& e) {
        rep.witness = json{{"error", "field too small"},
                           {"field_order", e.current},
                           {"required_field_order", e.required},
                           {"message", e.what()}};
    } catch (const std::exception& e) {
        rep.witness = json{{"error", e.what()}};
    }
    rep.status = ok ? Status::Pass : Status::Fail;
    if (ws.config().timings)
        rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> reg = build_registry();
    return reg;
}

const CheckSpec& find_check(const std::string& name) {
    for (const CheckSpec& c : registry())
        if (c.name == name) return c;
    throw UnknownCheck(name);
}

std::vector<std::string> all_check_names() {
    std::vector<std::string> out;
    for (const CheckSpec& c : registry()) out.push_back(c.name);
    return out;
}

std::vector<CheckReport> run(const std::vector<std::string>& selection, const Config& cfg) {
    std::set<std::string> wanted;
    std::vector<std::string> stack;
    for (const std::string& s : selection) {
        find_check(s);
        stack.push_back(s);
    }
    while (!stack.empty()) {
        std::string s = stack.back();
        stack.pop_back();
        if (!wanted.insert(s).second) continue;
        for (const std::string& d : find_check(s).deps) stack.push_back(d);
    }

    std::vector<CheckReport> out;
    if (wanted.empty()) return out;
    Workspace ws(cfg);
    std::map<std::string, Status> done;
    for (const CheckSpec& spec : registry()) {
        if (!wanted.count(spec.name)) continue;
        out.push_back(run_one(spec, ws, done));
        done[spec.name] = out.back().status;
    }
    return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (r.status != Status::Pass) return false;
    return true;
}

json report_json(const std::vector<CheckReport>& reports, const Config& cfg) {
    int counts[3] = {0, 0, 0};
    json checks = json::array();
    for (const CheckReport& r : reports) {
        ++counts[static_cast<int>(r.status)];
        checks.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"witness", r.witness}, {"millis", r.millis}});
    }
    json meta = {{"tool", "verify"},
                 {"version", version()},
                 {"field_order", cfg.field_order},
                 {"rng_seed", cfg.seed},
                 {"timings", cfg.timings}};
    json summary = {{"checks", reports.size()}, {"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}};
    return json{{"metadata", std::move(meta)}, {"summary", std::move(summary)}, {"checks", std::move(checks)}};
}

std::string render_report(const std::vector<CheckReport>& reports, const Config& cfg) {
    return report_json(reports, cfg).dump(2) + "\n";
}

void emit_report(const std::vector<CheckReport>& reports, const Config& cfg, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open report file " + path);
    f << render_report(reports, cfg);
    f.close();
    if (!f) throw std::runtime_error("failed writing report file " + path);
}

}  // namespace qv::pipeline
