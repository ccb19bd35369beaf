#include "pluriperiod/report.hpp"

#include <algorithm>
#include <cmath>

namespace pluriperiod {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

CheckRecord make_check(std::string id, Complex lhs, Complex rhs, double budget,
                       Json params) {
    CheckRecord rec;
    rec.check_id = std::move(id);
    rec.params = std::move(params);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.abs_err = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    rec.rel_err = scale > 0.0 ? rec.abs_err / scale : 0.0;
    rec.budget = budget;
    rec.pass = rec.abs_err <= budget;
    return rec;
}

Report::Report(std::string suite) : suite_(std::move(suite)) {}

void Report::add(CheckRecord rec) { checks_.push_back(std::move(rec)); }

void Report::add_scalar(std::string id, double value, double budget, Json params) {
    CheckRecord rec;
    rec.check_id = std::move(id);
    rec.params = std::move(params);
    rec.lhs = value;
    rec.rhs = 0.0;
    rec.abs_err = std::abs(value);
    rec.rel_err = rec.abs_err;
    rec.budget = budget;
    rec.pass = rec.abs_err <= budget;
    checks_.push_back(std::move(rec));
}

void Report::add_flag(std::string id, bool pass, Json params) {
    CheckRecord rec;
    rec.check_id = std::move(id);
    rec.params = std::move(params);
    rec.budget = 0.0;
    rec.pass = pass;
    checks_.push_back(std::move(rec));
}

bool Report::all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const CheckRecord& c) { return c.pass; });
}

Json Report::to_json() const {
    Json out;
    out["schema_version"] = 1;
    out["suite"] = suite_;
    out["config"] = config_;
    Json checks = Json::array();
    std::size_t passed = 0;
    for (const CheckRecord& c : checks_) {
        Json j;
        j["check_id"] = c.check_id;
        j["params"] = c.params;
        j["lhs"] = complex_to_json(c.lhs);
        j["rhs"] = complex_to_json(c.rhs);
        j["abs_err"] = c.abs_err;
        j["rel_err"] = c.rel_err;
        j["budget"] = c.budget;
        j["pass"] = c.pass;
        checks.push_back(std::move(j));
        if (c.pass) ++passed;
    }
    out["checks"] = std::move(checks);
    out["num_checks"] = checks_.size();
    out["num_passed"] = passed;
    out["all_pass"] = all_pass();
    return out;
}

}  // namespace pluriperiod
