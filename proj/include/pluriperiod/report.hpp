#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// Insertion-ordered JSON keeps serialized reports stable across runs.
using Json = nlohmann::ordered_json;

/// Complex numbers serialize as [re, im].
Json complex_to_json(Complex z);

struct CheckRecord {
    std::string check_id;
    Json params = Json::object();
    Complex lhs = 0.0;
    Complex rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double budget = 0.0;
    bool pass = false;
};

/// lhs-vs-rhs record; pass iff |lhs - rhs| <= budget.
CheckRecord make_check(std::string id, Complex lhs, Complex rhs, double budget,
                       Json params = Json::object());

class Report {
  public:
    explicit Report(std::string suite);

    void add(CheckRecord rec);
    /// |value| <= budget convenience record.
    void add_scalar(std::string id, double value, double budget,
                    Json params = Json::object());
    /// Boolean outcome with no numeric content.
    void add_flag(std::string id, bool pass, Json params = Json::object());

    void set_config(Json cfg) { config_ = std::move(cfg); }
    bool all_pass() const;
    std::size_t size() const { return checks_.size(); }
    const std::vector<CheckRecord>& checks() const { return checks_; }
    const std::string& suite() const { return suite_; }

    /// Deterministic payload: schema_version, suite, config, checks, counts.
    /// Wall-clock timing is deliberately excluded; the CLI adds it at the
    /// top level so byte-comparisons can use this payload directly.
    Json to_json() const;

  private:
    std::string suite_;
    Json config_ = Json::object();
    std::vector<CheckRecord> checks_;
};

}  // namespace pluriperiod
