#pragma once

#include <string>
#include <vector>

#include "ckq/json_io.hpp"

namespace ckq {

struct CheckResult {
    std::string id;        // equation id or check name
    std::string category;  // multiplier, vector, sphere, isomorphism, classes, ...
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int order = 8;
    /// Test hook: perturbs the regression record with this id so that its
    /// check must fail.
    std::string corrupt;
    /// Seeds the sampled S(5) multiplier sufficiency check.
    unsigned seed = 20240611;
    int samples = 12;
};

struct VerifyReport {
    int order = 8;
    unsigned seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failures() const;
};

VerifyReport verify_paper(const VerifyOptions& opt = {});

Json to_json(const VerifyReport& r);
std::string render_text(const VerifyReport& r);

}  // namespace ckq
