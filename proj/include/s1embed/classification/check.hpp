#pragma once

/**
 * @file check.hpp
 * @brief Check records and the sink that collects them.
 */

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace s1e {

/// `Discrepancy` means the exact computation went through but disagrees with
/// the displayed claim. `Fail` means one of our own contracts broke.
enum class CheckStatus { Pass, Fail, Discrepancy, Skipped };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Discrepancy: return "discrepancy";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string id;
    std::string claim;  // the displayed statement being checked
    CheckStatus status = CheckStatus::Skipped;
    std::string details;
    std::map<std::string, std::string> witness;
};

/// A stated claim: false means discrepancy.
inline CheckResult claim_check(std::string id, std::string claim, bool holds, std::string details = {},
                               std::map<std::string, std::string> witness = {}) {
    return {std::move(id), std::move(claim), holds ? CheckStatus::Pass : CheckStatus::Discrepancy, std::move(details),
            std::move(witness)};
}

/// An internal contract: false means fail.
inline CheckResult contract_check(std::string id, std::string claim, bool holds, std::string details = {},
                                  std::map<std::string, std::string> witness = {}) {
    return {std::move(id), std::move(claim), holds ? CheckStatus::Pass : CheckStatus::Fail, std::move(details),
            std::move(witness)};
}

/// Builds `<section>.<subject>.<name>.<params>`; empty params become "-".
inline std::string check_id(const std::string& section, const std::string& subject, const std::string& name,
                            const std::string& params = {}) {
    return section + "." + subject + "." + name + "." + (params.empty() ? "-" : params);
}

class CheckSink {
public:
    void add(CheckResult r) {
        if (r.id.empty()) throw std::logic_error("check without id");
        if (r.claim.empty()) throw std::logic_error("check " + r.id + " has no claim");
        if (!ids_.insert(r.id).second) throw std::logic_error("duplicate check id " + r.id);
        results_.push_back(std::move(r));
    }
    void add_all(std::vector<CheckResult> rs) {
        for (auto& r : rs) add(std::move(r));
    }

    /// Results sorted by id.
    std::vector<CheckResult> sorted() const {
        auto out = results_;
        std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
        return out;
    }
    std::size_t size() const { return results_.size(); }

private:
    std::set<std::string> ids_;
    std::vector<CheckResult> results_;
};

}  // namespace s1e
