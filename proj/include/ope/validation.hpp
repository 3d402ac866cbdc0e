#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ope {

/// Raised when a theorem-guaranteed property fails at runtime; it signals a
/// bug in this library, never bad user input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct ValidationIssue {
    std::string code;    // stable machine-readable tag, e.g. "overlap-incomparable"
    std::string detail;  // human-readable, names the witnesses
};

class ValidationReport {
public:
    bool ok() const { return issues_.empty(); }
    const std::vector<ValidationIssue>& issues() const { return issues_; }

    void fail(std::string code, std::string detail) {
        issues_.push_back({std::move(code), std::move(detail)});
    }
    void merge(const ValidationReport& other, const std::string& prefix = "") {
        for (const auto& it : other.issues_)
            issues_.push_back({it.code, prefix.empty() ? it.detail : prefix + ": " + it.detail});
    }
    bool has(const std::string& code) const {
        for (const auto& it : issues_)
            if (it.code == code) return true;
        return false;
    }
    std::string summary() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& it : issues_) {
            if (!s.empty()) s += "; ";
            s += it.code + ": " + it.detail;
        }
        return s;
    }

private:
    std::vector<ValidationIssue> issues_;
};

}  // namespace ope
