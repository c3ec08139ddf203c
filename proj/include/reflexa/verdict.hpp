#ifndef REFLEXA_VERDICT_HPP
#define REFLEXA_VERDICT_HPP

#include <cstdint>
#include <string>

namespace reflexa {

/// Tri-state verdict. Certified statuses always carry a rule tag and a
/// machine-checkable witness; bounded searches that found nothing are
/// reported honestly as unknown-up-to.
struct Verdict {
    enum class Status { CertifiedTrue, CertifiedFalse, Unknown };

    Status status = Status::Unknown;
    std::uint32_t bound = 0;  // meaningful for Unknown: checked through this index
    std::string rule;         // which rule certified it (or "" for unknown)
    std::string witness;      // machine-checkable evidence summary

    static Verdict certified_true(std::string rule, std::string witness = "") {
        return {Status::CertifiedTrue, 0, std::move(rule), std::move(witness)};
    }
    static Verdict certified_false(std::string rule, std::string witness = "") {
        return {Status::CertifiedFalse, 0, std::move(rule), std::move(witness)};
    }
    static Verdict unknown_up_to(std::uint32_t bound) { return {Status::Unknown, bound, "", ""}; }

    bool is_true() const { return status == Status::CertifiedTrue; }
    bool is_false() const { return status == Status::CertifiedFalse; }
    bool is_certified() const { return status != Status::Unknown; }

    std::string status_str() const {
        switch (status) {
            case Status::CertifiedTrue: return "certified_true";
            case Status::CertifiedFalse: return "certified_false";
            case Status::Unknown: return "unknown_up_to_" + std::to_string(bound);
        }
        return "?";
    }
};

}  // namespace reflexa

#endif
