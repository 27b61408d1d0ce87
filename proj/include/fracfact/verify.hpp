#ifndef FRACFACT_VERIFY_HPP
#define FRACFACT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fracfact {

inline constexpr std::uint64_t kDefaultVerifySeed = 12345;

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;  ///< scope on success, counterexample on failure
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Run every cross-module consistency check at desk scale: exhaustive over
/// H_4, sliced and sampled over H_5. Failures are reported, not thrown.
VerifyReport verify_all(std::uint64_t seed = kDefaultVerifySeed);

}  // namespace fracfact

#endif
