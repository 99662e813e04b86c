#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ccipher/bytes.hpp"

namespace ccipher {

struct ByteHistogram {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t total = 0;
};

ByteHistogram histogram(const Bytes& text);

// {"counts":[...256 entries...],"total":n}
std::string histogram_json(const ByteHistogram& hist);
// "byte,count" header plus one row per byte value
std::string histogram_csv(const ByteHistogram& hist);

// Expected English letter proportions, a..z, normalized to sum to 1.
class ReferenceProfile {
public:
    explicit ReferenceProfile(const std::array<double, 26>& weights);

    static ReferenceProfile standard_english();
    static ReferenceProfile from_csv(const std::string& path);

    double frequency(int letter) const { return freq_[static_cast<std::size_t>(letter)]; }
    const std::array<double, 26>& frequencies() const { return freq_; }
    int modal_letter() const;

private:
    std::array<double, 26> freq_{};
};

struct AttackReport {
    int recovered_shift = 0;
    std::array<double, 26> score_per_shift{};
    Bytes candidate_plaintext;
    bool success = false;  // candidate equals the supplied ground truth
};

// Chi-squared scoring of the case-folded letter distribution of every
// candidate decryption against the profile; the lowest score wins and ties
// break toward the smaller shift.
AttackReport recover_caesar_shift(const Bytes& text, const ReferenceProfile& profile,
                                  const Bytes* ground_truth = nullptr);

struct RankedShift {
    int shift = 0;
    double score = 0.0;
    Bytes preview;
};

// All 26 candidates ranked ascending by score.
std::vector<RankedShift> brute_force_caesar(const Bytes& text, const ReferenceProfile& profile);

// Cheaper estimate: the shift that maps the profile's modal letter onto the
// most frequent ciphertext letter.
int modal_letter_shift(const Bytes& text, const ReferenceProfile& profile);

struct ExperimentResult {
    std::size_t trials = 0;
    std::size_t recovered = 0;
    double success_rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(recovered) / static_cast<double>(trials);
    }
};

// Encrypts every sample with the keyed pipeline, runs the shift-recovery
// attack on the ciphertext and counts exact recoveries of the sample.
ExperimentResult frequency_attack_experiment(
    const std::vector<Bytes>& samples, const Bytes& password,
    const ReferenceProfile& profile = ReferenceProfile::standard_english());

}  // namespace ccipher
