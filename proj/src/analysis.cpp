#include "ccipher/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ccipher/cipher.hpp"
#include "ccipher/errors.hpp"

namespace ccipher {

ByteHistogram histogram(const Bytes& text) {
    ByteHistogram hist;
    for (std::uint8_t b : text) ++hist.counts[b];
    hist.total = text.size();
    return hist;
}

std::string histogram_json(const ByteHistogram& hist) {
    nlohmann::json j;
    j["counts"] = hist.counts;
    j["total"] = hist.total;
    return j.dump();
}

std::string histogram_csv(const ByteHistogram& hist) {
    std::string out = "byte,count\n";
    for (int b = 0; b < 256; ++b) {
        out += std::to_string(b);
        out += ',';
        out += std::to_string(hist.counts[static_cast<std::size_t>(b)]);
        out += '\n';
    }
    return out;
}

ReferenceProfile::ReferenceProfile(const std::array<double, 26>& weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("profile weights must be non-negative");
        sum += w;
    }
    if (sum <= 0.0) throw std::invalid_argument("profile weights must not all be zero");
    for (std::size_t i = 0; i < 26; ++i) freq_[i] = weights[i] / sum;
}

ReferenceProfile ReferenceProfile::standard_english() {
    // relative letter frequencies of English text, in percent
    static const std::array<double, 26> kEnglish = {
        8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966,
        0.153, 0.772, 4.025, 2.406,  6.749,  7.507, 1.929, 0.095, 5.987,
        6.327, 9.056, 2.758, 0.978,  2.360,  0.150, 1.974, 0.074};
    return ReferenceProfile(kEnglish);
}

ReferenceProfile ReferenceProfile::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file: " + path);

    std::array<double, 26> weights{};
    std::array<bool, 26> seen{};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string letter, value;
        if (!std::getline(row, letter, ',') || !std::getline(row, value)) continue;
        if (letter.size() != 1) continue;
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(letter[0])));
        if (c < 'a' || c > 'z') continue;  // skips the header row too
        weights[static_cast<std::size_t>(c - 'a')] = std::stod(value);
        seen[static_cast<std::size_t>(c - 'a')] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw std::runtime_error("profile file must define all 26 letters: " + path);
    return ReferenceProfile(weights);
}

int ReferenceProfile::modal_letter() const {
    return static_cast<int>(std::max_element(freq_.begin(), freq_.end()) - freq_.begin());
}

namespace {

std::array<std::uint64_t, 26> letter_counts(const Bytes& text, std::uint64_t& total) {
    std::array<std::uint64_t, 26> counts{};
    total = 0;
    for (std::uint8_t b : text) {
        if (b >= 'A' && b <= 'Z') {
            ++counts[static_cast<std::size_t>(b - 'A')];
            ++total;
        } else if (b >= 'a' && b <= 'z') {
            ++counts[static_cast<std::size_t>(b - 'a')];
            ++total;
        }
    }
    return counts;
}

double chi_squared(const std::array<std::uint64_t, 26>& counts, std::uint64_t total,
                   const ReferenceProfile& profile) {
    double score = 0.0;
    for (int i = 0; i < 26; ++i) {
        const double observed =
            static_cast<double>(counts[static_cast<std::size_t>(i)]) / static_cast<double>(total);
        const double expected = profile.frequency(i);
        const double diff = observed - expected;
        score += diff * diff / expected;
    }
    return score;
}

std::array<double, 26> score_all_shifts(const Bytes& text, const ReferenceProfile& profile) {
    std::uint64_t total = 0;
    const auto counts = letter_counts(text, total);
    if (total == 0) throw NotAttackableError("text contains no alphabetic bytes");

    // decrypting by s rotates the letter distribution; rotate the counts
    // instead of re-deciphering the text 26 times
    std::array<double, 26> scores{};
    for (int s = 0; s < 26; ++s) {
        std::array<std::uint64_t, 26> rotated{};
        for (int i = 0; i < 26; ++i)
            rotated[static_cast<std::size_t>(((i - s) % 26 + 26) % 26)] =
                counts[static_cast<std::size_t>(i)];
        scores[static_cast<std::size_t>(s)] = chi_squared(rotated, total, profile);
    }
    return scores;
}

}  // namespace

AttackReport recover_caesar_shift(const Bytes& text, const ReferenceProfile& profile,
                                  const Bytes* ground_truth) {
    AttackReport report;
    report.score_per_shift = score_all_shifts(text, profile);

    int best = 0;
    for (int s = 1; s < 26; ++s)
        if (report.score_per_shift[static_cast<std::size_t>(s)] <
            report.score_per_shift[static_cast<std::size_t>(best)])
            best = s;

    report.recovered_shift = best;
    report.candidate_plaintext = caesar_decrypt(text, best);
    report.success = ground_truth != nullptr && report.candidate_plaintext == *ground_truth;
    return report;
}

std::vector<RankedShift> brute_force_caesar(const Bytes& text, const ReferenceProfile& profile) {
    constexpr std::size_t kPreviewBytes = 48;
    const auto scores = score_all_shifts(text, profile);

    std::vector<RankedShift> ranking;
    ranking.reserve(26);
    for (int s = 0; s < 26; ++s) {
        Bytes candidate = caesar_decrypt(text, s);
        if (candidate.size() > kPreviewBytes) candidate.resize(kPreviewBytes);
        ranking.push_back(RankedShift{s, scores[static_cast<std::size_t>(s)], std::move(candidate)});
    }
    std::stable_sort(ranking.begin(), ranking.end(), [](const RankedShift& a, const RankedShift& b) {
        return a.score != b.score ? a.score < b.score : a.shift < b.shift;
    });
    return ranking;
}

int modal_letter_shift(const Bytes& text, const ReferenceProfile& profile) {
    std::uint64_t total = 0;
    const auto counts = letter_counts(text, total);
    if (total == 0) throw NotAttackableError("text contains no alphabetic bytes");

    const int modal_cipher =
        static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    return ((modal_cipher - profile.modal_letter()) % 26 + 26) % 26;
}

ExperimentResult frequency_attack_experiment(const std::vector<Bytes>& samples,
                                             const Bytes& password,
                                             const ReferenceProfile& profile) {
    ExperimentResult result;
    result.trials = samples.size();
    for (const Bytes& sample : samples) {
        const Bytes ciphertext = encrypt(sample, password);
        try {
            if (recover_caesar_shift(ciphertext, profile, &sample).success) ++result.recovered;
        } catch (const NotAttackableError&) {
            // a ciphertext without letters cannot be recovered by this attack
        }
    }
    return result;
}

}  // namespace ccipher
