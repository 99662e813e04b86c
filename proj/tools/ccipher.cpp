// ccipher - classical cipher toolkit command line
//
// Exit codes: 0 success, 1 usage error, 2 invalid key, 3 malformed input,
// 4 I/O failure.
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccipher/analysis.hpp"
#include "ccipher/bytes.hpp"
#include "ccipher/cipher.hpp"
#include "ccipher/errors.hpp"
#include "ccipher/key_schedule.hpp"
#include "ccipher/substitution.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidKey = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ccipher::Bytes read_input(const std::string& path) {
    if (path == "-") {
        ccipher::Bytes data{std::istreambuf_iterator<char>(std::cin),
                            std::istreambuf_iterator<char>()};
        if (std::cin.bad()) throw IoError("failed to read standard input");
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    ccipher::Bytes data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("failed to read input file: " + path);
    return data;
}

void write_output(const std::string& path, const ccipher::Bytes& data) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(data.data()),
                        static_cast<std::streamsize>(data.size()));
        std::cout.flush();
        if (!std::cout) throw IoError("failed to write standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) throw IoError("failed to write output file: " + path);
}

void write_output(const std::string& path, const std::string& text) {
    write_output(path, ccipher::to_bytes(text));
}

ccipher::Bytes require_key(const std::string& key) {
    if (key.empty()) throw ccipher::InvalidKeyError("a non-empty key is required (--key or CCIPHER_KEY)");
    return ccipher::to_bytes(key);
}

std::string printable_preview(const ccipher::Bytes& data, std::size_t limit) {
    std::string out;
    for (std::size_t i = 0; i < data.size() && i < limit; ++i) {
        const char c = static_cast<char>(data[i]);
        out.push_back(std::isprint(static_cast<unsigned char>(c)) ? c : '.');
    }
    if (data.size() > limit) out += "...";
    return out;
}

// Overlapping fixed-size windows over a corpus, evenly spread.
std::vector<ccipher::Bytes> slice_corpus(const ccipher::Bytes& corpus, std::size_t count,
                                         std::size_t sample_bytes) {
    if (corpus.size() < sample_bytes)
        throw ccipher::MalformedInputError("corpus is smaller than one sample");
    std::size_t stride = 1;
    if (count > 1) stride = std::max<std::size_t>(1, (corpus.size() - sample_bytes) / (count - 1));
    std::vector<ccipher::Bytes> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t start = std::min(i * stride, corpus.size() - sample_bytes);
        samples.emplace_back(corpus.begin() + static_cast<std::ptrdiff_t>(start),
                             corpus.begin() + static_cast<std::ptrdiff_t>(start + sample_bytes));
    }
    return samples;
}

ccipher::ReferenceProfile load_profile(const std::string& path) {
    if (path.empty()) return ccipher::ReferenceProfile::standard_english();
    return ccipher::ReferenceProfile::from_csv(path);
}

struct CommonIo {
    std::string input = "-";
    std::string output = "-";
};

void add_io(CLI::App* cmd, CommonIo& io) {
    cmd->add_option("input", io.input, "input file, or - for stdin")->capture_default_str();
    cmd->add_option("-o,--output", io.output, "output file, or - for stdout")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ccipher - keyed substitution + double columnar transposition cipher, "
                 "classical baselines, and frequency-analysis tools"};
    app.require_subcommand(1);

    // encrypt / decrypt
    CommonIo enc_io, dec_io;
    std::string enc_key, dec_key;
    bool enc_hex = false, dec_hex = false;
    auto* enc = app.add_subcommand("encrypt", "encrypt with the keyed pipeline");
    add_io(enc, enc_io);
    enc->add_option("-k,--key", enc_key, "password")->envname("CCIPHER_KEY");
    enc->add_flag("--hex", enc_hex, "hex-encode the ciphertext");
    auto* dec = app.add_subcommand("decrypt", "decrypt with the keyed pipeline");
    add_io(dec, dec_io);
    dec->add_option("-k,--key", dec_key, "password")->envname("CCIPHER_KEY");
    dec->add_flag("--hex", dec_hex, "input ciphertext is hex-encoded");

    // caesar
    CommonIo caesar_io;
    long long caesar_shift = 0;
    bool caesar_dec = false;
    auto* caesar = app.add_subcommand("caesar", "classical shift cipher (letters only)");
    add_io(caesar, caesar_io);
    caesar->add_option("-n,--shift", caesar_shift, "shift amount; any integer, reduced mod 26")
        ->required();
    caesar->add_flag("-d,--decrypt", caesar_dec, "decrypt instead of encrypt");

    // columnar
    CommonIo col_io;
    std::vector<int> col_order;
    std::string col_pad = "z";
    bool col_dec = false, col_ragged = false;
    auto* columnar = app.add_subcommand("columnar", "classical columnar transposition");
    add_io(columnar, col_io);
    columnar->add_option("-c,--columns", col_order, "column read order, e.g. 3,1,4,5,2")
        ->required()
        ->delimiter(',');
    columnar->add_option("--pad", col_pad, "pad byte for the padded form")->capture_default_str();
    columnar->add_flag("--ragged", col_ragged, "no padding; short columns contribute less");
    columnar->add_flag("-d,--decrypt", col_dec, "invert the transposition");

    // keyinfo
    std::string keyinfo_key;
    auto* keyinfo = app.add_subcommand("keyinfo", "show the subkeys derived from a password");
    keyinfo->add_option("-k,--key", keyinfo_key, "password")->envname("CCIPHER_KEY");

    // table
    std::string table_key, table_format = "text";
    auto* table_cmd = app.add_subcommand("table", "dump the substitution table for a password");
    table_cmd->add_option("-k,--key", table_key, "password")->envname("CCIPHER_KEY");
    table_cmd->add_option("-f,--format", table_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();

    // histogram
    CommonIo hist_io;
    std::string hist_format = "json";
    auto* hist = app.add_subcommand("histogram", "byte histogram of the input");
    add_io(hist, hist_io);
    hist->add_option("-f,--format", hist_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // attack
    CommonIo attack_io;
    std::string attack_profile, attack_truth;
    bool attack_scores = false;
    auto* attack = app.add_subcommand("attack", "recover a caesar shift by frequency analysis");
    add_io(attack, attack_io);
    attack->add_option("--profile", attack_profile, "letter-frequency CSV (default: built-in English)");
    attack->add_option("--truth", attack_truth, "known plaintext file to judge success");
    attack->add_flag("--scores", attack_scores, "print the full per-shift ranking");

    // experiment
    std::string exp_corpus, exp_key, exp_profile;
    std::size_t exp_samples = 100, exp_bytes = 250;
    auto* experiment =
        app.add_subcommand("experiment", "frequency attack against the keyed pipeline over many samples");
    experiment->add_option("corpus", exp_corpus, "corpus file sliced into samples")->required();
    experiment->add_option("-k,--key", exp_key, "password")->envname("CCIPHER_KEY");
    experiment->add_option("--samples", exp_samples, "number of samples")->capture_default_str();
    experiment->add_option("--sample-bytes", exp_bytes, "bytes per sample")->capture_default_str();
    experiment->add_option("--profile", exp_profile, "letter-frequency CSV (default: built-in English)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(enc)) {
            ccipher::Bytes out = ccipher::encrypt(read_input(enc_io.input), require_key(enc_key));
            if (enc_hex)
                write_output(enc_io.output, ccipher::to_hex(out) + "\n");
            else
                write_output(enc_io.output, out);
        } else if (app.got_subcommand(dec)) {
            ccipher::Bytes in = read_input(dec_io.input);
            if (dec_hex) in = ccipher::from_hex(ccipher::to_string(in));
            write_output(dec_io.output, ccipher::decrypt(in, require_key(dec_key)));
        } else if (app.got_subcommand(caesar)) {
            const ccipher::Bytes in = read_input(caesar_io.input);
            write_output(caesar_io.output, caesar_dec ? ccipher::caesar_decrypt(in, caesar_shift)
                                                      : ccipher::caesar_encrypt(in, caesar_shift));
        } else if (app.got_subcommand(columnar)) {
            if (col_pad.size() != 1)
                throw ccipher::MalformedInputError("--pad must be a single byte");
            const ccipher::ColumnKey key(col_order);
            const std::optional<std::uint8_t> pad =
                col_ragged ? std::nullopt
                           : std::optional<std::uint8_t>(static_cast<std::uint8_t>(col_pad[0]));
            const ccipher::Bytes in = read_input(col_io.input);
            write_output(col_io.output, col_dec ? ccipher::inverse_transpose(in, key, pad)
                                                : ccipher::transpose(in, key, pad));
        } else if (app.got_subcommand(keyinfo)) {
            const ccipher::SubKeys keys = ccipher::derive_subkeys(require_key(keyinfo_key));
            const ccipher::KeySpace space =
                ccipher::key_space_size(static_cast<unsigned>(keys.ckey2.size()));
            std::ostringstream out;
            out << "ckey1 = " << keys.ckey1_digits << "\n";
            out << "ckey1 mod 127 = " << keys.ckey1_residue << "\n";
            out << "ckey2 =";
            for (int c : keys.ckey2) out << ' ' << c;
            out << "\n";
            out << "key space (256^" << keys.ckey2.size() << ") = " << space.password_count << "\n";
            out << "swapped form (" << keys.ckey2.size() << "^256) = " << space.swapped_count << "\n";
            std::cout << out.str();
        } else if (app.got_subcommand(table_cmd)) {
            const ccipher::SubKeys keys = ccipher::derive_subkeys(require_key(table_key));
            const ccipher::SubstitutionTable table = ccipher::build_tables(keys.ckey1_residue);
            std::ostringstream out;
            if (table_format == "csv") {
                out << "byte,forward,inverse\n";
                for (int b = 0; b < 256; ++b)
                    out << b << ',' << static_cast<int>(table.forward[static_cast<std::size_t>(b)])
                        << ',' << static_cast<int>(table.inverse[static_cast<std::size_t>(b)]) << '\n';
            } else {
                for (int b = 0; b < 256; ++b)
                    out << b << " -> " << static_cast<int>(table.forward[static_cast<std::size_t>(b)])
                        << '\n';
            }
            std::cout << out.str();
        } else if (app.got_subcommand(hist)) {
            const ccipher::ByteHistogram h = ccipher::histogram(read_input(hist_io.input));
            write_output(hist_io.output,
                         hist_format == "csv" ? ccipher::histogram_csv(h)
                                              : ccipher::histogram_json(h) + "\n");
        } else if (app.got_subcommand(attack)) {
            const ccipher::Bytes in = read_input(attack_io.input);
            const ccipher::ReferenceProfile profile = load_profile(attack_profile);
            ccipher::Bytes truth;
            const bool have_truth = !attack_truth.empty();
            if (have_truth) truth = read_input(attack_truth);
            const ccipher::AttackReport report =
                ccipher::recover_caesar_shift(in, profile, have_truth ? &truth : nullptr);

            std::ostringstream out;
            out << "recovered shift: " << report.recovered_shift << "\n";
            out << "modal-letter estimate: " << ccipher::modal_letter_shift(in, profile) << "\n";
            out << "candidate preview: " << printable_preview(report.candidate_plaintext, 64) << "\n";
            if (have_truth) out << "success: " << (report.success ? "yes" : "no") << "\n";
            if (attack_scores) {
                out << "ranking (shift, score, preview):\n";
                for (const ccipher::RankedShift& r : ccipher::brute_force_caesar(in, profile))
                    out << "  " << r.shift << "  " << r.score << "  "
                        << printable_preview(r.preview, 40) << "\n";
            }
            std::cout << out.str();
            if (attack_io.output != "-") write_output(attack_io.output, report.candidate_plaintext);
        } else if (app.got_subcommand(experiment)) {
            const ccipher::Bytes corpus = read_input(exp_corpus);
            const std::vector<ccipher::Bytes> samples = slice_corpus(corpus, exp_samples, exp_bytes);
            const ccipher::ExperimentResult result = ccipher::frequency_attack_experiment(
                samples, require_key(exp_key), load_profile(exp_profile));
            std::cout << "trials: " << result.trials << "\n";
            std::cout << "recovered: " << result.recovered << "\n";
            std::cout << "success rate: " << result.success_rate()
                      << (result.trials == 0 ? " (no trials)" : "") << "\n";
        }
    } catch (const ccipher::InvalidKeyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidKey;
    } catch (const ccipher::MalformedInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const ccipher::NotAttackableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
