#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccipher/bytes.hpp"

namespace fixtures {

// known-answer vectors: the qwert password and its three pipeline stages
inline const std::string kStageKey = "qwert";
inline const std::string kStagePlain = "enemy attacks tonight";
inline const std::string kStageSubstituted = "F^FSk BooBTO] ov^eLMo";
inline const std::string kStagePass1 = "So LkBoM^BO^F TvoFo]e";
inline const std::string kStageFinal = "L^ okBT]oo^oSBOve MFF";

// classic padded columnar example
inline const std::string kColumnarPlain = "enemyattackstonight";
inline const std::vector<int> kColumnarOrder = {3, 1, 4, 5, 2};
inline const std::string kColumnarCipher = "ettheakimaotycnzntsg";

// long English fixture: the classic encyclopedia description of the shift
// cipher, and its exact shift-6 encryption (frozen from the table-lookup
// oracle in oracles.hpp)
inline const std::string kArticlePlain =
    "In cryptography, a Caesar cipher, also known as Caesar's cipher, the shift cipher, "
    "Caesar's code or Caesar shift, is one of the simplest and most widely known encryption "
    "techniques. It is a type of substitution cipher in which each letter in the plaintext "
    "is replaced by a letter some fixed number of positions down the alphabet. For example, "
    "with a left shift of 3, D would be replaced by A, E would become B, and so on. The "
    "method is named after Julius Caesar, who used it in his private correspondence.";

inline const std::string kArticleShift6 =
    "Ot ixevzumxgvne, g Igkygx iovnkx, gryu qtuct gy Igkygx'y iovnkx, znk ynolz iovnkx, "
    "Igkygx'y iujk ux Igkygx ynolz, oy utk ul znk yosvrkyz gtj suyz cojkre qtuct ktixevzout "
    "zkintowaky. Oz oy g zevk ul yahyzozazout iovnkx ot cnoin kgin rkzzkx ot znk vrgotzkdz "
    "oy xkvrgikj he g rkzzkx yusk lodkj tashkx ul vuyozouty juct znk grvnghkz. Lux kdgsvrk, "
    "cozn g rklz ynolz ul 3, J cuarj hk xkvrgikj he G, K cuarj hkiusk H, gtj yu ut. Znk "
    "skznuj oy tgskj glzkx Paroay Igkygx, cnu aykj oz ot noy vxobgzk iuxxkyvutjktik.";

inline std::string data_path(const std::string& name) {
    return std::string(CCIPHER_DATA_DIR) + "/" + name;
}

inline ccipher::Bytes load_corpus() {
    std::ifstream in(data_path("english_corpus.txt"), std::ios::binary);
    if (!in) throw std::runtime_error("cannot open english_corpus.txt");
    return ccipher::Bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// count evenly spread overlapping windows of sample_bytes each
inline std::vector<ccipher::Bytes> corpus_samples(const ccipher::Bytes& corpus, std::size_t count,
                                                  std::size_t sample_bytes) {
    if (corpus.size() < sample_bytes) throw std::runtime_error("corpus too small");
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

}  // namespace fixtures
