#include "turnlab/vocab.hpp"

namespace turnlab {

TokenSeq tokenize_text(std::string_view text) {
    TokenSeq out;
    out.reserve(text.size());
    for (unsigned char c : text) {
        out.push_back(static_cast<Token>(c));
    }
    return out;
}

TokenSeq tokenize_response(std::string_view text) {
    TokenSeq out = tokenize_text(text);
    out.push_back(END_TOKEN);
    return out;
}

std::string decode(const TokenSeq & tokens) {
    std::string out;
    out.reserve(tokens.size());
    for (Token t : tokens) {
        if (t < 256) {
            out.push_back(static_cast<char>(static_cast<unsigned char>(t)));
        }
    }
    return out;
}

} // namespace turnlab
