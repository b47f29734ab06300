#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace turnlab {

using Token = std::uint16_t;
using TokenSeq = std::vector<Token>;

// Byte-level vocabulary: token ids 0..255 are raw byte values, 256 is the
// end-of-response token. Everything is tokenizable, nothing is OOV.
inline constexpr int VOCAB_SIZE = 257;
inline constexpr Token END_TOKEN = 256;

// Raw bytes of `text`; used for external-input and feedback messages.
TokenSeq tokenize_text(std::string_view text);

// Bytes of `text` followed by END_TOKEN; the canonical token form of a model
// response, applied uniformly whether sampling stopped on END or truncation.
TokenSeq tokenize_response(std::string_view text);

// Inverse of both tokenizers: byte tokens concatenate, END_TOKEN decodes to
// nothing.
std::string decode(const TokenSeq & tokens);

} // namespace turnlab
