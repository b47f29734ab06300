#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turnlab/vocab.hpp"

namespace turnlab {

// Conversation roles: external input (the prompt or tool output), a model
// response, and verifier feedback on a final answer.
enum class Role : std::uint8_t { ExternalInput, ModelResponse, Feedback };

// Credit-assignment strategies for multi-turn training:
//   UACR - update all responses, consistent terminal reward
//   ULCR - update last response only, consistent terminal reward
//   UADR - update all responses, reward decayed by turns taken
enum class Strategy : std::uint8_t { UACR, ULCR, UADR };

const char * role_tag(Role r);           // "U" | "R" | "F"
std::optional<Role> role_from_tag(std::string_view tag);
const char * strategy_name(Strategy s);  // "uacr" | "ulcr" | "uadr"
std::optional<Strategy> strategy_from_name(std::string_view name);

struct Message {
    Role role;
    TokenSeq tokens;
    std::string text;
};

// Builds a message with tokens derived from the text for the given role
// (responses get the trailing END_TOKEN).
Message make_message(Role role, std::string text);

// One task interaction. Messages follow the grammar
//   U (R (U R)* F)* R ... i.e. first message is the prompt, every response is
// preceded by an input or feedback, every feedback follows a response and is
// itself followed by a response. A turn ends at a feedback message or at the
// final response of the episode.
struct Episode {
    std::string task_id;
    std::vector<Message> messages;
    std::vector<std::size_t> turn_boundaries; // index of the last message of each turn
    std::optional<int> correct_turn;          // 1-based; unset = never verified correct
    int k_max = 1;

    std::size_t total_tokens() const;
};

// Boolean selection over the episode's flattened token positions. Set bits
// mark positions that contribute to the policy-gradient loss.
struct TokenMask {
    std::vector<std::uint8_t> bits;
    std::size_t count() const;
    std::size_t size() const { return bits.size(); }
};

// Validates the message grammar, computes turn boundaries, checks k_max and
// correct_turn consistency. Throws MalformedEpisode / TurnOverflow.
Episode build_episode(std::string task_id, std::vector<Message> messages, int k_max,
                      std::optional<int> correct_turn = std::nullopt);

// Strategy mask over flattened tokens: UACR/UADR select every response span,
// ULCR selects only the final response of the last turn. Input and feedback
// tokens are never selected.
TokenMask loss_mask(const Episode & ep, Strategy strategy);

int turn_count(const Episode & ep);

// All message tokens concatenated in message order; masks index this stream.
TokenSeq flatten_tokens(const Episode & ep);

// One-line JSON: {"task_id","k_max","correct_turn","messages":[{"role","text"}]}.
// Tokens are re-derived from text on load.
std::string episode_to_json(const Episode & ep);
Episode episode_from_json(std::string_view line);

} // namespace turnlab
