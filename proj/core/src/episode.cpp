#include "turnlab/episode.hpp"

#include <nlohmann/json.hpp>

#include "turnlab/errors.hpp"

using json = nlohmann::json;

namespace turnlab {

const char * role_tag(Role r) {
    switch (r) {
        case Role::ExternalInput: return "U";
        case Role::ModelResponse: return "R";
        case Role::Feedback: return "F";
    }
    return "?";
}

std::optional<Role> role_from_tag(std::string_view tag) {
    if (tag == "U") return Role::ExternalInput;
    if (tag == "R") return Role::ModelResponse;
    if (tag == "F") return Role::Feedback;
    return std::nullopt;
}

const char * strategy_name(Strategy s) {
    switch (s) {
        case Strategy::UACR: return "uacr";
        case Strategy::ULCR: return "ulcr";
        case Strategy::UADR: return "uadr";
    }
    return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
    if (name == "uacr") return Strategy::UACR;
    if (name == "ulcr") return Strategy::ULCR;
    if (name == "uadr") return Strategy::UADR;
    return std::nullopt;
}

Message make_message(Role role, std::string text) {
    Message m;
    m.role = role;
    m.tokens = role == Role::ModelResponse ? tokenize_response(text) : tokenize_text(text);
    m.text = std::move(text);
    return m;
}

std::size_t Episode::total_tokens() const {
    std::size_t n = 0;
    for (const auto & m : messages) {
        n += m.tokens.size();
    }
    return n;
}

std::size_t TokenMask::count() const {
    std::size_t n = 0;
    for (auto b : bits) {
        n += b != 0;
    }
    return n;
}

Episode build_episode(std::string task_id, std::vector<Message> messages, int k_max,
                      std::optional<int> correct_turn) {
    if (messages.empty()) {
        throw MalformedEpisode("episode has no messages");
    }
    if (k_max < 1) {
        throw MalformedEpisode("k_max must be >= 1");
    }
    if (messages.front().role != Role::ExternalInput) {
        throw MalformedEpisode("first message must be external input");
    }
    for (std::size_t i = 0; i < messages.size(); ++i) {
        const Message & m = messages[i];
        if (m.tokens.empty()) {
            throw MalformedEpisode("message " + std::to_string(i) + " has no tokens");
        }
        if (decode(m.tokens) != m.text) {
            throw MalformedEpisode("message " + std::to_string(i) + " tokens do not decode to its text");
        }
        if (i + 1 < messages.size()) {
            Role next = messages[i + 1].role;
            switch (m.role) {
                case Role::ExternalInput:
                    if (next != Role::ModelResponse) {
                        throw MalformedEpisode("external input must be followed by a response");
                    }
                    break;
                case Role::ModelResponse:
                    if (next == Role::ModelResponse) {
                        throw MalformedEpisode("response follows response at message " + std::to_string(i + 1));
                    }
                    break;
                case Role::Feedback:
                    if (next != Role::ModelResponse) {
                        throw MalformedEpisode("feedback must be followed by a response");
                    }
                    break;
            }
        }
    }
    if (messages.back().role != Role::ModelResponse) {
        throw MalformedEpisode("episode must end with a model response");
    }

    Episode ep;
    ep.task_id = std::move(task_id);
    ep.messages = std::move(messages);
    ep.k_max = k_max;

    // A feedback message closes a turn; the final response closes the last one.
    for (std::size_t i = 0; i < ep.messages.size(); ++i) {
        if (ep.messages[i].role == Role::Feedback) {
            ep.turn_boundaries.push_back(i);
        }
    }
    ep.turn_boundaries.push_back(ep.messages.size() - 1);

    const int turns = static_cast<int>(ep.turn_boundaries.size());
    if (turns > k_max) {
        throw TurnOverflow("episode has " + std::to_string(turns) + " turns, k_max " + std::to_string(k_max));
    }
    if (correct_turn) {
        // A correct final answer stops the episode, so the accepted turn is
        // necessarily the last one and nothing may follow its response.
        if (*correct_turn != turns) {
            throw MalformedEpisode("correct_turn " + std::to_string(*correct_turn) +
                                   " is not the final turn (" + std::to_string(turns) + ")");
        }
        ep.correct_turn = correct_turn;
    }
    return ep;
}

TokenMask loss_mask(const Episode & ep, Strategy strategy) {
    TokenMask mask;
    mask.bits.assign(ep.total_tokens(), 0);

    const Message * last_response = &ep.messages.back();
    std::size_t off = 0;
    for (const auto & m : ep.messages) {
        const bool selected = m.role == Role::ModelResponse &&
                              (strategy != Strategy::ULCR || &m == last_response);
        if (selected) {
            std::fill(mask.bits.begin() + static_cast<std::ptrdiff_t>(off),
                      mask.bits.begin() + static_cast<std::ptrdiff_t>(off + m.tokens.size()),
                      std::uint8_t{1});
        }
        off += m.tokens.size();
    }
    return mask;
}

int turn_count(const Episode & ep) {
    return static_cast<int>(ep.turn_boundaries.size());
}

TokenSeq flatten_tokens(const Episode & ep) {
    TokenSeq out;
    out.reserve(ep.total_tokens());
    for (const auto & m : ep.messages) {
        out.insert(out.end(), m.tokens.begin(), m.tokens.end());
    }
    return out;
}

std::string episode_to_json(const Episode & ep) {
    json j;
    j["task_id"] = ep.task_id;
    j["k_max"] = ep.k_max;
    if (ep.correct_turn) {
        j["correct_turn"] = *ep.correct_turn;
    } else {
        j["correct_turn"] = nullptr;
    }
    json msgs = json::array();
    for (const auto & m : ep.messages) {
        msgs.push_back({{"role", role_tag(m.role)}, {"text", m.text}});
    }
    j["messages"] = std::move(msgs);
    return j.dump();
}

Episode episode_from_json(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception & e) {
        throw MalformedEpisode(std::string("bad episode JSON: ") + e.what());
    }
    try {
        std::vector<Message> messages;
        for (const auto & jm : j.at("messages")) {
            auto role = role_from_tag(jm.at("role").get<std::string>());
            if (!role) {
                throw MalformedEpisode("unknown role tag in episode JSON");
            }
            messages.push_back(make_message(*role, jm.at("text").get<std::string>()));
        }
        std::optional<int> correct;
        if (j.contains("correct_turn") && !j.at("correct_turn").is_null()) {
            correct = j.at("correct_turn").get<int>();
        }
        return build_episode(j.at("task_id").get<std::string>(), std::move(messages),
                             j.at("k_max").get<int>(), correct);
    } catch (const json::exception & e) {
        throw MalformedEpisode(std::string("bad episode JSON: ") + e.what());
    }
}

} // namespace turnlab
