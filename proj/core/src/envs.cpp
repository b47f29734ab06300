#include "turnlab/envs.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "turnlab/errors.hpp"

using json = nlohmann::json;

namespace turnlab {

namespace {

std::vector<long long> iota_space(long long lo, long long hi) {
    std::vector<long long> v(static_cast<std::size_t>(hi - lo + 1));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

std::string padded_id(const char * prefix, std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s-%06zu", prefix, i);
    return buf;
}

} // namespace

Task make_digit_task(int a, int b, std::string id) {
    Task t;
    t.id = std::move(id);
    t.question = "What is the last digit of " + std::to_string(a) + "+" + std::to_string(b) +
                 "? Answer with #### <digit>.";
    t.gold_answer = (a + b) % 10;
    t.answer_space = iota_space(0, 9);
    return t;
}

Task make_add_task(int a, int b, std::string id) {
    Task t;
    t.id = std::move(id);
    t.question = "What is " + std::to_string(a) + "+" + std::to_string(b) +
                 "? Answer with #### <sum>.";
    t.gold_answer = a + b;
    t.answer_space = iota_space(0, 198);
    return t;
}

Dataset gen_synthetic(SyntheticKind kind, std::size_t n, std::uint64_t seed) {
    Dataset ds;
    ds.source = kind == SyntheticKind::Digit ? DatasetSource::SyntheticDigit
                                             : DatasetSource::SyntheticAdd;
    ds.seed = seed;
    ds.tasks.reserve(n);
    std::mt19937_64 rng(seed);
    const char * prefix = kind == SyntheticKind::Digit ? "digit" : "add";
    for (std::size_t i = 0; i < n; ++i) {
        int a = static_cast<int>(rng() % 100);
        int b = static_cast<int>(rng() % 100);
        ds.tasks.push_back(kind == SyntheticKind::Digit ? make_digit_task(a, b, padded_id(prefix, i))
                                                        : make_add_task(a, b, padded_id(prefix, i)));
    }
    return ds;
}

std::optional<long long> extract_answer(std::string_view text) {
    std::optional<long long> result;
    for (std::size_t pos = text.find("####"); pos != std::string_view::npos;
         pos = text.find("####", pos + 1)) {
        std::size_t i = pos + 4;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        bool negative = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            negative = text[i] == '-';
            ++i;
        }
        unsigned long long value = 0;
        bool any_digit = false;
        bool overflow = false;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (c == ',') {
                continue; // "1,234" reads as 1234
            }
            if (c < '0' || c > '9') {
                break;
            }
            any_digit = true;
            if (value > (std::numeric_limits<unsigned long long>::max() - static_cast<unsigned>(c - '0')) / 10) {
                overflow = true;
                break;
            }
            value = value * 10 + static_cast<unsigned>(c - '0');
        }
        const unsigned long long limit =
            static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + (negative ? 1ull : 0ull);
        if (any_digit && !overflow && value <= limit) {
            if (negative) {
                result = value == limit ? std::numeric_limits<long long>::min()
                                        : -static_cast<long long>(value);
            } else {
                result = static_cast<long long>(value);
            }
            // last well-formed marker wins
        }
    }
    return result;
}

bool verify(const Task & task, std::string_view response_text) {
    auto ans = extract_answer(response_text);
    return ans && *ans == task.gold_answer;
}

std::string feedback_message() {
    return "Your response is incorrect, or your answer is not given in the correct form. "
           "You need to reflect on your answer and try again";
}

Dataset load_jsonl(const std::string & path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open dataset file: " + path);
    }
    Dataset ds;
    ds.source = DatasetSource::JsonlFile;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception & e) {
            throw ParseError(lineno, std::string("malformed JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("question") || !j.contains("answer") ||
            !j["question"].is_string() || !j["answer"].is_string()) {
            throw ParseError(lineno, "expected object with string fields 'question' and 'answer'");
        }
        auto gold = extract_answer(j["answer"].get<std::string>());
        if (!gold) {
            throw AnswerFormatError(lineno, "no '#### <integer>' marker in answer");
        }
        Task t;
        t.id = padded_id("jsonl", lineno);
        t.question = j["question"].get<std::string>();
        t.gold_answer = *gold;
        ds.tasks.push_back(std::move(t));
    }
    return ds;
}

void write_jsonl(const Dataset & ds, const std::string & path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot open output file: " + path);
    }
    for (const auto & t : ds.tasks) {
        json j;
        j["question"] = t.question;
        j["answer"] = "#### " + std::to_string(t.gold_answer);
        out << j.dump() << "\n";
    }
    if (!out) {
        throw Error("failed writing: " + path);
    }
}

} // namespace turnlab
