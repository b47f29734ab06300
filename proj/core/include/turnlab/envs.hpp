#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace turnlab {

struct Task {
    std::string id;
    std::string question;
    long long gold_answer = 0;
    // Present for synthetic tasks; the full set of answers the task can take.
    std::optional<std::vector<long long>> answer_space;
};

enum class DatasetSource : std::uint8_t { SyntheticDigit, SyntheticAdd, JsonlFile };
enum class SyntheticKind : std::uint8_t { Digit, Add };

struct Dataset {
    std::vector<Task> tasks;
    DatasetSource source = DatasetSource::JsonlFile;
    std::optional<std::uint64_t> seed;
};

Task make_digit_task(int a, int b, std::string id);
Task make_add_task(int a, int b, std::string id);

// Deterministic in (kind, n, seed). Digit: last digit of a+b, answer space
// {0..9}; Add: a+b, answer space {0..198}; a,b uniform in [0,99].
Dataset gen_synthetic(SyntheticKind kind, std::size_t n, std::uint64_t seed);

// One JSON object per line with string fields "question" and "answer"; the
// gold answer is the integer after the final "####" marker in "answer".
// Throws ParseError / AnswerFormatError with the offending line number.
Dataset load_jsonl(const std::string & path);

// Writes the same JSONL shape load_jsonl reads, with "answer" set to
// "#### <gold>", so synthetic and file-backed data share one loader.
void write_jsonl(const Dataset & ds, const std::string & path);

// Integer after the last well-formed "####" marker, tolerating surrounding
// whitespace and commas inside the number. Absent if no marker parses.
std::optional<long long> extract_answer(std::string_view text);

// The binary verifier acting as the reward model.
bool verify(const Task & task, std::string_view response_text);

// The fixed negative-feedback sentence injected after a wrong final answer.
std::string feedback_message();

} // namespace turnlab
