#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "turnlab/vocab.hpp"

namespace turnlab {

// Hashed suffix-n-gram featurizer feeding a linear softmax over the byte
// vocabulary. The window must reach from the answer position back to the
// task-identifying part of the prompt, which is what lets the policy key
// answers to individual tasks; see featurize().
struct PolicyConfig {
    int ngram = 48;
    std::size_t feature_dim = 16384;

    bool operator==(const PolicyConfig &) const = default;
};

struct PolicyParams {
    PolicyConfig cfg;
    std::vector<double> w; // [feature_dim][VOCAB_SIZE], row-major

    static PolicyParams zeros(PolicyConfig cfg);

    double * row(std::size_t f) { return w.data() + f * VOCAB_SIZE; }
    const double * row(std::size_t f) const { return w.data() + f * VOCAB_SIZE; }
};

struct GradientBuffer {
    std::vector<double> g; // same shape as PolicyParams::w
    std::size_t accum_count = 0;

    static GradientBuffer zeros_like(const PolicyParams & p);
    void clear();
    double * row(std::size_t f) { return g.data() + f * VOCAB_SIZE; }
};

using FeatureVec = std::vector<std::uint32_t>;

// Active feature ids for a context: FNV-1a over the last k tokens (each id as
// two little-endian bytes) reduced mod feature_dim, for k = 0..min(n, len).
// k = 0 hashes the empty suffix and acts as the bias feature.
FeatureVec featurize(const PolicyConfig & cfg, std::span<const Token> context);

using Logits = std::array<double, VOCAB_SIZE>;

Logits logits(const PolicyParams & p, std::span<const Token> context);
Logits logits_from_features(const PolicyParams & p, const FeatureVec & feats);

double logprob(const PolicyParams & p, std::span<const Token> context, Token token);
double logprob_from_features(const PolicyParams & p, const FeatureVec & feats, Token token);

// Accumulates scale * d log pi(token|context) / d w into `out`;
// for the linear softmax that is scale * phi(context) (x) (onehot(token) - p).
void grad_logprob(const PolicyParams & p, std::span<const Token> context, Token token,
                  double scale, GradientBuffer & out);
void grad_logprob_from_features(const PolicyParams & p, const FeatureVec & feats, Token token,
                                double scale, GradientBuffer & out);

// Autoregressive sampling from softmax(logits / temperature) until END_TOKEN
// or max_tokens. temperature 0 is greedy argmax with lowest-id tie-break.
// The returned sequence excludes END_TOKEN. Deterministic in
// (params, context, temperature, seed).
TokenSeq sample_response(const PolicyParams & p, std::span<const Token> context,
                         double temperature, int max_tokens, std::uint64_t seed);

// Maximum-likelihood fit of the params to a set of response strings (Adam,
// full batch). Used to start training from a policy that already knows the
// answer format, the toy analogue of starting RL from an instruction-tuned
// model.
void fit_response_demos(PolicyParams & p, const std::vector<std::string> & demos,
                        int steps, double learning_rate);

} // namespace turnlab
