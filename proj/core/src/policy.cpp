#include "turnlab/policy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "turnlab/errors.hpp"
#include "turnlab/seed.hpp"

namespace turnlab {

PolicyParams PolicyParams::zeros(PolicyConfig cfg) {
    PolicyParams p;
    p.cfg = cfg;
    p.w.assign(cfg.feature_dim * VOCAB_SIZE, 0.0);
    return p;
}

GradientBuffer GradientBuffer::zeros_like(const PolicyParams & p) {
    GradientBuffer g;
    g.g.assign(p.w.size(), 0.0);
    return g;
}

void GradientBuffer::clear() {
    std::fill(g.begin(), g.end(), 0.0);
    accum_count = 0;
}

FeatureVec featurize(const PolicyConfig & cfg, std::span<const Token> context) {
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(cfg.ngram), context.size());
    FeatureVec feats;
    feats.reserve(n + 1);
    // k = 0: empty suffix, the bias feature.
    std::uint64_t h = 14695981039346656037ull;
    feats.push_back(static_cast<std::uint32_t>(h % cfg.feature_dim));
    // Suffixes grow backwards from the end of the context; hashing runs over
    // the suffix bytes oldest-first so each k reuses nothing from k-1 and the
    // ids stay stable however the context was assembled.
    for (std::size_t k = 1; k <= n; ++k) {
        std::uint64_t hk = 14695981039346656037ull;
        for (std::size_t i = context.size() - k; i < context.size(); ++i) {
            const Token t = context[i];
            hk ^= static_cast<std::uint8_t>(t & 0xff);
            hk *= 1099511628211ull;
            hk ^= static_cast<std::uint8_t>(t >> 8);
            hk *= 1099511628211ull;
        }
        feats.push_back(static_cast<std::uint32_t>(hk % cfg.feature_dim));
    }
    return feats;
}

Logits logits_from_features(const PolicyParams & p, const FeatureVec & feats) {
    Logits out{};
    for (std::uint32_t f : feats) {
        const double * row = p.row(f);
        for (int v = 0; v < VOCAB_SIZE; ++v) {
            out[static_cast<std::size_t>(v)] += row[v];
        }
    }
    return out;
}

Logits logits(const PolicyParams & p, std::span<const Token> context) {
    return logits_from_features(p, featurize(p.cfg, context));
}

namespace {

// log sum exp with max subtraction; returns (max, log sum exp)
double log_normalizer(const Logits & l) {
    double mx = l[0];
    for (double v : l) {
        mx = std::max(mx, v);
    }
    double s = 0.0;
    for (double v : l) {
        s += std::exp(v - mx);
    }
    return mx + std::log(s);
}

void softmax_into(const Logits & l, std::array<double, VOCAB_SIZE> & probs) {
    double mx = l[0];
    for (double v : l) {
        mx = std::max(mx, v);
    }
    double s = 0.0;
    for (std::size_t v = 0; v < VOCAB_SIZE; ++v) {
        probs[v] = std::exp(l[v] - mx);
        s += probs[v];
    }
    const double inv = 1.0 / s;
    for (double & v : probs) {
        v *= inv;
    }
}

} // namespace

double logprob_from_features(const PolicyParams & p, const FeatureVec & feats, Token token) {
    const Logits l = logits_from_features(p, feats);
    return l[token] - log_normalizer(l);
}

double logprob(const PolicyParams & p, std::span<const Token> context, Token token) {
    return logprob_from_features(p, featurize(p.cfg, context), token);
}

void grad_logprob_from_features(const PolicyParams & p, const FeatureVec & feats, Token token,
                                double scale, GradientBuffer & out) {
    if (scale == 0.0) {
        return;
    }
    const Logits l = logits_from_features(p, feats);
    std::array<double, VOCAB_SIZE> probs;
    softmax_into(l, probs);
    for (std::uint32_t f : feats) {
        double * row = out.row(f);
        for (int v = 0; v < VOCAB_SIZE; ++v) {
            row[v] -= scale * probs[static_cast<std::size_t>(v)];
        }
        row[token] += scale;
    }
    ++out.accum_count;
}

void grad_logprob(const PolicyParams & p, std::span<const Token> context, Token token,
                  double scale, GradientBuffer & out) {
    grad_logprob_from_features(p, featurize(p.cfg, context), token, scale, out);
}

TokenSeq sample_response(const PolicyParams & p, std::span<const Token> context,
                         double temperature, int max_tokens, std::uint64_t seed) {
    TokenSeq generated;
    TokenSeq ctx(context.begin(), context.end());
    std::mt19937_64 rng(seed);
    for (int step = 0; step < max_tokens; ++step) {
        const Logits l = logits(p, ctx);
        Token tok = 0;
        if (temperature == 0.0) {
            // argmax, lowest token id on ties
            double best = l[0];
            for (int v = 1; v < VOCAB_SIZE; ++v) {
                if (l[static_cast<std::size_t>(v)] > best) {
                    best = l[static_cast<std::size_t>(v)];
                    tok = static_cast<Token>(v);
                }
            }
        } else {
            double mx = l[0];
            for (double v : l) {
                mx = std::max(mx, v);
            }
            std::array<double, VOCAB_SIZE> weight;
            double total = 0.0;
            for (std::size_t v = 0; v < VOCAB_SIZE; ++v) {
                weight[v] = std::exp((l[v] - mx) / temperature);
                total += weight[v];
            }
            const double target = u01(rng()) * total;
            double acc = 0.0;
            tok = VOCAB_SIZE - 1;
            for (std::size_t v = 0; v < VOCAB_SIZE; ++v) {
                acc += weight[v];
                if (target < acc) {
                    tok = static_cast<Token>(v);
                    break;
                }
            }
        }
        if (tok == END_TOKEN) {
            break;
        }
        generated.push_back(tok);
        ctx.push_back(tok);
    }
    return generated;
}

void fit_response_demos(PolicyParams & p, const std::vector<std::string> & demos,
                        int steps, double learning_rate) {
    if (demos.empty() || steps <= 0) {
        return;
    }
    std::vector<TokenSeq> token_demos;
    token_demos.reserve(demos.size());
    for (const auto & d : demos) {
        token_demos.push_back(tokenize_response(d));
    }

    GradientBuffer grad = GradientBuffer::zeros_like(p);
    std::vector<double> m(p.w.size(), 0.0), v(p.w.size(), 0.0);
    const double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;

    for (int step = 1; step <= steps; ++step) {
        grad.clear();
        double inv = 1.0 / static_cast<double>(token_demos.size());
        for (const auto & toks : token_demos) {
            const double scale = inv / static_cast<double>(toks.size());
            for (std::size_t t = 0; t < toks.size(); ++t) {
                std::span<const Token> ctx(toks.data(), t);
                // ascend mean log-likelihood: accumulate the negated gradient
                grad_logprob(p, ctx, toks[t], -scale, grad);
            }
        }
        const double c1 = 1.0 - std::pow(beta1, step);
        const double c2 = 1.0 - std::pow(beta2, step);
        for (std::size_t i = 0; i < p.w.size(); ++i) {
            const double g = grad.g[i];
            if (g == 0.0 && m[i] == 0.0 && v[i] == 0.0) {
                continue;
            }
            m[i] = beta1 * m[i] + (1.0 - beta1) * g;
            v[i] = beta2 * v[i] + (1.0 - beta2) * g * g;
            p.w[i] -= learning_rate * (m[i] / c1) / (std::sqrt(v[i] / c2) + eps);
        }
    }
    for (double w : p.w) {
        if (!std::isfinite(w)) {
            throw Error("non-finite weight after demo fitting");
        }
    }
}

} // namespace turnlab
