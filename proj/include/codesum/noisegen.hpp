#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "codesum/ingest.hpp"
#include "codesum/rng.hpp"
#include "codesum/tokens.hpp"

namespace codesum::noisegen {

inline constexpr std::string_view kMaskToken = "<mask>";

enum class NoiseMode { Permutation, Rotation, Deletion, Masking, Infilling };
inline constexpr int kNoiseModeCount = 5;

std::string to_string(NoiseMode mode);
NoiseMode noise_mode_from_string(const std::string& name);

struct NoisedExample {
    Tokens original;
    Tokens corrupted;
    NoiseMode mode = NoiseMode::Permutation;
    std::uint64_t seed = 0;  // per-example seed; replaying it reproduces corrupted
};

// Corruptions per sequence: max(1, round-half-up(p * n)), so every example
// carries at least one corruption.
std::size_t corruption_count(std::size_t n, double p);

// Uniform random permutation of the tokens.
Tokens permute(Tokens tokens, Rng& rng);  // throws EmptyInput

// Rotate a uniformly chosen token to the front: tokens[k:] ++ tokens[:k].
Tokens rotate(Tokens tokens, Rng& rng);  // throws EmptyInput

// Drop corruption_count(n, p) positions, order preserved.
Tokens drop_tokens(const Tokens& tokens, double p, Rng& rng);  // throws TooShort

// Replace corruption_count(n, p) distinct positions with <mask>.
Tokens mask_tokens(const Tokens& tokens, double p, Rng& rng);  // throws EmptyInput

// Replace one contiguous span with a single <mask>. Span length is drawn
// from Poisson(lambda) clipped to [0, n]; a zero-length draw inserts the
// mask at a uniform position. Output length is n - L + 1.
Tokens infill(const Tokens& tokens, double lambda, Rng& rng);  // throws EmptyInput

Tokens apply_mode(NoiseMode mode, const Tokens& tokens, const PipelineConfig& cfg,
                  Rng& rng);

// cfg.noise_modes_per_sample distinct modes chosen uniformly without
// replacement; one NoisedExample per mode. Deterministic per sample_seed
// (derive it from the root seed and the sample id).
std::vector<NoisedExample> augment(const Tokens& doc, const PipelineConfig& cfg,
                                   std::uint64_t sample_seed);  // throws TooShort

}  // namespace codesum::noisegen
