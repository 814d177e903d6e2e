#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "codesum/tokens.hpp"

namespace codesum::metrics {

// Which precisions get add-one smoothing. OrangeAdd1 (the default used by
// the CodeXGLUE evaluator lineage) smooths orders 2-4 only.
enum class Smoothing { OrangeAdd1, AddOneAll, None };

Smoothing smoothing_from_string(const std::string& name);
std::string to_string(Smoothing s);

struct BleuBreakdown {
    double p1 = 0, p2 = 0, p3 = 0, p4 = 0;  // smoothed n-gram precisions
    double bp = 1.0;                        // brevity penalty, in (0, 1]
    double score = 0.0;                     // 0..100
    int cand_len = 0;
    int ref_len = 0;
};

// Sentence-level smoothed BLEU-4 on pre-tokenized sequences:
//   m_n = clipped n-gram matches, h_n = candidate n-gram count,
//   p1 = m1/h1 (0 when h1 = 0), pn = (m_n + 1)/(h_n + 1) for n >= 2,
//   bp = 1 when c > r else exp(1 - r/c), score = 100 * bp * exp(mean ln pn),
//   score = 0 when p1 = 0.
// Throws EmptyReference.
BleuBreakdown sentence_bleu4(const Tokens& candidate, const Tokens& reference,
                             Smoothing smoothing = Smoothing::OrangeAdd1);

// Arithmetic mean of sentence scores (scores are per-sample in all reports,
// so paired tests line up). Throws EmptyCorpus.
double corpus_bleu4(const std::vector<std::pair<Tokens, Tokens>>& pairs,
                    Smoothing smoothing = Smoothing::OrangeAdd1);

// Zero-difference handling for the signed-rank test. Drop is the classic
// treatment; Pratt ranks zeros first and then discards them.
enum class ZeroPolicy { Drop, Pratt };

struct CompareOptions {
    ZeroPolicy zeros = ZeroPolicy::Drop;
    std::size_t exact_max_n = 25;  // exact null distribution up to here
};

struct PairedComparison {
    std::vector<double> per_sample_diffs;  // a[i] - b[i]
    double mean_diff = 0.0;                // mean(a) - mean(b)
    double wilcoxon_stat = 0.0;            // W+: rank sum of positive diffs
    double p_value = 1.0;                  // two-sided
    bool noticeable = false;               // |mean_diff| >= threshold
    bool all_zero = false;                 // every diff zero: p reported as 1
    std::size_t n_nonzero = 0;
    std::string method;                    // "exact" or "normal"
};

// Paired Wilcoxon signed-rank comparison of two per-sample score columns.
// Ties share average ranks; the exact distribution is enumerated for up to
// exact_max_n nonzero diffs and the tie-corrected normal approximation is
// used beyond. Throws LengthMismatch / TooFewPairs.
PairedComparison compare_models(const std::vector<double>& scores_a,
                                const std::vector<double>& scores_b,
                                double threshold,
                                const CompareOptions& opts = {});

// Internals of the test, exposed so the exact and approximate routes can be
// compared directly.
struct SignedRankStat {
    double w_plus = 0.0;            // rank sum over positive diffs
    std::vector<double> abs_ranks;  // ranks of all nonzero diffs
};

SignedRankStat signed_rank_stat(const std::vector<double>& diffs, ZeroPolicy zeros);

// Exact two-sided p over all 2^n sign assignments (dynamic program on
// doubled ranks, so average ranks stay integral).
double wilcoxon_exact_p(const SignedRankStat& stat);

// Normal approximation with continuity correction; the variance is
// sum(r^2)/4, which carries the tie correction automatically.
double wilcoxon_normal_p(const SignedRankStat& stat);

}  // namespace codesum::metrics
