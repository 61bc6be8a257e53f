#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "ssekit/sse.hpp"
#include "ssekit/stochastic.hpp"

namespace ssekit {

// Integer presentation of a rational probability vector: l = weights / total
// with total the lcm of the entry denominators, so the weights are positive
// integers summing to total.
struct PerronWeights {
    std::vector<mpz_class> weights;
    mpz_class total;
};

PerronWeights perron_weights(const ProbVector& l);

struct Redenomination {
    EsseStep step;    // lag-1 ESSE from the input to `result`
    RatMatrix result; // conjugate with left Perron vector (r, 1 - sum r)
};

// Conjugates a positive stochastic P so that its left Perron vector becomes
// (r_1, ..., r_{n-1}, 1 - sum r). Requires 0 < r_j <= l_j and the scaled
// matrix staying positive; the conjugation is then a genuine ESSE step.
Redenomination redenominate(const RatMatrix& p, const RatVector& r);

// Scans denominators q = max_den, max_den-1, ... for r_j = floor(l_j q)/q
// giving a feasible redenomination that strictly shrinks the target size M.
std::optional<RatVector> suggest_redenomination(const RatMatrix& p,
                                                unsigned long max_den);

struct SplitResult {
    SseChain chain;   // M - n column splittings; trivial when M = n
    RatMatrix doubly; // M x M, positive, doubly stochastic
};

inline constexpr size_t kDefaultSizeCap = 4096;

// Iterated column splitting at the leftmost column of Perron weight m > 1,
// with splitting ratio 1/m. Terminates in exactly M - n steps.
SplitResult split_to_doubly(const RatMatrix& p, size_t size_cap = kDefaultSizeCap);

enum class PipelineRoute {
    same_size_path,
    splitting,
};

struct MakeDoublyOptions {
    bool prefer_same_size = true;
    std::optional<unsigned long> max_den; // enables the redenomination step
    size_t size_cap = kDefaultSizeCap;
};

struct PipelineReport {
    RatMatrix input;
    PipelineRoute route;
    SseChain chain;
    RatMatrix output;
    std::optional<RatMatrix> similarity_witness; // same-size route only
    mpz_class target_size;
    std::string notes;
};

PipelineReport make_doubly(const RatMatrix& p, const MakeDoublyOptions& options = {});

} // namespace ssekit
