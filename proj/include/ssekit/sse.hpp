#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssekit/matrix.hpp"
#include "ssekit/poly.hpp"
#include "ssekit/stochastic.hpp"

namespace ssekit {

// One elementary strong shift equivalence: A = U V and B = V U with U, V
// nonnegative. Verification is a separate, total operation so that steps
// loaded from untrusted files can be represented as-is.
struct EsseStep {
    RatMatrix A, B, U, V;
};

enum class IssueKind {
    dimension,
    negativity,
    product_mismatch,
    endpoint_mismatch,
    spectrum_mismatch,
    metadata_mismatch,
};

struct Issue {
    IssueKind kind;
    size_t step;          // step index within the chain; 0 for lone steps
    std::string location; // e.g. "U(2,3)" or "A"
    std::string detail;
};

struct Verdict {
    bool pass = true;
    std::vector<Issue> issues;
    size_t lag = 0;
    size_t size = 0;
    // Per-step status of the padded charpoly identity, filled by verify_chain.
    std::vector<char> step_spectrum_ok;
    size_t spectrum_checks = 0;

    void fail(IssueKind kind, size_t step, std::string location, std::string detail) {
        pass = false;
        issues.push_back({kind, step, std::move(location), std::move(detail)});
    }
};

class chain_error : public error {
public:
    chain_error(const std::string& msg, Verdict verdict)
        : error(msg), verdict(std::move(verdict)) {}
    Verdict verdict;
};

// A composable list of elementary steps, or a bare matrix when lag is 0.
// Coherence (matching endpoints, valid products) is checked by verify_chain,
// not enforced on construction.
class SseChain {
public:
    static SseChain trivial(RatMatrix base);
    static SseChain from_steps(std::vector<EsseStep> steps);

    size_t lag() const { return steps_.size(); }
    // Largest matrix dimension appearing along the chain.
    size_t size() const;
    bool is_trivial() const { return steps_.empty(); }
    const std::vector<EsseStep>& steps() const { return steps_; }
    std::vector<EsseStep> into_steps() && { return std::move(steps_); }
    const RatMatrix& first() const { return steps_.empty() ? *base_ : steps_.front().A; }
    const RatMatrix& last() const { return steps_.empty() ? *base_ : steps_.back().B; }

private:
    SseChain() = default;
    std::vector<EsseStep> steps_;
    std::optional<RatMatrix> base_;
};

// Shift equivalence data: A^lag = U V, B^lag = V U, A U = U B, V A = B V.
struct SeCertificate {
    RatMatrix A, B, U, V;
    size_t lag;
};

Verdict verify_esse(const EsseStep& step);

// Every step verified, endpoints chained exactly, and per step the padded
// identity t^nB * p_A(t) = t^nA * p_B(t); an independent cross-check that a
// step passing the product checks can only fail through a kernel bug.
Verdict verify_chain(const SseChain& chain);

// (U, V) = (U_1 ... U_l, V_l ... V_1); all four equalities checked exactly
// before returning. Lag 0 composes to the identity certificate.
SeCertificate compose_to_se(const SseChain& chain);

// (A, B, U, V) -> (A^T, B^T, V^T, U^T) stepwise.
SseChain transpose_chain(const SseChain& chain);

// The elementary column splitting: column `col` of a splits into adjacent
// columns weighted theta and 1-theta, and the corresponding row duplicates.
EsseStep column_split(const RatMatrix& a, size_t col, const Rat& theta);

// Carry an ESSE of irreducible matrices to an ESSE of their
// stochasticizations via the diagonal eigenvector scalings.
EsseStep conjugate_esse_to_stochastic(const RatMatrix& a, const RatMatrix& b,
                                      const RatMatrix& x, const RatMatrix& y,
                                      const EigenCertificate& cert_a,
                                      const EigenCertificate& cert_b);

struct RowStochasticFactors {
    RatMatrix R, S;
    Rat alpha, beta;
};

// For an ESSE of stochastic matrices the row sums of U and V are forced
// constant; rescaling by those constants yields generalized row stochastic
// factors with alpha * beta = 1.
RowStochasticFactors normalize_esse_to_row_stochastic(const RatMatrix& u,
                                                      const RatMatrix& v,
                                                      const RatMatrix& sa,
                                                      const RatMatrix& sb);

} // namespace ssekit
