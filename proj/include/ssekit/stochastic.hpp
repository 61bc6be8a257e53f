#pragma once

#include <optional>
#include <vector>

#include "ssekit/exactmat.hpp"
#include "ssekit/matrix.hpp"

namespace ssekit {

// Positive row vector with entries summing to exactly 1.
class ProbVector {
public:
    explicit ProbVector(RatVector entries);

    static ProbVector uniform(size_t n);

    size_t size() const { return entries_.size(); }
    const Rat& operator[](size_t i) const { return entries_[i]; }
    const RatVector& entries() const { return entries_; }

    bool operator==(const ProbVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const ProbVector& o) const { return !(*this == o); }

private:
    RatVector entries_;
};

struct StochasticProfile {
    bool nonnegative = false;
    bool positive = false;
    bool stochastic = false;
    bool doubly_stochastic = false;
    bool irreducible = false;
    bool primitive = false;
    RatVector row_sums;
    RatVector col_sums;
};

// Exact (lambda, right eigenvector) pair; supplied by the caller whenever the
// matrix is not stochastic, since Perron data of general matrices is
// typically irrational and this library never approximates.
struct EigenCertificate {
    Rat lambda;
    RatVector right_vector;
};

// Throws certificate_error unless a * v = lambda * v exactly, v > 0, lambda > 0.
void validate_certificate(const RatMatrix& a, const EigenCertificate& cert);

StochasticProfile classify(const RatMatrix& a);

// The unique l with l P = l, sum 1, found by exact linear solve. Requires a
// stochastic irreducible P.
ProbVector left_perron(const RatMatrix& p);

// J_v: the square matrix with every row equal to v. Stochastic, rank one.
RatMatrix rank_one(const ProbVector& v);

struct InvolutionConjugation {
    RatMatrix witness;    // X = I - J_l - J_v, an involution
    RatMatrix conjugated; // X P X^-1 = P + J_v(I - P)
};

InvolutionConjugation involution_conjugate(const RatMatrix& p, const ProbVector& v);

struct DsShift {
    RatMatrix matrix; // P + J_n(I - P); row and column sums are all 1
    bool positive;    // not guaranteed; reported so callers can diagnose
};

DsShift ds_shift(const RatMatrix& p);

struct ConditionWitness {
    size_t i = 0;
    size_t j = 0;
    Rat lhs; // offending value that was required to stay below rhs
    Rat rhs;
};

// One flag per sufficient condition for the same-size route, evaluated
// exactly and unconditionally; a witness instance accompanies each failure.
struct ConditionReport {
    bool remark_col_condition = false;   // col sum < 1 + n * column minimum
    bool cor_spread_per_column = false;  // per-column spread < 1/(n-1)
    bool cor_global_spread = false;      // global spread < 1/n
    bool cor_min_entry = false;          // min entry > 1/n - 1/n^2
    bool weighted_transpose = false;     // Perron-weighted transpose variant
    bool same_size_available = false;    // remark_col_condition or weighted_transpose
    std::optional<ConditionWitness> remark_witness;
    std::optional<ConditionWitness> spread_witness;
    std::optional<ConditionWitness> global_witness;
    std::optional<ConditionWitness> min_entry_witness;
    std::optional<ConditionWitness> weighted_witness;
};

ConditionReport same_size_conditions(const RatMatrix& p);

// (1/lambda) D^-1 A D with D = diag(cert.right_vector).
RatMatrix stochasticize(const RatMatrix& a, const EigenCertificate& cert);

// Positivity of (1-t)P + tQ for every t in [0,1]; affine entries make the
// endpoints decisive.
bool segment_positivity(const RatMatrix& p, const RatMatrix& q);

} // namespace ssekit
