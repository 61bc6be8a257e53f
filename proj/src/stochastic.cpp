#include "ssekit/stochastic.hpp"

namespace ssekit {

namespace {

bool rows_sum_to_one(const RatMatrix& a) {
    for (const Rat& s : a.row_sums())
        if (!s.is_one())
            return false;
    return true;
}

void require_positive_stochastic(const RatMatrix& p, const char* who) {
    if (!p.is_square())
        throw domain_error(std::string(who) + ": matrix must be square");
    if (!p.is_positive())
        throw domain_error(std::string(who) + ": matrix must be positive");
    if (!rows_sum_to_one(p))
        throw domain_error(std::string(who) + ": row sums must all equal 1");
}

} // namespace

ProbVector::ProbVector(RatVector entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw domain_error("ProbVector: empty vector");
    Rat sum;
    for (const Rat& e : entries_) {
        if (!e.is_positive())
            throw domain_error("ProbVector: entries must be positive");
        sum += e;
    }
    if (!sum.is_one())
        throw domain_error("ProbVector: entries must sum to 1, got " + sum.to_string());
}

ProbVector ProbVector::uniform(size_t n) {
    if (n == 0)
        throw domain_error("ProbVector: empty vector");
    return ProbVector(RatVector(n, Rat(1, static_cast<long long>(n))));
}

void validate_certificate(const RatMatrix& a, const EigenCertificate& cert) {
    if (!a.is_square() || cert.right_vector.size() != a.rows())
        throw certificate_error("eigen certificate: dimension mismatch");
    if (!cert.lambda.is_positive())
        throw certificate_error("eigen certificate: lambda must be positive");
    for (const Rat& v : cert.right_vector)
        if (!v.is_positive())
            throw certificate_error("eigen certificate: eigenvector must be positive");
    RatVector av = a * cert.right_vector;
    for (size_t i = 0; i < av.size(); ++i)
        if (av[i] != cert.lambda * cert.right_vector[i])
            throw certificate_error("eigen certificate: A*v != lambda*v at row " +
                                    std::to_string(i));
}

StochasticProfile classify(const RatMatrix& a) {
    StochasticProfile out;
    out.nonnegative = a.is_nonnegative();
    out.positive = a.is_positive();
    out.row_sums = a.row_sums();
    out.col_sums = a.col_sums();
    bool rows_one = true, cols_one = true;
    for (const Rat& s : out.row_sums)
        rows_one = rows_one && s.is_one();
    for (const Rat& s : out.col_sums)
        cols_one = cols_one && s.is_one();
    out.stochastic = a.is_square() && out.nonnegative && rows_one;
    out.doubly_stochastic = out.stochastic && cols_one;
    if (a.is_square() && out.nonnegative) {
        out.irreducible = is_irreducible(a);
        out.primitive = is_primitive(a);
    }
    return out;
}

ProbVector left_perron(const RatMatrix& p) {
    StochasticProfile profile = classify(p);
    if (!profile.stochastic)
        throw domain_error("left_perron: matrix is not stochastic");
    if (!profile.irreducible)
        throw ambiguity_error("left_perron: matrix is reducible, no unique Perron vector");

    // Unknowns l_i; equations sum_i l_i (p(i,j) - d_ij) = 0 for j < n-1,
    // plus sum_i l_i = 1. The dropped column is dependent on the others.
    const size_t n = p.rows();
    RatMatrix sys(n, n);
    RatVector rhs(n);
    for (size_t j = 0; j + 1 < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            sys(j, i) = p(i, j);
            if (i == j)
                sys(j, i) -= Rat(1);
        }
    for (size_t i = 0; i < n; ++i)
        sys(n - 1, i) = Rat(1);
    rhs[n - 1] = Rat(1);
    return ProbVector(solve(sys, rhs));
}

RatMatrix rank_one(const ProbVector& v) {
    const size_t n = v.size();
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m(i, j) = v[j];
    return m;
}

InvolutionConjugation involution_conjugate(const RatMatrix& p, const ProbVector& v) {
    require_positive_stochastic(p, "involution_conjugate");
    if (v.size() != p.rows())
        throw domain_error("involution_conjugate: vector length mismatch");
    ProbVector l = left_perron(p);
    RatMatrix x = RatMatrix::identity(p.rows()) - rank_one(l) - rank_one(v);
    if (x * x != RatMatrix::identity(p.rows()))
        throw structural_error("involution_conjugate: witness is not an involution");
    return {x, x * p * x};
}

DsShift ds_shift(const RatMatrix& p) {
    require_positive_stochastic(p, "ds_shift");
    const size_t n = p.rows();
    RatMatrix jn = rank_one(ProbVector::uniform(n));
    RatMatrix q = p + jn * (RatMatrix::identity(n) - p);
    return {q, q.is_positive()};
}

ConditionReport same_size_conditions(const RatMatrix& p) {
    require_positive_stochastic(p, "same_size_conditions");
    const size_t n = p.rows();
    const Rat nn(static_cast<long long>(n));
    ConditionReport rep;

    RatVector colsum = p.col_sums();
    rep.remark_col_condition = true;
    for (size_t j = 0; j < n; ++j) {
        size_t arg = 0;
        Rat mn = p(0, j);
        for (size_t i = 1; i < n; ++i)
            if (p(i, j) < mn) {
                mn = p(i, j);
                arg = i;
            }
        Rat bound = Rat(1) + nn * mn;
        if (rep.remark_col_condition && !(colsum[j] < bound)) {
            rep.remark_col_condition = false;
            rep.remark_witness = ConditionWitness{arg, j, colsum[j], bound};
        }
    }

    rep.cor_spread_per_column = true;
    if (n >= 2) {
        Rat limit = Rat(1, static_cast<long long>(n - 1));
        for (size_t j = 0; j < n && rep.cor_spread_per_column; ++j) {
            Rat mn = p(0, j), mx = p(0, j);
            size_t argmax = 0;
            for (size_t i = 1; i < n; ++i) {
                if (p(i, j) < mn)
                    mn = p(i, j);
                if (p(i, j) > mx) {
                    mx = p(i, j);
                    argmax = i;
                }
            }
            if (!(mx - mn < limit)) {
                rep.cor_spread_per_column = false;
                rep.spread_witness = ConditionWitness{argmax, j, mx - mn, limit};
            }
        }
    }

    Rat global_min = p(0, 0), global_max = p(0, 0);
    size_t min_i = 0, min_j = 0, max_i = 0, max_j = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (p(i, j) < global_min) {
                global_min = p(i, j);
                min_i = i;
                min_j = j;
            }
            if (p(i, j) > global_max) {
                global_max = p(i, j);
                max_i = i;
                max_j = j;
            }
        }
    Rat inv_n = nn.reciprocal();
    rep.cor_global_spread = global_max - global_min < inv_n;
    if (!rep.cor_global_spread)
        rep.global_witness = ConditionWitness{max_i, max_j, global_max - global_min, inv_n};

    Rat min_bound = inv_n - inv_n * inv_n;
    rep.cor_min_entry = global_min > min_bound;
    if (!rep.cor_min_entry)
        rep.min_entry_witness = ConditionWitness{min_i, min_j, min_bound, global_min};

    ProbVector l = left_perron(p);
    rep.weighted_transpose = true;
    for (size_t i = 0; i < n && rep.weighted_transpose; ++i) {
        Rat weighted_sum;
        for (size_t k = 0; k < n; ++k)
            weighted_sum += l[i] / l[k] * p(i, k);
        for (size_t j = 0; j < n; ++j) {
            Rat bound = Rat(1) + nn * (l[i] / l[j]) * p(i, j);
            if (!(weighted_sum < bound)) {
                rep.weighted_transpose = false;
                rep.weighted_witness = ConditionWitness{i, j, weighted_sum, bound};
                break;
            }
        }
    }

    rep.same_size_available = rep.remark_col_condition || rep.weighted_transpose;
    return rep;
}

RatMatrix stochasticize(const RatMatrix& a, const EigenCertificate& cert) {
    if (!a.is_square())
        throw domain_error("stochasticize: matrix must be square");
    if (!a.is_nonnegative())
        throw domain_error("stochasticize: matrix must be nonnegative");
    if (!is_irreducible(a))
        throw domain_error("stochasticize: matrix must be irreducible");
    validate_certificate(a, cert);
    const size_t n = a.rows();
    RatMatrix s(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            s(i, j) = a(i, j) * cert.right_vector[j] / (cert.lambda * cert.right_vector[i]);
    return s;
}

bool segment_positivity(const RatMatrix& p, const RatMatrix& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols())
        throw dimension_error("segment_positivity: shape mismatch");
    return p.is_positive() && q.is_positive();
}

} // namespace ssekit
