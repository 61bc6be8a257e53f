#include "ssekit/sse.hpp"

#include <gmpxx.h>

#include <sstream>

#include "ssekit/exactmat.hpp"

namespace ssekit {

namespace {

std::string cell(const char* name, size_t i, size_t j) {
    std::ostringstream os;
    os << name << "(" << i << "," << j << ")";
    return os.str();
}

void check_nonnegative(Verdict& v, const RatMatrix& m, const char* name, size_t step) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).is_negative())
                v.fail(IssueKind::negativity, step, cell(name, i, j),
                       "negative entry " + m(i, j).to_string());
}

void check_product(Verdict& v, const RatMatrix& lhs, const RatMatrix& rhs,
                   const RatMatrix& expected, const char* label, size_t step) {
    RatMatrix prod = lhs * rhs;
    if (prod.rows() != expected.rows() || prod.cols() != expected.cols()) {
        v.fail(IssueKind::dimension, step, label, "product shape mismatch");
        return;
    }
    for (size_t i = 0; i < prod.rows(); ++i)
        for (size_t j = 0; j < prod.cols(); ++j)
            if (prod(i, j) != expected(i, j))
                v.fail(IssueKind::product_mismatch, step, cell(label, i, j),
                       prod(i, j).to_string() + " != " + expected(i, j).to_string());
}

} // namespace

SseChain SseChain::trivial(RatMatrix base) {
    if (!base.is_square())
        throw domain_error("SseChain: base matrix must be square");
    SseChain c;
    c.base_ = std::move(base);
    return c;
}

SseChain SseChain::from_steps(std::vector<EsseStep> steps) {
    if (steps.empty())
        throw domain_error("SseChain: use trivial() for lag-0 chains");
    SseChain c;
    c.steps_ = std::move(steps);
    return c;
}

size_t SseChain::size() const {
    if (steps_.empty())
        return base_->rows();
    size_t s = 0;
    for (const EsseStep& st : steps_)
        s = std::max(s, st.A.rows());
    return std::max(s, steps_.back().B.rows());
}

Verdict verify_esse(const EsseStep& step) {
    Verdict v;
    v.lag = 1;
    v.size = std::max(step.A.rows(), step.B.rows());

    if (!step.A.is_square())
        v.fail(IssueKind::dimension, 0, "A", "not square");
    if (!step.B.is_square())
        v.fail(IssueKind::dimension, 0, "B", "not square");
    const size_t m = step.A.rows(), n = step.B.rows();
    if (step.U.rows() != m || step.U.cols() != n)
        v.fail(IssueKind::dimension, 0, "U", "expected " + std::to_string(m) + "x" +
                                                std::to_string(n));
    if (step.V.rows() != n || step.V.cols() != m)
        v.fail(IssueKind::dimension, 0, "V", "expected " + std::to_string(n) + "x" +
                                                std::to_string(m));

    check_nonnegative(v, step.U, "U", 0);
    check_nonnegative(v, step.V, "V", 0);

    bool shapes_ok = step.A.is_square() && step.B.is_square() &&
                     step.U.rows() == m && step.U.cols() == n &&
                     step.V.rows() == n && step.V.cols() == m;
    if (shapes_ok) {
        check_product(v, step.U, step.V, step.A, "UV", 0);
        check_product(v, step.V, step.U, step.B, "VU", 0);
    }
    return v;
}

Verdict verify_chain(const SseChain& chain) {
    Verdict v;
    v.lag = chain.lag();
    v.size = chain.size();
    if (chain.is_trivial())
        return v;

    const auto& steps = chain.steps();
    for (size_t s = 0; s < steps.size(); ++s) {
        Verdict sub = verify_esse(steps[s]);
        for (Issue& issue : sub.issues) {
            issue.step = s;
            v.pass = false;
            v.issues.push_back(std::move(issue));
        }
        if (s + 1 < steps.size() && steps[s].B != steps[s + 1].A)
            v.fail(IssueKind::endpoint_mismatch, s + 1, "A",
                   "step " + std::to_string(s) + " ends in a different matrix");
    }

    // Padded charpoly identity per step. Adjacent steps share an endpoint
    // when coherent, so the previous B-polynomial is reused for the next A.
    v.step_spectrum_ok.assign(steps.size(), 1);
    std::optional<RatPoly> carried;
    for (size_t s = 0; s < steps.size(); ++s) {
        if (!steps[s].A.is_square() || !steps[s].B.is_square()) {
            v.step_spectrum_ok[s] = 0;
            continue;
        }
        RatPoly pa = carried ? std::move(*carried) : charpoly(steps[s].A);
        RatPoly pb = charpoly(steps[s].B);
        ++v.spectrum_checks;
        if (pa.shift_up(steps[s].B.rows()) != pb.shift_up(steps[s].A.rows())) {
            v.step_spectrum_ok[s] = 0;
            v.fail(IssueKind::spectrum_mismatch, s, "charpoly",
                   "t^" + std::to_string(steps[s].B.rows()) + "*p_A != t^" +
                       std::to_string(steps[s].A.rows()) + "*p_B");
        }
        if (s + 1 < steps.size() && steps[s].B == steps[s + 1].A)
            carried = std::move(pb);
        else
            carried.reset();
    }
    return v;
}

namespace {

// Numerator matrix over one common denominator: products of many small
// rational matrices stay in integer arithmetic and are canonicalized once.
struct ScaledMatrix {
    size_t rows, cols;
    std::vector<mpz_class> num;
    mpz_class den;

    static ScaledMatrix from(const RatMatrix& m) {
        ScaledMatrix s{m.rows(), m.cols(), {}, 1};
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j)
                mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(),
                        m(i, j).denominator().get_mpz_t());
        s.num.resize(m.rows() * m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) {
                const Rat& e = m(i, j);
                s.num[i * m.cols() + j] = e.numerator() * (s.den / e.denominator());
            }
        return s;
    }

    ScaledMatrix mul(const ScaledMatrix& o) const {
        ScaledMatrix out{rows, o.cols, std::vector<mpz_class>(rows * o.cols), den * o.den};
        for (size_t i = 0; i < rows; ++i)
            for (size_t k = 0; k < cols; ++k) {
                const mpz_class& a = num[i * cols + k];
                if (a == 0)
                    continue;
                for (size_t j = 0; j < o.cols; ++j) {
                    const mpz_class& b = o.num[k * o.cols + j];
                    if (b != 0)
                        mpz_addmul(out.num[i * o.cols + j].get_mpz_t(), a.get_mpz_t(),
                                   b.get_mpz_t());
                }
            }
        out.reduce();
        return out;
    }

    void reduce() {
        mpz_class g = den;
        for (const mpz_class& e : num) {
            if (g == 1)
                return;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        }
        if (g > 1) {
            den /= g;
            for (mpz_class& e : num)
                e /= g;
        }
    }

    RatMatrix to_rat() const {
        RatMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                mpq_class q(num[i * cols + j]);
                q /= mpq_class(den);
                m(i, j) = Rat(q);
            }
        return m;
    }
};

} // namespace

SeCertificate compose_to_se(const SseChain& chain) {
    Verdict verdict = verify_chain(chain);
    if (!verdict.pass)
        throw chain_error("compose_to_se: chain fails verification", std::move(verdict));

    const size_t lag = chain.lag();
    if (lag == 0) {
        const RatMatrix& a = chain.first();
        RatMatrix eye = RatMatrix::identity(a.rows());
        return {a, a, eye, eye, 0};
    }

    const auto& steps = chain.steps();
    ScaledMatrix u = ScaledMatrix::from(steps[0].U);
    for (size_t s = 1; s < steps.size(); ++s)
        u = u.mul(ScaledMatrix::from(steps[s].U));
    RatMatrix big_u = u.to_rat();

    RatMatrix big_v = steps.back().V;
    for (size_t s = steps.size() - 1; s-- > 0;)
        big_v = big_v * steps[s].V;

    const RatMatrix& a = chain.first();
    const RatMatrix& b = chain.last();
    if (matrix_power(a, lag) != big_u * big_v)
        throw structural_error("compose_to_se: A^lag != UV");
    if (matrix_power(b, lag) != big_v * big_u)
        throw structural_error("compose_to_se: B^lag != VU");
    if (a * big_u != big_u * b)
        throw structural_error("compose_to_se: AU != UB");
    if (big_v * a != b * big_v)
        throw structural_error("compose_to_se: VA != BV");
    return {a, b, std::move(big_u), std::move(big_v), lag};
}

SseChain transpose_chain(const SseChain& chain) {
    Verdict verdict = verify_chain(chain);
    if (!verdict.pass)
        throw chain_error("transpose_chain: chain fails verification", std::move(verdict));
    if (chain.is_trivial())
        return SseChain::trivial(chain.first().transpose());
    std::vector<EsseStep> out;
    out.reserve(chain.lag());
    for (const EsseStep& s : chain.steps())
        out.push_back({s.A.transpose(), s.B.transpose(), s.V.transpose(), s.U.transpose()});
    return SseChain::from_steps(std::move(out));
}

EsseStep column_split(const RatMatrix& a, size_t col, const Rat& theta) {
    if (!a.is_square())
        throw dimension_error("column_split: matrix must be square");
    if (!a.is_nonnegative())
        throw domain_error("column_split: matrix must be nonnegative");
    if (!(theta > Rat(0) && theta < Rat(1)))
        throw domain_error("column_split: theta must lie strictly between 0 and 1");
    const size_t n = a.rows();
    if (col >= n)
        throw std::out_of_range("column_split: column index out of range");

    RatMatrix x(n, n + 1);
    const Rat rest = Rat(1) - theta;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= n; ++j) {
            if (j < col)
                x(i, j) = a(i, j);
            else if (j == col)
                x(i, j) = theta * a(i, col);
            else if (j == col + 1)
                x(i, j) = rest * a(i, col);
            else
                x(i, j) = a(i, j - 1);
        }

    // identity with row `col` duplicated
    RatMatrix v(n + 1, n);
    for (size_t r = 0; r <= n; ++r)
        v(r, r <= col ? r : r - 1) = Rat(1);

    RatMatrix c = v * x;
    if (x * v != a)
        throw structural_error("column_split: XV does not reproduce the input");
    return {a, std::move(c), std::move(x), std::move(v)};
}

EsseStep conjugate_esse_to_stochastic(const RatMatrix& a, const RatMatrix& b,
                                      const RatMatrix& x, const RatMatrix& y,
                                      const EigenCertificate& cert_a,
                                      const EigenCertificate& cert_b) {
    Verdict verdict = verify_esse({a, b, x, y});
    if (!verdict.pass)
        throw domain_error("conjugate_esse_to_stochastic: (A,B,X,Y) is not a valid ESSE");
    if (!is_irreducible(a) || !is_irreducible(b))
        throw domain_error("conjugate_esse_to_stochastic: matrices must be irreducible");
    validate_certificate(a, cert_a);
    validate_certificate(b, cert_b);
    if (cert_a.lambda != cert_b.lambda)
        throw certificate_error("conjugate_esse_to_stochastic: Perron eigenvalues differ (" +
                                cert_a.lambda.to_string() + " vs " +
                                cert_b.lambda.to_string() + ")");

    const size_t m = a.rows(), n = b.rows();
    RatMatrix u(m, n), v(n, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            u(i, j) = x(i, j) * cert_b.right_vector[j] /
                      (cert_a.lambda * cert_a.right_vector[i]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            v(i, j) = y(i, j) * cert_a.right_vector[j] / cert_b.right_vector[i];

    EsseStep step{stochasticize(a, cert_a), stochasticize(b, cert_b), std::move(u),
                  std::move(v)};
    if (!verify_esse(step).pass)
        throw structural_error("conjugate_esse_to_stochastic: conjugated step fails checks");
    return step;
}

RowStochasticFactors normalize_esse_to_row_stochastic(const RatMatrix& u,
                                                      const RatMatrix& v,
                                                      const RatMatrix& sa,
                                                      const RatMatrix& sb) {
    Verdict verdict = verify_esse({sa, sb, u, v});
    if (!verdict.pass)
        throw domain_error("normalize_esse_to_row_stochastic: (SA,SB,U,V) is not a valid ESSE");
    if (!classify(sa).stochastic || !classify(sb).stochastic)
        throw domain_error("normalize_esse_to_row_stochastic: endpoints must be stochastic");

    auto constant_row_sum = [](const RatMatrix& m, const char* name) {
        RatVector sums = m.row_sums();
        for (size_t i = 1; i < sums.size(); ++i)
            if (sums[i] != sums[0])
                throw structural_error(std::string("normalize_esse_to_row_stochastic: row sums of ") +
                                       name + " are not constant");
        if (!sums[0].is_positive())
            throw structural_error(std::string("normalize_esse_to_row_stochastic: row sums of ") +
                                   name + " are not positive");
        return sums[0];
    };
    Rat alpha = constant_row_sum(u, "U");
    Rat beta = constant_row_sum(v, "V");
    if (alpha * beta != Rat(1))
        throw structural_error("normalize_esse_to_row_stochastic: alpha*beta != 1");

    RatMatrix r = u * alpha.reciprocal();
    RatMatrix s = v * beta.reciprocal();
    if (r * s != sa || s * r != sb)
        throw structural_error("normalize_esse_to_row_stochastic: rescaled products disagree");
    return {std::move(r), std::move(s), std::move(alpha), std::move(beta)};
}

} // namespace ssekit
