#include "stacksort/transforms.hpp"

#include <stdexcept>

#include "stacksort/descent_counting.hpp"
#include "stacksort/special_functions.hpp"

namespace stacksort {

MultiplierSequence::MultiplierSequence(std::vector<BigRational> gamma) : gamma_(std::move(gamma)) {
    if (gamma_.empty()) throw std::invalid_argument("multiplier sequence must be nonempty");
}

MultiplierSequence MultiplierSequence::ones(unsigned order) {
    return MultiplierSequence(std::vector<BigRational>(order + 1, BigRational(1)));
}

MultiplierSequence MultiplierSequence::truncated(unsigned order) const {
    if (order > this->order()) throw std::invalid_argument("cannot truncate to a larger order");
    return MultiplierSequence({gamma_.begin(), gamma_.begin() + order + 1});
}

RationalPoly apply_sequence(const MultiplierSequence& g, const RationalPoly& f) {
    if (f.degree() > static_cast<int>(g.order()))
        throw std::invalid_argument("polynomial degree " + std::to_string(f.degree()) +
                                    " exceeds sequence order " + std::to_string(g.order()));
    std::vector<BigRational> c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= g[i];
    return RationalPoly(std::move(c));
}

NSequenceVerdict is_n_sequence(const MultiplierSequence& g, unsigned n) {
    if (g.order() < n) throw std::invalid_argument("sequence order below n");
    NSequenceVerdict v;
    v.image = apply_sequence(g, one_plus_x_pow(n));
    if (v.image.is_zero()) return v;  // the zero polynomial has no certificate
    v.certificate = certify(v.image);
    v.is_n_sequence = v.certificate.is_real_rooted && roots_same_sign(v.certificate);
    return v;
}

MultiplierSequence lemma2_sequence(unsigned n, const BigRational& r) {
    if (r.sign() < 0) throw std::invalid_argument("lemma2_sequence needs r >= 0");
    const BigRational top = -BigRational(n) - r;
    std::vector<BigRational> gamma;
    for (unsigned k = 0; k <= n; ++k) gamma.push_back(binomial(top, k));
    return MultiplierSequence(std::move(gamma));
}

MultiplierSequence reciprocal_binomial_sequence(unsigned n) {
    std::vector<BigRational> gamma;
    const long nn = n;
    for (long k = 0; k <= nn; ++k) gamma.emplace_back(binomial(2 * nn - k - 1, nn - 1));
    return MultiplierSequence(std::move(gamma));
}

IdentityCheck verify_lemma2_identity(unsigned n, const BigRational& r) {
    if (r.sign() <= 0) throw std::invalid_argument("verify_lemma2_identity needs r > 0");
    const long nn = n;
    IdentityCheck check;
    check.sides.push_back(apply_sequence(lemma2_sequence(n, r), one_plus_x_pow(n)));
    check.sides.push_back(hypergeometric_poly({BigRational(-nn), BigRational(nn) + r, 1}));
    check.sides.push_back(jacobi_poly({0, r - BigRational(1), n}).compose_linear(-2, 1));
    check.holds = check.sides[0] == check.sides[1] && check.sides[1] == check.sides[2];
    return check;
}

IdentityCheck verify_post_lemma_identity(unsigned n) {
    const long nn = n;
    std::vector<BigRational> lhs;
    std::vector<BigRational> rhs(n + 1);
    const BigRational sign = (n % 2 == 0) ? 1 : -1;
    for (long k = 0; k <= nn; ++k) {
        lhs.emplace_back(binomial(2 * nn - k - 1, nn - 1) * binomial(nn, k));
        // (-1)^n C(-n,k) C(n,k) (-x)^(n-k)
        const BigRational flip = ((nn - k) % 2 == 0) ? 1 : -1;
        rhs[static_cast<std::size_t>(nn - k)] =
            sign * binomial(BigRational(-nn), static_cast<unsigned long>(k)) *
            BigRational(binomial(nn, k)) * flip;
    }
    IdentityCheck check;
    check.sides = {RationalPoly(std::move(lhs)), RationalPoly(std::move(rhs))};
    check.holds = check.sides[0] == check.sides[1];
    return check;
}

RationalPoly stride_extract(const RationalPoly& f, unsigned stride, unsigned offset) {
    if (stride == 0 || offset >= stride)
        throw std::invalid_argument("stride_extract needs stride >= 1 and offset < stride");
    std::vector<BigRational> out;
    for (std::size_t i = offset; i < f.coeffs().size(); i += stride) out.push_back(f.coeffs()[i]);
    return RationalPoly(std::move(out));
}

RationalPoly odd_binomial_poly(unsigned n) {
    // Every other coefficient of x(1+x)^(2n), starting at x^0, is x * sum_k C(2n,2k+1) x^k.
    const RationalPoly x_times = RationalPoly::monomial(1, 1) * one_plus_x_pow(2 * n);
    const RationalPoly extracted = stride_extract(x_times, 2, 0);
    return RationalPoly({extracted.coeffs().begin() + 1, extracted.coeffs().end()});
}

namespace {

class PipelineBuilder {
public:
    explicit PipelineBuilder(PipelineReport& report) : report_(report) {}

    // Records a stage whose polynomial must be real-rooted; `extra` carries any
    // additional exact check. Returns false once the pipeline has failed.
    bool stage(std::string name, const RationalPoly& poly, bool extra, std::string detail) {
        if (!report_.ok()) return false;
        PipelineStage s{std::move(name), poly, std::nullopt, false, std::move(detail)};
        if (!poly.is_zero()) s.certificate = certify(poly);
        s.passed = extra && s.certificate && s.certificate->is_real_rooted;
        if (!s.passed) report_.failed_stage = s.name;
        report_.stages.push_back(std::move(s));
        return report_.ok();
    }

private:
    PipelineReport& report_;
};

}  // namespace

PipelineReport theorem2_pipeline(unsigned n) {
    if (n == 0) throw std::invalid_argument("theorem2_pipeline needs n >= 1");
    const long nn = n;
    PipelineReport report;
    report.n = n;
    PipelineBuilder b(report);

    // x(1+x)^(2n) has only real nonpositive zeros, and stride extraction keeps that property.
    const RationalPoly odd = odd_binomial_poly(n);
    std::vector<BigRational> odd_direct;
    for (long k = 0; k < nn; ++k) odd_direct.emplace_back(binomial(2 * nn, 2 * k + 1));
    if (!b.stage("odd_binomial", odd, odd == RationalPoly(odd_direct),
                 "sum_k C(2n,2k+1) x^k from every other coefficient of x(1+x)^(2n)"))
        return report;

    // C(2n-k-1, n-1) is an n-sequence, via the post-lemma identity and lemma2_sequence(n, 0).
    const MultiplierSequence recip = reciprocal_binomial_sequence(n);
    const auto verdict = is_n_sequence(recip, n);
    const bool identity = verify_post_lemma_identity(n).holds;
    if (!b.stage("reciprocal_sequence", verdict.image, identity && verdict.is_n_sequence,
                 "C(2n-k-1,n-1) applied to (1+x)^n: real-rooted, zeros of one sign"))
        return report;

    const MultiplierSequence recip_used = recip.truncated(n - 1);
    const RationalPoly reversed_source = apply_sequence(recip_used, odd);
    std::vector<BigRational> forward;
    for (long k = 0; k < nn; ++k)
        forward.emplace_back(binomial(nn + k, nn - 1) * binomial(2 * nn, 2 * k + 1));
    const RationalPoly forward_poly(forward);
    if (!b.stage("reciprocal_product", reversed_source, true,
                 "sum_k C(2n-k-1,n-1) C(2n,2k+1) x^k"))
        return report;
    if (!b.stage("reversal", forward_poly, forward_poly == reversed_source.reverse(static_cast<int>(nn - 1)),
                 "sum_k C(n+k,n-1) C(2n,2k+1) x^k equals the reversal of the previous stage"))
        return report;

    const BigRational norm = BigRational(1) / (BigRational(nn * nn) * BigRational(binomial(2 * nn, nn)));
    const RationalPoly normalized = apply_sequence(recip_used, forward_poly) * norm;
    if (!b.stage("normalized_product", normalized, true,
                 "C(2n-k-1,n-1) applied again, divided by n^2 C(2n,n)"))
        return report;

    const RationalPoly w2 = descent_polynomial(n, 2, CountMethod::closed_form);
    if (!b.stage("descent_match", w2, w2 == normalized, "equals W_{n,2}(x) from the closed form"))
        return report;
    report.final_poly = normalized;
    return report;
}

}  // namespace stacksort
