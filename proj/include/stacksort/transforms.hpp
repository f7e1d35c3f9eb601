#pragma once

// Multiplier sequences acting coefficientwise on polynomials, the n-sequence
// test, and the certified real-rootedness argument for W_{n,2}(x).

#include <optional>
#include <string>
#include <vector>

#include "stacksort/exact_numeric.hpp"
#include "stacksort/polynomial.hpp"
#include "stacksort/sturm.hpp"

namespace stacksort {

/// gamma_0 .. gamma_m, acting by a_i x^i -> gamma_i a_i x^i.
class MultiplierSequence {
public:
    /// Throws std::invalid_argument for an empty sequence.
    explicit MultiplierSequence(std::vector<BigRational> gamma);

    static MultiplierSequence ones(unsigned order);

    unsigned order() const { return static_cast<unsigned>(gamma_.size()) - 1; }
    const std::vector<BigRational>& gamma() const { return gamma_; }
    const BigRational& operator[](std::size_t k) const { return gamma_[k]; }

    /// First order+1 entries.
    MultiplierSequence truncated(unsigned order) const;

private:
    std::vector<BigRational> gamma_;
};

/// Throws std::invalid_argument if deg f exceeds the sequence order.
RationalPoly apply_sequence(const MultiplierSequence& g, const RationalPoly& f);

struct NSequenceVerdict {
    bool is_n_sequence = false;
    /// Gamma[(x+1)^n]
    RationalPoly image;
    RootCertificate certificate;
};

/// Gamma is an n-sequence iff Gamma[(x+1)^n] is real-rooted with all zeros of one sign.
/// Throws std::invalid_argument if the order is below n.
NSequenceVerdict is_n_sequence(const MultiplierSequence& g, unsigned n);

/// gamma_k = C(-n-r, k), k = 0..n. Throws std::invalid_argument for r < 0.
MultiplierSequence lemma2_sequence(unsigned n, const BigRational& r);

/// gamma_k = C(2n-k-1, n-1), k = 0..n.
MultiplierSequence reciprocal_binomial_sequence(unsigned n);

struct IdentityCheck {
    bool holds = false;
    /// The expanded sides, in the order they appear in the identity.
    std::vector<RationalPoly> sides;
};

/// Gamma[(x+1)^n] = 2F1(-n, n+r; 1; x) = P_n^(0, r-1)(1-2x) with Gamma = lemma2_sequence(n, r).
/// Throws std::invalid_argument unless r > 0.
IdentityCheck verify_lemma2_identity(unsigned n, const BigRational& r);

/// sum_k C(2n-k-1, n-1) C(n,k) x^k = (-1)^n sum_k C(-n,k) C(n,k) (-x)^(n-k), k = 0..n.
IdentityCheck verify_post_lemma_identity(unsigned n);

/// Coefficient i of the result is a_{stride*i + offset}.
/// Throws std::invalid_argument unless stride >= 1 and offset < stride.
RationalPoly stride_extract(const RationalPoly& f, unsigned stride, unsigned offset);

/// sum_{k=0}^{n-1} C(2n, 2k+1) x^k: stride-2 extraction of x(1+x)^(2n) with the factor x removed.
RationalPoly odd_binomial_poly(unsigned n);

struct PipelineStage {
    std::string name;
    RationalPoly poly;
    std::optional<RootCertificate> certificate;
    bool passed = false;
    std::string detail;
};

struct PipelineReport {
    unsigned n = 0;
    std::vector<PipelineStage> stages;
    /// Name of the first failing stage; empty when every stage passed.
    std::string failed_stage;
    RationalPoly final_poly;

    bool ok() const { return failed_stage.empty(); }
};

/// Replays the real-rootedness argument for W_{n,2}(x) as exact computation,
/// stopping at the first stage that fails. Throws std::invalid_argument for n = 0.
PipelineReport theorem2_pipeline(unsigned n);

}  // namespace stacksort
