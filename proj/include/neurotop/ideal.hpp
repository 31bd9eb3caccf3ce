#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "neurotop/code.hpp"

namespace neurotop {

/// Cap for the brute-force canonical-form search (3^n pseudo-monomials).
inline constexpr int kMaxCanonicalFormLength = 12;

/**
 * A square-free polynomial over F2 in variables x_1,...,x_n, stored as the
 * set of its monomials.  Each monomial is the index set of its variables;
 * the empty set is the constant 1.  Codes of length n and these
 * polynomials are in bijection: P corresponds to its vanishing set.
 */
class ReducedPolynomial {
public:
    /// Monomials must be distinct (coefficients live in F2).
    ReducedPolynomial(int n, std::vector<std::uint64_t> monomials);

    static ReducedPolynomial zero(int n) { return ReducedPolynomial(n, {}); }
    static ReducedPolynomial one(int n) { return ReducedPolynomial(n, {0}); }

    int length() const noexcept { return n_; }
    bool is_zero() const noexcept { return monomials_.empty(); }

    /// Sorted by (degree, index-sequence lex).
    const std::vector<std::uint64_t>& monomials() const noexcept { return monomials_; }

    /// "x2 + x1*x2"; the zero polynomial renders "0".
    std::string to_string() const;

    /// Addition over F2: symmetric difference of monomial sets.
    friend ReducedPolynomial operator+(const ReducedPolynomial& a, const ReducedPolynomial& b);

    friend bool operator==(const ReducedPolynomial&, const ReducedPolynomial&) = default;

private:
    int n_;
    std::vector<std::uint64_t> monomials_;
};

/// Value of p at a point of F2^n, by direct monomial evaluation.
int evaluate(const ReducedPolynomial& p, const Codeword& w);

/// The unique reduced polynomial vanishing exactly on the code: the
/// multilinear normal form of the complement's indicator function.
/// Tabulates all 2^n points, so n is capped.
ReducedPolynomial code_to_polynomial(const Code& code, int max_length = kMaxEnumerationBits);

/// The vanishing set of p, by exhaustive enumeration of F2^n.
Code polynomial_to_code(const ReducedPolynomial& p, int max_length = kMaxEnumerationBits);

/**
 * A product of plain factors x_i (i in sigma) and complemented factors
 * 1+x_j (j in tau), with sigma and tau disjoint.  Evaluates to 1 at w
 * iff supp(w) contains sigma and misses tau.
 */
class PseudoMonomial {
public:
    PseudoMonomial(std::uint64_t sigma, std::uint64_t tau);

    std::uint64_t sigma() const noexcept { return sigma_; }
    std::uint64_t tau() const noexcept { return tau_; }
    int degree() const noexcept { return popcount(sigma_) + popcount(tau_); }

    int evaluate(std::uint64_t support) const noexcept {
        return ((support & sigma_) == sigma_ && (support & tau_) == 0) ? 1 : 0;
    }

    /// z' divides z iff both factor sets are contained in z's.
    bool divides(const PseudoMonomial& other) const noexcept {
        return (sigma_ & other.sigma_) == sigma_ && (tau_ & other.tau_) == tau_;
    }

    /// "x2*(1+x1)": plain factors ascending, then complemented factors
    /// ascending; the empty product renders "1".
    std::string to_string() const;

    friend bool operator==(const PseudoMonomial&, const PseudoMonomial&) = default;

private:
    std::uint64_t sigma_;
    std::uint64_t tau_;
};

/// True iff z evaluates to 0 at every codeword.
bool vanishes_on(const PseudoMonomial& z, const Code& code);

/**
 * The canonical form of the code's vanishing ideal: all divisibility-
 * minimal pseudo-monomials vanishing on the code, found by brute force
 * over all 3^n candidates in degree order.  Result sorted by
 * (degree, sigma, tau).  Rejects empty codes and n above max_length.
 */
std::vector<PseudoMonomial> canonical_form(const Code& code,
                                           int max_length = kMaxCanonicalFormLength);

enum class RelationKind {
    containment,         // intersection of sigma's sets lies in tau's union
    empty_intersection,  // tau empty: sigma's sets have empty intersection
    covering,            // sigma empty: tau's sets cover the whole space
};

/// A receptive-field relation read off one canonical-form element.
struct RfRelation {
    std::uint64_t sigma;
    std::uint64_t tau;
    RelationKind kind;

    /// "U2 <= U1", "U1 & U2 = {}", or "X <= U1 | U2".
    std::string to_string() const;

    friend bool operator==(const RfRelation&, const RfRelation&) = default;
};

/// One relation per canonical-form element, in canonical-form order.
std::vector<RfRelation> rf_relations(const Code& code,
                                     int max_length = kMaxCanonicalFormLength);

}  // namespace neurotop
