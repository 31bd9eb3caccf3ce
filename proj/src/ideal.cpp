#include "neurotop/ideal.hpp"

#include <algorithm>

namespace neurotop {

ReducedPolynomial::ReducedPolynomial(int n, std::vector<std::uint64_t> monomials)
    : n_(n), monomials_(std::move(monomials)) {
    if (n < 1 || n > kMaxLength)
        fail(errc::bad_argument, "polynomial length out of range");
    for (std::uint64_t m : monomials_)
        if ((m >> n) != 0)
            fail(errc::bad_argument, "monomial has variables beyond the length");
    std::sort(monomials_.begin(), monomials_.end(), size_lex_less);
    if (std::adjacent_find(monomials_.begin(), monomials_.end()) != monomials_.end())
        fail(errc::bad_argument, "duplicate monomial");
}

std::string ReducedPolynomial::to_string() const {
    if (monomials_.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < monomials_.size(); ++k) {
        if (k > 0)
            out += " + ";
        const std::uint64_t m = monomials_[k];
        if (m == 0) {
            out += '1';
            continue;
        }
        bool first = true;
        for (int i : mask_to_indices(m)) {
            if (!first)
                out += '*';
            out += 'x';
            out += std::to_string(i);
            first = false;
        }
    }
    return out;
}

ReducedPolynomial operator+(const ReducedPolynomial& a, const ReducedPolynomial& b) {
    if (a.n_ != b.n_)
        fail(errc::length_mismatch, "adding polynomials of different lengths");
    std::vector<std::uint64_t> sum;
    std::set_symmetric_difference(a.monomials_.begin(), a.monomials_.end(),
                                  b.monomials_.begin(), b.monomials_.end(),
                                  std::back_inserter(sum), size_lex_less);
    return ReducedPolynomial(a.n_, std::move(sum));
}

int evaluate(const ReducedPolynomial& p, const Codeword& w) {
    if (p.length() != w.length())
        fail(errc::length_mismatch, "polynomial length " + std::to_string(p.length()) +
                                        " vs word length " + std::to_string(w.length()));
    int value = 0;
    for (std::uint64_t m : p.monomials())
        value ^= ((w.mask() & m) == m) ? 1 : 0;
    return value;
}

namespace {

// in-place binary Moebius transform over F2; its own inverse
void moebius_transform(std::vector<unsigned char>& table, int n) {
    const std::size_t size = std::size_t{1} << n;
    for (int b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t i = 0; i < size; ++i)
            if (i & bit)
                table[i] ^= table[i ^ bit];
    }
}

void check_exhaustive_length(int n, int max_length) {
    if (n > max_length)
        fail(errc::capacity_exceeded,
             "length " + std::to_string(n) + " exceeds the exhaustive-enumeration limit " +
                 std::to_string(max_length));
}

}  // namespace

ReducedPolynomial code_to_polynomial(const Code& code, int max_length) {
    const int n = code.length();
    check_exhaustive_length(n, max_length);
    // indicator of the complement, then its multilinear normal form
    std::vector<unsigned char> table(std::size_t{1} << n, 1);
    for (const Codeword& w : code.words())
        table[w.mask()] = 0;
    moebius_transform(table, n);
    std::vector<std::uint64_t> monomials;
    for (std::size_t m = 0; m < table.size(); ++m)
        if (table[m])
            monomials.push_back(m);
    return ReducedPolynomial(n, std::move(monomials));
}

Code polynomial_to_code(const ReducedPolynomial& p, int max_length) {
    const int n = p.length();
    check_exhaustive_length(n, max_length);
    std::vector<unsigned char> table(std::size_t{1} << n, 0);
    for (std::uint64_t m : p.monomials())
        table[m] = 1;
    moebius_transform(table, n);
    std::vector<Codeword> words;
    for (std::size_t w = 0; w < table.size(); ++w)
        if (!table[w])
            words.emplace_back(w, n);
    return Code(n, std::move(words));
}

PseudoMonomial::PseudoMonomial(std::uint64_t sigma, std::uint64_t tau)
    : sigma_(sigma), tau_(tau) {
    if ((sigma & tau) != 0)
        fail(errc::bad_argument, "pseudo-monomial factor sets must be disjoint");
}

std::string PseudoMonomial::to_string() const {
    if (sigma_ == 0 && tau_ == 0)
        return "1";
    std::string out;
    bool first = true;
    for (int i : mask_to_indices(sigma_)) {
        if (!first)
            out += '*';
        out += 'x';
        out += std::to_string(i);
        first = false;
    }
    for (int j : mask_to_indices(tau_)) {
        if (!first)
            out += '*';
        out += "(1+x";
        out += std::to_string(j);
        out += ')';
        first = false;
    }
    return out;
}

bool vanishes_on(const PseudoMonomial& z, const Code& code) {
    if (((z.sigma() | z.tau()) >> code.length()) != 0)
        fail(errc::bad_argument, "pseudo-monomial indices beyond the code length");
    for (const Codeword& w : code.words())
        if (z.evaluate(w.mask()))
            return false;
    return true;
}

std::vector<PseudoMonomial> canonical_form(const Code& code, int max_length) {
    if (code.empty())
        fail(errc::empty_code, "canonical form of an empty code");
    const int n = code.length();
    if (n > max_length)
        fail(errc::capacity_exceeded,
             "length " + std::to_string(n) + " exceeds the canonical-form limit " +
                 std::to_string(max_length));

    auto vanishes = [&](std::uint64_t sigma, std::uint64_t tau) {
        for (const Codeword& w : code.words())
            if ((w.mask() & sigma) == sigma && (w.mask() & tau) == 0)
                return false;
        return true;
    };

    std::vector<std::pair<std::uint64_t, std::uint64_t>> vanishing;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t sigma = 0; sigma <= full; ++sigma) {
        const std::uint64_t complement = full & ~sigma;
        std::uint64_t tau = complement;
        while (true) {
            if (vanishes(sigma, tau))
                vanishing.emplace_back(sigma, tau);
            if (tau == 0)
                break;
            tau = (tau - 1) & complement;
        }
    }

    std::sort(vanishing.begin(), vanishing.end(), [](const auto& a, const auto& b) {
        const int da = popcount(a.first) + popcount(a.second);
        const int db = popcount(b.first) + popcount(b.second);
        if (da != db)
            return da < db;
        if (a.first != b.first)
            return set_lex_less(a.first, b.first);
        return set_lex_less(a.second, b.second);
    });

    // vanishing is upward closed under divisibility, so scanning by degree
    // keeps exactly the minimal elements
    std::vector<PseudoMonomial> minimal;
    for (const auto& [sigma, tau] : vanishing) {
        bool divisible = false;
        for (const PseudoMonomial& z : minimal)
            if ((z.sigma() & sigma) == z.sigma() && (z.tau() & tau) == z.tau()) {
                divisible = true;
                break;
            }
        if (!divisible)
            minimal.emplace_back(sigma, tau);
    }
    return minimal;
}

std::string RfRelation::to_string() const {
    auto join = [](std::uint64_t mask, const char* sep) {
        std::string out;
        bool first = true;
        for (int i : mask_to_indices(mask)) {
            if (!first)
                out += sep;
            out += 'U';
            out += std::to_string(i);
            first = false;
        }
        return out;
    };
    switch (kind) {
    case RelationKind::empty_intersection:
        return join(sigma, " & ") + " = {}";
    case RelationKind::covering:
        return "X <= " + join(tau, " | ");
    case RelationKind::containment:
    default:
        return join(sigma, " & ") + " <= " + join(tau, " | ");
    }
}

std::vector<RfRelation> rf_relations(const Code& code, int max_length) {
    std::vector<RfRelation> relations;
    for (const PseudoMonomial& z : canonical_form(code, max_length)) {
        RelationKind kind = RelationKind::containment;
        if (z.tau() == 0)
            kind = RelationKind::empty_intersection;
        else if (z.sigma() == 0)
            kind = RelationKind::covering;
        relations.push_back({z.sigma(), z.tau(), kind});
    }
    return relations;
}

}  // namespace neurotop
