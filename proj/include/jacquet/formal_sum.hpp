#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include <jacquet/errors.hpp>
#include <jacquet/monomials.hpp>

namespace jacquet
{

using Multiplicity = boost::multiprecision::cpp_int;

// Homogeneity signature of a term; all terms of one sum must agree.
inline std::size_t term_kind(const GLMonomial &)
{
    return 0;
}
inline std::size_t term_kind(const GUClass &)
{
    return 0;
}
inline std::size_t term_kind(const TensorTerm &t)
{
    return 2 * t.gl().size() + (t.has_gu() ? 1u : 0u);
}

// Z-linear combination of canonical monomials. Zero coefficients are never
// stored, so equality of sums is equality of the underlying maps.
template <typename Term>
class FormalSum
{
public:
    using term_type = Term;
    using container_type = std::map<Term, Multiplicity>;
    using const_iterator = typename container_type::const_iterator;

    FormalSum() = default;
    explicit FormalSum(Term t, Multiplicity m = 1)
    {
        add(std::move(t), std::move(m));
    }

    // Throws KindMismatch if t is not homogeneous with the stored terms.
    void add(Term t, Multiplicity m = 1)
    {
        if (m.is_zero()) {
            return;
        }
        check_kind(t);
        auto [it, inserted] = m_terms.try_emplace(std::move(t), m);
        if (!inserted) {
            it->second += m;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    FormalSum &operator+=(const FormalSum &o)
    {
        for (const auto &[t, m] : o.m_terms) {
            add(t, m);
        }
        return *this;
    }
    FormalSum &operator+=(FormalSum &&o)
    {
        if (m_terms.empty()) {
            m_terms = std::move(o.m_terms);
            return *this;
        }
        for (auto &[t, m] : o.m_terms) {
            add(t, m);
        }
        return *this;
    }
    FormalSum &operator-=(const FormalSum &o)
    {
        for (const auto &[t, m] : o.m_terms) {
            add(t, -m);
        }
        return *this;
    }
    FormalSum operator-() const
    {
        FormalSum out;
        for (const auto &[t, m] : m_terms) {
            out.m_terms.emplace(t, -m);
        }
        return out;
    }
    friend FormalSum operator+(FormalSum x, const FormalSum &y)
    {
        return x += y;
    }
    friend FormalSum operator-(FormalSum x, const FormalSum &y)
    {
        return x -= y;
    }
    friend FormalSum operator*(const Multiplicity &k, const FormalSum &x)
    {
        FormalSum out;
        if (k.is_zero()) {
            return out;
        }
        for (const auto &[t, m] : x.m_terms) {
            out.m_terms.emplace(t, k * m);
        }
        return out;
    }

    // Coefficient of t; zero when absent.
    Multiplicity coefficient(const Term &t) const
    {
        auto it = m_terms.find(t);
        return it == m_terms.end() ? Multiplicity(0) : it->second;
    }

    std::size_t size() const
    {
        return m_terms.size();
    }
    bool empty() const
    {
        return m_terms.empty();
    }
    const_iterator begin() const
    {
        return m_terms.begin();
    }
    const_iterator end() const
    {
        return m_terms.end();
    }
    const container_type &terms() const
    {
        return m_terms;
    }

    std::optional<std::size_t> kind() const
    {
        if (m_terms.empty()) {
            return std::nullopt;
        }
        return term_kind(m_terms.begin()->first);
    }

    // Keeps the terms for which pred(term) holds.
    template <typename Pred>
    FormalSum filter(Pred pred) const
    {
        FormalSum out;
        for (const auto &[t, m] : m_terms) {
            if (pred(t)) {
                out.m_terms.emplace_hint(out.m_terms.end(), t, m);
            }
        }
        return out;
    }

    friend bool operator==(const FormalSum &, const FormalSum &) = default;

private:
    void check_kind(const Term &t) const
    {
        if (!m_terms.empty() && term_kind(m_terms.begin()->first) != term_kind(t)) {
            throw KindMismatch("formal sum: incompatible term kinds (" + m_terms.begin()->first.to_string() + " vs "
                               + t.to_string() + ")");
        }
    }

    container_type m_terms;
};

using GLSum = FormalSum<GLMonomial>;
using GUSum = FormalSum<GUClass>;
using TensorSum = FormalSum<TensorTerm>;

// sum_add: exact addition with pruning. Throws KindMismatch.
template <typename Term>
FormalSum<Term> sum_add(const FormalSum<Term> &x, const FormalSum<Term> &y)
{
    return x + y;
}

// Coefficient lookup by canonical form.
template <typename Term>
Multiplicity multiplicity(const FormalSum<Term> &sum, const Term &term)
{
    return sum.coefficient(term);
}

// Cap on the number of terms any engine-produced sum may hold. Defaults to
// the value of JACQUET_MAX_TERMS, or 10^6.
std::size_t max_terms();
void set_max_terms(std::size_t n);

template <typename Term>
void enforce_term_limit(const FormalSum<Term> &sum, const char *what)
{
    if (sum.size() > max_terms()) {
        throw TermLimitExceeded(std::string(what) + ": " + std::to_string(sum.size()) + " terms exceeds the limit of "
                                + std::to_string(max_terms()));
    }
}

template <typename Term>
std::string to_string(const FormalSum<Term> &sum)
{
    if (sum.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[t, m] : sum) {
        out += m.str();
        out += " * ";
        out += t.to_string();
        out += '\n';
    }
    return out;
}

} // namespace jacquet
