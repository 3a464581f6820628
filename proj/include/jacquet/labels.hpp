#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <typeindex>
#include <typeinfo>
#include <vector>

#include <jacquet/halfint.hpp>

namespace jacquet
{

class LabelRegistry;

namespace detail
{

struct GLLabelData {
    std::string name;
    int dim;
    bool conj_self_dual;
    LabelRegistry *owner;
};

struct GULabelData;

} // namespace detail

// Handle to an interned cuspidal representation of some GL_n(E).
// Cheap to copy; identity and ordering are by name.
class GLLabel
{
public:
    explicit GLLabel(const detail::GLLabelData *d) : m_data(d) {}

    const std::string &name() const
    {
        return m_data->name;
    }
    int dim() const
    {
        return m_data->dim;
    }
    bool conj_self_dual() const
    {
        return m_data->conj_self_dual;
    }
    // The conjugate-dual label; itself when conjugate self-dual.
    GLLabel dual() const;
    LabelRegistry &registry() const
    {
        return *m_data->owner;
    }

    friend bool operator==(const GLLabel &x, const GLLabel &y)
    {
        return x.m_data == y.m_data || x.m_data->name == y.m_data->name;
    }
    friend std::strong_ordering operator<=>(const GLLabel &x, const GLLabel &y)
    {
        if (x.m_data == y.m_data) {
            return std::strong_ordering::equal;
        }
        return x.m_data->name.compare(y.m_data->name) <=> 0;
    }

private:
    const detail::GLLabelData *m_data;
};

namespace detail
{

struct GULabelData {
    std::string name;
    int rank;
    // Declared reducibility points a_rho >= 0.
    std::map<GLLabel, HalfInt> reducibility;
    // Labels rho with omega_rho sigma ~ sigma.
    std::set<GLLabel> twist_fixed;
};

} // namespace detail

// Handle to an interned cuspidal representation sigma_cusp of H_m(F).
class GULabel
{
public:
    explicit GULabel(const detail::GULabelData *d) : m_data(d) {}

    const std::string &name() const
    {
        return m_data->name;
    }
    int rank() const
    {
        return m_data->rank;
    }
    const std::map<GLLabel, HalfInt> &reducibility() const
    {
        return m_data->reducibility;
    }
    std::optional<HalfInt> reducibility_of(const GLLabel &rho) const;
    bool is_twist_fixed(const GLLabel &rho) const
    {
        return m_data->twist_fixed.contains(rho);
    }
    const std::set<GLLabel> &twist_fixed() const
    {
        return m_data->twist_fixed;
    }

    friend bool operator==(const GULabel &x, const GULabel &y)
    {
        return x.m_data == y.m_data || x.m_data->name == y.m_data->name;
    }
    friend std::strong_ordering operator<=>(const GULabel &x, const GULabel &y)
    {
        if (x.m_data == y.m_data) {
            return std::strong_ordering::equal;
        }
        return x.m_data->name.compare(y.m_data->name) <=> 0;
    }

private:
    const detail::GULabelData *m_data;
};

// Append-only interning table for labels. Concurrent lookups are allowed;
// declarations are serialized. Redeclaring a name with different attributes
// throws RegistryConflict.
class LabelRegistry
{
public:
    LabelRegistry() = default;
    LabelRegistry(const LabelRegistry &) = delete;
    LabelRegistry &operator=(const LabelRegistry &) = delete;

    static LabelRegistry &global();

    GLLabel declare_gl(std::string_view name, int dim, bool conj_self_dual);
    GULabel declare_gu(std::string_view name, int rank, std::map<GLLabel, HalfInt> reducibility = {},
                       std::set<GLLabel> twist_fixed = {});

    std::optional<GLLabel> find_gl(std::string_view name) const;
    std::optional<GULabel> find_gu(std::string_view name) const;

    // Conjugate dual of a non-self-dual label, created on first request as
    // "<name>~" (or by stripping a trailing '~'), so that dual(dual(x)) == x.
    GLLabel dual_of(const GLLabel &rho);

    static std::string dual_name(std::string_view name);

    // Per-registry state of type T (e.g. memo tables over this registry's
    // labels), default-constructed on first use; lives as long as the registry.
    template <typename T>
    T &attachment()
    {
        std::lock_guard lock(m_attach_mutex);
        auto &slot = m_attachments[std::type_index(typeid(T))];
        if (!slot) {
            slot = std::make_shared<T>();
        }
        return *static_cast<T *>(slot.get());
    }

private:
    std::mutex m_attach_mutex;
    std::map<std::type_index, std::shared_ptr<void>> m_attachments;
    mutable std::shared_mutex m_mutex;
    std::map<std::string, std::unique_ptr<detail::GLLabelData>, std::less<>> m_gl;
    std::map<std::string, std::unique_ptr<detail::GULabelData>, std::less<>> m_gu;
};

inline GLLabel GLLabel::dual() const
{
    if (m_data->conj_self_dual) {
        return *this;
    }
    return m_data->owner->dual_of(*this);
}

struct TwistEntry {
    // Number of cuspidal constituents rho accumulated into omega_rho^power.
    std::int64_t power = 0;
    // Sum of the nu-exponents of those constituents.
    HalfInt nu_sum;

    friend constexpr auto operator<=>(const TwistEntry &, const TwistEntry &) = default;
};

// Element of the free abelian group on central characters omega_rho (with
// their nu-exponent bookkeeping). Kept sorted by label; never stores the zero
// entry.
class TwistTag
{
public:
    TwistTag() = default;

    static TwistTag single(const GLLabel &rho, std::int64_t power, HalfInt nu_sum);

    bool trivial() const
    {
        return m_entries.empty();
    }
    const std::vector<std::pair<GLLabel, TwistEntry>> &entries() const
    {
        return m_entries;
    }

    TwistTag inverse() const;
    // Drops the entries of labels for which the predicate holds.
    template <typename Pred>
    TwistTag erase_if(Pred pred) const
    {
        TwistTag out;
        for (const auto &e : m_entries) {
            if (!pred(e.first)) {
                out.m_entries.push_back(e);
            }
        }
        return out;
    }

    friend TwistTag merge(const TwistTag &x, const TwistTag &y);

    friend bool operator==(const TwistTag &, const TwistTag &) = default;
    friend std::strong_ordering operator<=>(const TwistTag &x, const TwistTag &y)
    {
        return x.m_entries <=> y.m_entries;
    }

    std::string to_string() const;

private:
    std::vector<std::pair<GLLabel, TwistEntry>> m_entries;
};

TwistTag merge(const TwistTag &x, const TwistTag &y);

} // namespace jacquet
