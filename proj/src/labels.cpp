#include <jacquet/labels.hpp>

#include <algorithm>
#include <mutex>

#include <jacquet/errors.hpp>

namespace jacquet
{

LabelRegistry &LabelRegistry::global()
{
    static LabelRegistry registry;
    return registry;
}

GLLabel LabelRegistry::declare_gl(std::string_view name, int dim, bool conj_self_dual)
{
    if (name.empty()) {
        throw RegistryConflict("GL label name must not be empty");
    }
    if (dim < 1) {
        throw RegistryConflict("GL label '" + std::string(name) + "': dim must be >= 1");
    }
    std::unique_lock lock(m_mutex);
    if (auto it = m_gl.find(name); it != m_gl.end()) {
        const auto &d = *it->second;
        if (d.dim != dim || d.conj_self_dual != conj_self_dual) {
            throw RegistryConflict("GL label '" + std::string(name) + "' redeclared with different attributes");
        }
        return GLLabel(&d);
    }
    auto data = std::make_unique<detail::GLLabelData>(detail::GLLabelData{std::string(name), dim, conj_self_dual, this});
    const auto *ptr = data.get();
    m_gl.emplace(std::string(name), std::move(data));
    return GLLabel(ptr);
}

GULabel LabelRegistry::declare_gu(std::string_view name, int rank, std::map<GLLabel, HalfInt> reducibility,
                                  std::set<GLLabel> twist_fixed)
{
    if (name.empty()) {
        throw RegistryConflict("GU label name must not be empty");
    }
    if (rank < 0) {
        throw RegistryConflict("GU label '" + std::string(name) + "': rank must be >= 0");
    }
    for (const auto &[rho, a] : reducibility) {
        if (a < HalfInt(0)) {
            throw RegistryConflict("GU label '" + std::string(name) + "': reducibility point for '" + rho.name()
                                   + "' must be >= 0");
        }
    }
    std::unique_lock lock(m_mutex);
    if (auto it = m_gu.find(name); it != m_gu.end()) {
        const auto &d = *it->second;
        if (d.rank != rank || d.reducibility != reducibility || d.twist_fixed != twist_fixed) {
            throw RegistryConflict("GU label '" + std::string(name) + "' redeclared with different attributes");
        }
        return GULabel(&d);
    }
    auto data = std::make_unique<detail::GULabelData>(
        detail::GULabelData{std::string(name), rank, std::move(reducibility), std::move(twist_fixed)});
    const auto *ptr = data.get();
    m_gu.emplace(std::string(name), std::move(data));
    return GULabel(ptr);
}

std::optional<GLLabel> LabelRegistry::find_gl(std::string_view name) const
{
    std::shared_lock lock(m_mutex);
    if (auto it = m_gl.find(name); it != m_gl.end()) {
        return GLLabel(it->second.get());
    }
    return std::nullopt;
}

std::optional<GULabel> LabelRegistry::find_gu(std::string_view name) const
{
    std::shared_lock lock(m_mutex);
    if (auto it = m_gu.find(name); it != m_gu.end()) {
        return GULabel(it->second.get());
    }
    return std::nullopt;
}

std::string LabelRegistry::dual_name(std::string_view name)
{
    if (!name.empty() && name.back() == '~') {
        return std::string(name.substr(0, name.size() - 1));
    }
    return std::string(name) + "~";
}

GLLabel LabelRegistry::dual_of(const GLLabel &rho)
{
    if (rho.conj_self_dual()) {
        return rho;
    }
    const auto name = dual_name(rho.name());
    if (auto found = find_gl(name)) {
        if (found->dim() != rho.dim() || found->conj_self_dual()) {
            throw RegistryConflict("label '" + name + "' cannot serve as the dual of '" + rho.name() + "'");
        }
        return *found;
    }
    return declare_gl(name, rho.dim(), false);
}

std::optional<HalfInt> GULabel::reducibility_of(const GLLabel &rho) const
{
    if (auto it = m_data->reducibility.find(rho); it != m_data->reducibility.end()) {
        return it->second;
    }
    return std::nullopt;
}

TwistTag TwistTag::single(const GLLabel &rho, std::int64_t power, HalfInt nu_sum)
{
    TwistTag t;
    if (power != 0 || nu_sum != HalfInt(0)) {
        t.m_entries.emplace_back(rho, TwistEntry{power, nu_sum});
    }
    return t;
}

TwistTag TwistTag::inverse() const
{
    TwistTag t;
    t.m_entries.reserve(m_entries.size());
    for (const auto &[rho, e] : m_entries) {
        t.m_entries.emplace_back(rho, TwistEntry{-e.power, -e.nu_sum});
    }
    return t;
}

TwistTag merge(const TwistTag &x, const TwistTag &y)
{
    TwistTag out;
    auto &dst = out.m_entries;
    dst.reserve(x.m_entries.size() + y.m_entries.size());
    auto i = x.m_entries.begin();
    auto j = y.m_entries.begin();
    while (i != x.m_entries.end() || j != y.m_entries.end()) {
        if (j == y.m_entries.end() || (i != x.m_entries.end() && i->first < j->first)) {
            dst.push_back(*i++);
        } else if (i == x.m_entries.end() || j->first < i->first) {
            dst.push_back(*j++);
        } else {
            TwistEntry e{i->second.power + j->second.power, i->second.nu_sum + j->second.nu_sum};
            if (e.power != 0 || e.nu_sum != HalfInt(0)) {
                dst.emplace_back(i->first, e);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

std::string TwistTag::to_string() const
{
    std::string out;
    for (const auto &[rho, e] : m_entries) {
        if (!out.empty()) {
            out += ',';
        }
        out += rho.name() + "^" + std::to_string(e.power) + ":nu^" + e.nu_sum.to_string();
    }
    return out;
}

} // namespace jacquet
