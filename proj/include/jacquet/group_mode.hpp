#pragma once

#include <string>
#include <string_view>

namespace jacquet
{

// GU: even general unitary groups, the pairing carries the omega twist.
// U: even unitary groups, no twist.
enum class GroupMode { GU, U };

inline std::string to_string(GroupMode m)
{
    return m == GroupMode::GU ? "GU" : "U";
}

} // namespace jacquet
