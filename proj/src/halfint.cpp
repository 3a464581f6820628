#include <jacquet/halfint.hpp>

#include <charconv>
#include <stdexcept>
#include <string>

namespace jacquet
{

std::string HalfInt::to_string() const
{
    if (is_integer()) {
        return std::to_string(m_twice / 2);
    }
    return std::to_string(m_twice) + "/2";
}

HalfInt HalfInt::parse(std::string_view text)
{
    auto fail = [&] { return std::invalid_argument("not a half-integer: '" + std::string(text) + "'"); };

    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    std::int64_t num = 0;
    const char *first = num_text.data();
    const char *last = first + num_text.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, num);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw fail();
    }
    if (slash == std::string_view::npos) {
        return HalfInt(num);
    }
    if (text.substr(slash + 1) != "2") {
        throw fail();
    }
    return from_twice(num);
}

} // namespace jacquet
