#include "projperm/point.hpp"
#include "projperm/errors.hpp"

#include <charconv>
#include <stdexcept>

namespace projperm {

Elem Point::value() const {
    if (is_infinity()) throw std::invalid_argument("infinity has no field value");
    return v_;
}

std::string point_text(Point x) {
    return x.is_infinity() ? "inf" : std::to_string(x.value());
}

Point point_from_text(const Field& field, std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text == "inf") return Point::infinity();
    Elem v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw parse_error("bad point: '" + std::string(text) + "'");
    if (!field.has(v))
        throw parse_error("point index " + std::string(text) + " outside field of order " +
                          std::to_string(field.q()));
    return Point::finite(v);
}

} // namespace projperm
