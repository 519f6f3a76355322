#pragma once

#include "projperm/gf.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace projperm {

/// A point of the projective line over GF(q): a field element or infinity.
class Point {
public:
    static Point finite(Elem v) { return Point(v); }
    static Point infinity() { return Point(kInf); }

    bool is_infinity() const { return v_ == kInf; }

    /// Field element index; throws on infinity.
    Elem value() const;

    /// Table slot: finite points keep their index, infinity maps to q.
    std::uint32_t slot(std::uint32_t q) const { return is_infinity() ? q : v_; }
    static Point from_slot(std::uint32_t slot, std::uint32_t q) {
        return slot == q ? infinity() : finite(slot);
    }

    bool operator==(const Point&) const = default;

private:
    explicit Point(Elem v) : v_(v) {}
    static constexpr Elem kInf = std::numeric_limits<Elem>::max();
    Elem v_;
};

/// "inf" or the decimal element index.
std::string point_text(Point x);
Point point_from_text(const Field& field, std::string_view text);

} // namespace projperm
