#pragma once

#include <cstdint>
#include <ostream>

#include <Eigen/Core>

namespace ihom {

/// Scalar type for exact arithmetic over the field with two elements.
///
/// Addition is XOR and multiplication is AND on a single stored bit. The
/// struct wraps one byte so Eigen can hold dense matrices of them while raw
/// byte kernels run directly over column storage. Every operation keeps the
/// stored byte at 0 or 1.
struct Z2 {
    std::uint8_t v{0};

    constexpr Z2() = default;
    constexpr explicit Z2(int x) : v(static_cast<std::uint8_t>(x & 1)) {}

    constexpr bool isSet() const { return v != 0; }

    constexpr Z2& operator+=(Z2 o) {
        v ^= o.v;
        return *this;
    }
    constexpr Z2& operator-=(Z2 o) {
        v ^= o.v;
        return *this;
    }
    constexpr Z2& operator*=(Z2 o) {
        v &= o.v;
        return *this;
    }

    friend constexpr Z2 operator+(Z2 a, Z2 b) { return Z2(a.v ^ b.v); }
    friend constexpr Z2 operator-(Z2 a, Z2 b) { return Z2(a.v ^ b.v); }
    friend constexpr Z2 operator*(Z2 a, Z2 b) { return Z2(a.v & b.v); }
    constexpr Z2 operator-() const { return *this; }

    /// Division in a two-element field: the divisor must be 1.
    friend constexpr Z2 operator/(Z2 a, Z2 b) { return Z2(a.v & b.v); }

    friend constexpr bool operator==(Z2 a, Z2 b) { return a.v == b.v; }
    friend constexpr bool operator!=(Z2 a, Z2 b) { return a.v != b.v; }

    friend std::ostream& operator<<(std::ostream& os, Z2 a) { return os << int(a.v); }
};

}  // namespace ihom

namespace Eigen {

template <>
struct NumTraits<ihom::Z2> {
    using Real = ihom::Z2;
    using NonInteger = ihom::Z2;
    using Literal = ihom::Z2;
    using Nested = ihom::Z2;

    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 1,
        MulCost = 1
    };

    static constexpr ihom::Z2 epsilon() { return ihom::Z2(0); }
    static constexpr ihom::Z2 dummy_precision() { return ihom::Z2(0); }
    static constexpr int digits10() { return 1; }
};

}  // namespace Eigen
