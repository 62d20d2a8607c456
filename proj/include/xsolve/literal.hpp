#pragma once

#include <cstdint>
#include <functional>

namespace xsolve {

using Var = int;

// Signed literal, encoded MiniSat-style as var*2 + sign.
class Lit {
public:
    Lit() = default;
    Lit(Var v, bool negated) : code_(v * 2 + (negated ? 1 : 0)) {}

    // DIMACS convention: n > 0 is variable n-1 positive, n < 0 negated.
    static Lit fromDimacs(int n) {
        return n > 0 ? Lit(n - 1, false) : Lit(-n - 1, true);
    }

    Var var() const { return code_ >> 1; }
    bool neg() const { return (code_ & 1) != 0; }
    int code() const { return code_; }
    bool valid() const { return code_ >= 0; }

    Lit operator~() const {
        Lit l;
        l.code_ = code_ ^ 1;
        return l;
    }

    int toDimacs() const { return neg() ? -(var() + 1) : var() + 1; }

    friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
    friend bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
    friend bool operator<(Lit a, Lit b) { return a.code_ < b.code_; }

private:
    int code_ = -1;
};

inline Lit pos(Var v) { return Lit(v, false); }
inline Lit neg(Var v) { return Lit(v, true); }

} // namespace xsolve
