#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "windrose/board.hpp"
#include "windrose/solver.hpp"

namespace windrose {

// Element a + b*x of GF(9) = (Z/3)[x]/(x^2+1), coefficients mod 3.
struct F9 {
    std::uint8_t a = 0;
    std::uint8_t b = 0;

    friend constexpr bool operator==(F9, F9) = default;

    constexpr bool is_zero() const { return a == 0 && b == 0; }

    friend constexpr F9 operator+(F9 l, F9 r) {
        return {static_cast<std::uint8_t>((l.a + r.a) % 3),
                static_cast<std::uint8_t>((l.b + r.b) % 3)};
    }
    friend constexpr F9 operator-(F9 l, F9 r) {
        return {static_cast<std::uint8_t>((l.a + 3 - r.a) % 3),
                static_cast<std::uint8_t>((l.b + 3 - r.b) % 3)};
    }
    // (a+bx)(c+dx) = (ac - bd) + (ad + bc)x, using x^2 = -1.
    friend constexpr F9 operator*(F9 l, F9 r) {
        return {static_cast<std::uint8_t>((l.a * r.a + 3 * 3 - l.b * r.b) % 3),
                static_cast<std::uint8_t>((l.a * r.b + l.b * r.a) % 3)};
    }

    static constexpr F9 zero() { return {0, 0}; }
    static constexpr F9 one() { return {1, 0}; }
    static constexpr F9 x() { return {0, 1}; }

    // Text encoding: digit a + 3b in 0..8.
    constexpr int index() const { return a + 3 * b; }
    static constexpr F9 from_index(int v) {
        return {static_cast<std::uint8_t>(v % 3), static_cast<std::uint8_t>(v / 3)};
    }
};

F9 f9_pow(F9 base, int exp);
std::string f9_str(F9 e);

// Unit-step embedding of the winds into the nonzero elements: the east
// component is the real part, the north component the x coefficient
// (E -> 1, N -> x, NE -> 1+x, W -> -1 = 2, ...). A bijection onto GF(9)*.
F9 dir_to_f9(Dir d);
Dir f9_to_dir(F9 e);  // throws Error on zero

// A board over GF(9); zero entries are dead cells (no targets).
class GeneralizedBoard {
public:
    GeneralizedBoard(int n, std::vector<F9> cells);
    static GeneralizedBoard zero_board(int n);
    static GeneralizedBoard from_board(const Board& b);

    int n() const { return n_; }
    Pos center() const { return {(n_ + 1) / 2, (n_ + 1) / 2}; }
    int flat(Pos p) const { return (p.i - 1) * n_ + (p.j - 1); }
    Pos unflat(int f) const { return {f / n_ + 1, f % n_ + 1}; }
    F9 at(Pos p) const { return cells_[flat(p)]; }
    std::span<const F9> cells() const { return cells_; }

    friend bool operator==(const GeneralizedBoard&, const GeneralizedBoard&) = default;

private:
    int n_;
    std::vector<F9> cells_;
};

GeneralizedBoard gb_add(const GeneralizedBoard& a, const GeneralizedBoard& b);
GeneralizedBoard gb_mul(const GeneralizedBoard& a, const GeneralizedBoard& b);

// BFS where zero cells are dead and nonzero cells move as their wind;
// on a zero-free board this coincides with the plain solver.
SolveResult solve_generalized(const GeneralizedBoard& gb);

// Text format: line 1 "f9 <N>", then N lines of N digits 0-8 (a + 3b).
std::string serialize_generalized(const GeneralizedBoard& gb);
GeneralizedBoard parse_generalized(std::string_view text);

}  // namespace windrose
