#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "windrose/f9.hpp"

using namespace windrose;

TEST_CASE("the wind embedding into GF(9)*") {
    CHECK(dir_to_f9(Dir::E) == F9::one());
    CHECK(dir_to_f9(Dir::N) == F9::x());
    CHECK(dir_to_f9(Dir::NE) == F9{1, 1});
    CHECK(dir_to_f9(Dir::W) == F9{2, 0});  // -1 = 2 mod 3
    CHECK(dir_to_f9(Dir::S) == F9{0, 2});

    std::set<int> images;
    for (Dir d : all_dirs) {
        const F9 e = dir_to_f9(d);
        CHECK_FALSE(e.is_zero());
        images.insert(e.index());
        CHECK(f9_to_dir(e) == d);
    }
    CHECK(images.size() == 8);
    CHECK_THROWS_AS(f9_to_dir(F9::zero()), Error);
}

TEST_CASE("1 + x generates the multiplicative group") {
    const F9 g{1, 1};
    std::set<int> powers;
    F9 acc = F9::one();
    for (int k = 1; k <= 8; ++k) {
        acc = acc * g;
        powers.insert(acc.index());
    }
    CHECK(powers.size() == 8);       // cyclic of order 8
    CHECK(acc == F9::one());         // g^8 = 1
    CHECK(f9_pow(g, 4) == F9{2, 0}); // g^4 = -1
}

TEST_CASE("field arithmetic spot laws") {
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            const F9 x = F9::from_index(a), y = F9::from_index(b);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK(x * y == oracles::poly_mul(x, y));
            for (int c = 0; c < 9; ++c) {
                const F9 z = F9::from_index(c);
                CHECK((x + y) + z == x + (y + z));
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
        }
}

TEST_CASE("entrywise sums: east plus east is west") {
    const GeneralizedBoard e = GeneralizedBoard::from_board(Board::filled(3, Dir::E));
    const GeneralizedBoard w = GeneralizedBoard::from_board(Board::filled(3, Dir::W));
    CHECK(gb_add(e, e) == w);  // 1 + 1 = 2 = -1

    const GeneralizedBoard a = GeneralizedBoard::from_board(Board::random(5, 12));
    CHECK(gb_add(a, GeneralizedBoard::zero_board(5)) == a);
    CHECK_THROWS_AS(gb_add(a, e), Error);
}

TEST_CASE("matrix products match the schoolbook oracle") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::vector<F9> ac(25), bc(25);
        for (int f = 0; f < 25; ++f) {
            ac[f] = F9::from_index(static_cast<int>(rng::at(seed, f) % 9));
            bc[f] = F9::from_index(static_cast<int>(rng::at(seed ^ 0xabc, f) % 9));
        }
        const GeneralizedBoard a(5, ac), b(5, bc);
        CHECK(gb_mul(a, b) == oracles::schoolbook_gb_mul(a, b));
    }
}

TEST_CASE("zero cells are dead; zero-free boards solve like plain ones") {
    CHECK_FALSE(solve_generalized(GeneralizedBoard::zero_board(5)).solvable);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Board b = Board::random(5, seed);
        const SolveResult plain = solve(b);
        const SolveResult gen = solve_generalized(GeneralizedBoard::from_board(b));
        CHECK(plain.solvable == gen.solvable);
        if (plain.solvable) CHECK(*plain.length == *gen.length);
    }

    // killing the start cell kills the game
    const Board se = Board::filled(3, Dir::SE);
    GeneralizedBoard gb = GeneralizedBoard::from_board(se);
    std::vector<F9> cells(gb.cells().begin(), gb.cells().end());
    cells[0] = F9::zero();
    CHECK_FALSE(solve_generalized(GeneralizedBoard(3, cells)).solvable);
    // a dead center is still a winning square
    cells[0] = dir_to_f9(Dir::SE);
    cells[4] = F9::zero();
    const SolveResult r = solve_generalized(GeneralizedBoard(3, cells));
    CHECK(r.solvable);
    CHECK(*r.length == 1);
}

TEST_CASE("generalized board text round trip") {
    std::vector<F9> cells(25);
    for (int f = 0; f < 25; ++f) cells[f] = F9::from_index((f * 5 + 3) % 9);
    const GeneralizedBoard gb(5, cells);
    const std::string text = serialize_generalized(gb);
    CHECK(text.substr(0, 5) == "f9 5\n");
    CHECK(parse_generalized(text) == gb);
    CHECK_THROWS_AS(parse_generalized("f9 3\n012\n34\n678\n"), ParseError);
    CHECK_THROWS_AS(parse_generalized("f9 3\n012\n349\n678\n"), ParseError);
    CHECK_THROWS_AS(parse_generalized("n 3 plain\n333\n333\n333\n"), ParseError);
}
