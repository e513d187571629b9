// Draws the uncorrelatedness set of each construction inside a 10x10 box.

#include <iostream>
#include <string>

#include "uncorrset/constructions.hpp"
#include "uncorrset/engine/verify.hpp"

using namespace uncorrset;

static void draw(const std::string& title, const Construction& c, const Box& box) {
    const auto rep = verify_claim(c.x, c.support, c.descriptor, box);
    std::cout << title << "  " << c.descriptor.to_string() << "  " << to_string(rep.verdict) << ", "
              << to_string(rep.certificate) << "\n";
    for (unsigned k = box.K; k >= 1; --k) {
        std::cout << (k < 10 ? " " : "") << k << " ";
        for (unsigned j = 1; j <= box.J; ++j) {
            const bool hit = std::binary_search(rep.found.begin(), rep.found.end(), Point{j, k});
            std::cout << (hit ? " #" : " .");
        }
        std::cout << "\n";
    }
    std::cout << "    ";
    for (unsigned j = 1; j <= box.J; ++j) std::cout << ' ' << j % 10;
    std::cout << "\n\n";
}

int main() {
    const Support3 s = Support3::positive(1, 2, 3);
    const BetaSupport bs(1, 2);
    const Box box{10, 10};
    draw("empty", make_empty(s), box);
    draw("singleton", make_singleton(s, 2, 3), box);
    draw("two points", make_two_point(s, {2, 5}, {4, 3}), box);
    draw("vertical line", make_vline(s, 3), box);
    draw("cross", make_cross(s, 2, 3), box);
    draw("diagonal", make_diagonal(s), box);
    draw("anti-diagonal", make_antidiagonal(bs, 7), box);
    draw("slope line", make_slopeline(bs, 3), box);
}
