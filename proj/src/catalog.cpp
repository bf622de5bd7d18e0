#include "vdc/catalog.hpp"

namespace vdc::catalog {

Permutation sigma12_extreme() { return Permutation({0, 7, 3, 10, 5, 2, 9, 6, 1, 8, 4, 11}); }

Permutation sigma12_star() { return Permutation({0, 5, 9, 3, 7, 1, 10, 4, 8, 2, 6, 11}); }

Permutation sigma36() {
    return Permutation({0,  25, 17, 7,  31, 11, 20, 3,  27, 13, 34, 22,
                        5,  15, 29, 9,  23, 1,  18, 32, 8,  28, 14, 4,
                        21, 33, 12, 26, 2,  19, 10, 30, 6,  16, 24, 35});
}

Permutation sigma60() {
    return Permutation({0,  15, 30, 40, 2,  48, 20, 35, 8,  52, 23, 43, 12, 26, 55,
                        4,  32, 45, 17, 37, 6,  50, 28, 10, 57, 21, 41, 13, 33, 54,
                        1,  25, 46, 18, 38, 5,  49, 29, 9,  58, 22, 42, 14, 34, 53,
                        3,  27, 47, 16, 36, 7,  51, 19, 44, 31, 11, 56, 24, 39, 59});
}

Permutation sigma84() {
    return Permutation({0,  22, 64, 32, 50, 76, 10, 38, 56, 18, 72, 45, 6,  28, 59, 79, 41,
                        13, 67, 25, 54, 2,  36, 70, 16, 48, 81, 30, 61, 8,  43, 74, 20, 52,
                        4,  34, 66, 15, 46, 77, 26, 11, 62, 39, 82, 57, 23, 69, 33, 3,  51,
                        19, 73, 42, 7,  60, 29, 80, 47, 14, 65, 35, 1,  53, 24, 68, 12, 40,
                        78, 58, 27, 5,  44, 71, 17, 55, 37, 83, 21, 49, 75, 9,  31, 63});
}

Permutation sigma19() {
    return Permutation({0, 11, 5, 15, 9, 3, 17, 7, 13, 1, 12, 6, 16, 2, 8, 14, 4, 10, 18});
}

Permutation sigma57() {
    return Permutation({0,  24, 37, 8,  43, 18, 52, 29, 11, 48, 33, 4,  21, 40, 14,
                        54, 26, 45, 6,  35, 16, 50, 31, 2,  20, 39, 10, 47, 27, 55,
                        13, 42, 23, 3,  32, 51, 17, 36, 7,  46, 28, 56, 15, 41, 22,
                        5,  34, 49, 9,  25, 53, 38, 12, 30, 1,  19, 44});
}

Permutation by_name(const std::string& name) {
    if (name == "sigma12") return sigma12_extreme();
    if (name == "sigma12star") return sigma12_star();
    if (name == "sigma36") return sigma36();
    if (name == "sigma60") return sigma60();
    if (name == "sigma84") return sigma84();
    if (name == "sigma19") return sigma19();
    if (name == "sigma57") return sigma57();
    throw validation_error("unknown catalog permutation: " + name);
}

}  // namespace vdc::catalog
