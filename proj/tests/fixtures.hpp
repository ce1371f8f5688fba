#pragma once

#include <string>
#include <vector>

// Worked instances of the prime-Dyck and Dyck-prefix bijections, transcribed
// from the two large examples; entries are row-major, rows left-aligned.
namespace fixtures {

// prime-Dyck instance: a 9-row increasing tableau T and its image V
inline const std::string kPrimeA = "uududduuududdudd";
inline const std::vector<std::vector<int>> kPrimeT = {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16}, {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16}, {5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17}, {7, 8, 9, 10, 11, 12, 14, 17}, {9, 10, 11, 12, 13, 15}, {11, 12, 13, 14, 16}, {13, 14, 15}, {15, 16}, {17}};
inline const std::vector<std::vector<int>> kPrimeV = {{1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3}, {1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3}, {1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 3}, {1, 1, 1, 1, 1, 3, 5}, {1, 1, 1, 1, 3}, {1, 1, 1, 3}, {1, 1}, {1}};

// Dyck-prefix instance: an 18-row increasing tableau and its multichain (W_r)
inline const std::vector<std::vector<int>> kPrefixT = {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39}, {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 35, 36, 38, 39}, {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 35, 36, 37}, {7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 30, 31, 32, 33, 34, 35, 36, 37, 38}, {9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 31, 32, 33, 34, 35, 36, 37, 38, 39}, {11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 32, 33, 34, 35, 37, 38, 39}, {13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 33, 34, 35, 37, 38}, {15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 32, 33, 34, 35, 36, 38}, {17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 32, 33, 34, 35, 36, 37, 39}, {19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 33, 34, 35, 36, 37}, {21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 34, 37, 38, 39}, {23, 24, 25, 26, 27, 28, 29, 31, 32, 33, 35, 38, 39}, {25, 26, 28, 30, 31, 32, 33, 34, 35, 39}, {29, 30, 31, 32, 33, 34, 35, 36}, {31, 32, 33, 34, 35, 36, 38}, {33, 34, 36, 37, 38, 39}, {36, 37, 39}, {39}};
inline const std::vector<std::string> kPrefixW = {"uuduuddduuduududduududuuduududdduudud", "uuduuddduuduududduududuuduuudddduudud", "uuuudddduuduududduududuuuududddduudud", "uuuudddduuduududduududuuuududddduuudu", "uuuudddduuduududduuduuuudududduduuudu", "uuuudddduuuuududdduduuuuduuduuuuuuduu", "uuuuuududuuuuuudddduududdduuuuduuuudu"};

}  // namespace fixtures
