#pragma once

// Reference modular co-number table for the primes (2, 3, 5), entered by hand
// rather than generated. Used by `table1 --check`.

namespace wavenum {

inline constexpr const char* kReferenceTable235Csv =
    "k,r2,r3,r5,product\n"
    "1,1/2,1/3,1/5,1/30\n"
    "2,□,2/3,2/5,□\n"
    "3,1/2,□,3/5,□\n"
    "4,□,1/3,4/5,□\n"
    "5,1/2,2/3,□,□\n"
    "6,□,□,1/5,□\n"
    "7,1/2,1/3,2/5,7/30\n"
    "8,□,2/3,3/5,□\n"
    "9,1/2,□,4/5,□\n"
    "10,□,1/3,□,□\n"
    "11,1/2,2/3,1/5,11/30\n"
    "12,□,□,2/5,□\n"
    "13,1/2,1/3,3/5,13/30\n"
    "14,□,2/3,4/5,□\n"
    "15,1/2,□,□,□\n"
    "16,□,1/3,1/5,□\n"
    "17,1/2,2/3,2/5,17/30\n"
    "18,□,□,3/5,□\n"
    "19,1/2,1/3,4/5,19/30\n"
    "20,□,2/3,□,□\n"
    "21,1/2,□,1/5,□\n"
    "22,□,1/3,2/5,□\n"
    "23,1/2,2/3,3/5,23/30\n"
    "24,□,□,4/5,□\n"
    "25,1/2,1/3,□,□\n"
    "26,□,2/3,1/5,□\n"
    "27,1/2,□,2/5,□\n"
    "28,□,1/3,3/5,□\n"
    "29,1/2,2/3,4/5,29/30\n"
    "30,□,□,□,□\n";

} // namespace wavenum
