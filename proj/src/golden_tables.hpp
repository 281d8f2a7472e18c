#pragma once

// Transcribed reference tables used by the reproduction checks and the
// acceptance suite.  All data is 0-based.

#include <array>
#include <string>
#include <vector>

namespace cdp::goldens {

// --- named permutation sets (cycle notation, 1-based ground set) -----------

inline const std::vector<std::string> kSigma3 = {"(23)", "(12)", "(13)"};
inline const std::vector<std::string> kSigma4 = {"(34)", "(12)", "(13)(24)", "(14)(23)"};
inline const std::vector<std::string> kSigma4Prime = {"(234)", "(124)", "(132)", "(143)"};
inline const std::vector<std::string> kSigma5 = {"id", "(12)(345)", "(13)(542)", "(14)(352)",
                                                 "(15)(243)"};
inline const std::vector<std::string> kV4 = {"id", "(12)(34)", "(13)(24)", "(14)(23)"};
inline const std::vector<std::string> kRegularS3 = {
    "id", "(123)(456)", "(132)(465)", "(14)(26)(53)", "(15)(24)(36)", "(16)(25)(34)"};
inline const std::vector<std::string> kConjugatedRegularS3 = {
    "id", "(132)(456)", "(123)(465)", "(14)(25)(63)", "(15)(26)(34)", "(16)(24)(35)"};
inline const std::vector<std::string> kConjugatedSigma4 = {"id", "(12)(34)", "(1324)", "(1423)"};

// --- 16x16 sparsity patterns over C(4) and V(4) -----------------------------
// Block index k(i, j) of each structural nonzero at dense coordinate
// ((i, sigma_k(i)), (j, sigma_k(j))); -1 marks a structural zero.  The rows
// below are the letter layout of the reference displays with a=0, b=1, c=2,
// d=3.

std::array<std::array<int, 16>, 16> pattern_c4();
std::array<std::array<int, 16>, 16> pattern_v4();

// --- Breuer-Hall 16x16 reference table --------------------------------------
// The transcribed table as printed; its off-diagonal entries carry the
// opposite sign from sum_ij e_ij (x) B(e_ij) (see the reproduction check).

std::array<std::array<int, 16>, 16> breuer_hall_table();

}  // namespace cdp::goldens
