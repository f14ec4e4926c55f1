#pragma once

// Published counting sequences, transcribed verbatim (n = 1..20).

#include <array>

namespace chordal::reference {

// n, g_n, c_n, b_n
struct GraphRow {
  unsigned n;
  const char* g;
  const char* c;
  const char* b;
};

inline constexpr std::array<GraphRow, 20> graph_table{{
    {1, "1", "1", "0"},
    {2, "2", "1", "1"},
    {3, "8", "4", "1"},
    {4, "61", "35", "7"},
    {5, "821", "540", "110"},
    {6, "17962", "13116", "2880"},
    {7, "589912", "462868", "108486"},
    {8, "26990539", "22189056", "5376448"},
    {9, "1611421595", "1364476032", "330554736"},
    {10, "119106036226", "102768330140", "24223100940"},
    {11, "10475032926304", "9150009283316", "2056900853260"},
    {12, "1064759262580675", "937871756182824", "198279609266376"},
    {13, "122455558249650523", "108501459033647056", "21365210239261824"},
    {14, "15683814373288014514", "13957140054455406368", "2542622031178234096"},
    {15, "2210104382919809469776", "1973316500054545453200", "331005569819483825280"},
    {16, "339419270505312015418873", "303844760227083629476736", "46769563108388612386560"},
    {17, "56377137858208036652271961", "50574398535605806604877952", "7125735843407702680130176"},
    {18, "10064213826097447392585326650", "9043978529936559892024953936",
     "1164214191212133452455716432"},
    {19, "1920763688236792486611031950040", "1728560464917767130397726200016",
     "203006967721530831955744610256"},
    {20, "390147921384971528200998632189581", "351542184165686400289151814740320",
     "37624686779731200180043318035040"},
}};

// n, M_n, B_n (maps with n edges)
struct MapRow {
  unsigned n;
  const char* m;
  const char* b;
};

inline constexpr std::array<MapRow, 20> map_table{{
    {1, "1", "1"},
    {2, "2", "0"},
    {3, "6", "1"},
    {4, "22", "0"},
    {5, "92", "5"},
    {6, "419", "1"},
    {7, "2025", "35"},
    {8, "10214", "16"},
    {9, "53192", "288"},
    {10, "283921", "210"},
    {11, "1545326", "2607"},
    {12, "8544766", "2612"},
    {13, "47867107", "25155"},
    {14, "271091848", "31885"},
    {15, "1549624321", "254255"},
    {16, "8929009486", "386672"},
    {17, "51807558686", "2663101"},
    {18, "302430309885", "4682253"},
    {19, "1774979731304", "28696460"},
    {20, "10467456794046", "56747900"},
}};

// Printed values of the constants in the two asymptotic theorems and their
// proofs, keyed by the names used in ConstantsReport.
struct PrintedConstant {
  int theorem;
  const char* name;
  const char* value;
};

inline constexpr std::array<PrintedConstant, 31> printed_constants{{
    {1, "rho_b", "0.092859"},
    {1, "gamma_b", "10.76897"},
    {1, "E0", "1.16454"},
    {1, "S0", "0.41919"},
    {1, "rho_b*E0^3", "0.14665"},
    {1, "E1", "0.092354"},
    {1, "B0", "0.0044796"},
    {1, "B2", "0.0085328"},
    {1, "B3", "0.00038321"},
    {1, "b", "0.00016215"},
    {1, "tau", "0.092859"},
    {1, "E(tau)", "1.16446"},
    {1, "rho", "0.084088"},
    {1, "gamma", "11.89235"},
    {1, "C0", "0.00037470"},
    {1, "C2", "0.092859"},
    {1, "C3_printed_formula", "0.00027194"},
    {1, "G0", "1.00037"},
    {1, "G2", "0.092894"},
    {1, "G3", "0.00027205"},
    {1, "c", "0.00027194"},
    {1, "g", "0.00027205"},
    {1, "p", "0.99963"},
    {2, "1/sigma_b", "3.65370"},
    {2, "B(sigma_b)", "0.33301"},
    {2, "b1", "0.12704"},
    {2, "b", "0.071674"},
    {2, "1/sigma", "6.40375"},
    {2, "M(sigma)", "0.31055"},
    {2, "m1", "0.22326"},
    {2, "m", "0.12596"},
}};

inline constexpr const char* printed_subcritical_maps = "0.26821";

}  // namespace chordal::reference
