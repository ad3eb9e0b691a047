#include "msy/reference_levels.hpp"

#include <array>

namespace msy {

namespace {

// Published energies of the four benchmark configurations
// (alpha = 0.01, M = 5 fm^-1, A = 1, B = -2, C = 1, D = -1, V1 = 0.1;
//  V0 = -0.2 for the pseudospin tables, +0.2 for the spin tables).
constexpr std::array<ReferenceLevel, 192> kLevels{{
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, -1, 0.0, -5.009375979},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, -1, 0.5, -5.009327474},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 0, 2, 0.0, -5.009375979},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 0, 2, 0.5, -5.009443876},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, -2, 0.0, -5.009531153},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, -2, 0.5, -5.009443876},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 0, 3, 0.0, -5.009531153},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 0, 3, 0.5, -5.009637797},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, -3, 0.0, -5.00976379},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, -3, 0.5, -5.009637797},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 0, 4, 0.0, -5.00976379},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 0, 4, 0.5, -5.009909113},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, -4, 0.0, -5.010073741},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, -4, 0.5, -5.009909113},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 0, 5, 0.0, -5.010073741},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 0, 5, 0.5, -5.01025765},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, -1, 0.0, -5.014732692},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, -1, 0.5, -5.01468506},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, 2, 0.0, -5.014732692},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, 2, 0.5, -5.014799366},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, -2, 0.0, -5.014885072},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, -2, 0.5, -5.014799366},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, 3, 0.0, -5.014885072},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, 3, 0.5, -5.014989796},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, -3, 0.0, -5.015113521},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, -3, 0.5, -5.014989796},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, 4, 0.0, -5.015113521},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, 4, 0.5, -5.015256229},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, -4, 0.0, -5.015417895},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, -4, 0.5, -5.015256229},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, 5, 0.0, -5.015417895},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 1, 5, 0.5, -5.015598495},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 3, -1, 0.0, -5.019956641},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 3, -1, 0.5, -5.019909859},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, 2, 0.0, -5.019956641},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, 2, 0.5, -5.020022126},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 3, -2, 0.0, -5.020106303},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 3, -2, 0.5, -5.020022126},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, 3, 0.0, -5.020106303},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, 3, 0.5, -5.020209158},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 3, -3, 0.0, -5.020330677},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 3, -3, 0.5, -5.020209158},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, 4, 0.0, -5.020330677},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, 4, 0.5, -5.020470839},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 3, -4, 0.0, -5.020629623},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 3, -4, 0.5, -5.020470839},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, 5, 0.0, -5.020629623},
    {1, SymmetryLimit::pseudospin, PotentialChoice::first, 2, 5, 0.5, -5.020807004},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, -2, 0.0, 5.001904476},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, -2, 0.5, 5.001854816},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, 1, 0.0, 5.001904476},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, 1, 0.5, 5.001973989},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, -3, 0.0, 5.002063344},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, -3, 0.5, 5.001973989},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, 2, 0.0, 5.002063344},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, 2, 0.5, 5.002172527},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, -4, 0.0, 5.002301519},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, -4, 0.5, 5.002172527},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, 3, 0.0, 5.002301519},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, 3, 0.5, 5.0024503},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, -5, 0.0, 5.002618847},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, -5, 0.5, 5.0024503},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, 4, 0.0, 5.002618847},
    {2, SymmetryLimit::spin, PotentialChoice::first, 0, 4, 0.5, 5.002807131},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, -2, 0.0, 5.007439826},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, -2, 0.5, 5.007391068},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, 1, 0.0, 5.007439826},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, 1, 0.5, 5.007508074},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, -3, 0.0, 5.007595804},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, -3, 0.5, 5.007508074},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, 2, 0.0, 5.007595804},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, 2, 0.5, 5.007703001},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, -4, 0.0, 5.007829648},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, -4, 0.5, 5.007703001},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, 3, 0.0, 5.007829648},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, 3, 0.5, 5.007975724},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, -5, 0.0, 5.008141207},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, -5, 0.5, 5.007975724},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, 4, 0.0, 5.008141207},
    {2, SymmetryLimit::spin, PotentialChoice::first, 1, 4, 0.5, 5.008326069},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, -2, 0.0, 5.01283763},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, -2, 0.5, 5.012789751},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, 1, 0.0, 5.01283763},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, 1, 0.5, 5.012904649},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, -3, 0.0, 5.012990798},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, -3, 0.5, 5.012904649},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, 2, 0.0, 5.012990798},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, 2, 0.5, 5.013096063},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, -4, 0.0, 5.013220428},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, -4, 0.5, 5.013096063},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, 3, 0.0, 5.013220428},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, 3, 0.5, 5.013363873},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, -5, 0.0, 5.013526376},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, -5, 0.5, 5.013363873},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, 4, 0.0, 5.013526376},
    {2, SymmetryLimit::spin, PotentialChoice::first, 2, 4, 0.5, 5.01370791},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, -1, 0.0, -5.106436115},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, -1, 0.5, -5.106387711},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 0, 2, 0.0, -5.106436115},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 0, 2, 0.5, -5.10650387},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, -2, 0.0, -5.106590965},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, -2, 0.5, -5.10650387},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 0, 3, 0.0, -5.106590965},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 0, 3, 0.5, -5.106697386},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, -3, 0.0, -5.106823116},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, -3, 0.5, -5.106697386},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 0, 4, 0.0, -5.106823116},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 0, 4, 0.5, -5.106968137},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, -4, 0.0, -5.107132424},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, -4, 0.5, -5.106968137},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 0, 5, 0.0, -5.107132424},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 0, 5, 0.5, -5.107315951},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, -1, 0.0, -5.11182877},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, -1, 0.5, -5.111781234},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, 2, 0.0, -5.11182877},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, 2, 0.5, -5.111895309},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, -2, 0.0, -5.111980842},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, -2, 0.5, -5.111895309},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, 3, 0.0, -5.111980842},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, 3, 0.5, -5.112085355},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, -3, 0.0, -5.112208832},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, -3, 0.5, -5.112085355},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, 4, 0.0, -5.112208832},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, 4, 0.5, -5.112351252},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, -4, 0.0, -5.112512595},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, -4, 0.5, -5.112351252},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, 5, 0.0, -5.112512595},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 1, 5, 0.5, -5.112692834},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 3, -1, 0.0, -5.11708862},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 3, -1, 0.5, -5.117041929},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, 2, 0.0, -5.11708862},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, 2, 0.5, -5.117153977},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 3, -2, 0.0, -5.11723799},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 3, -2, 0.5, -5.117153977},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, 3, 0.0, -5.11723799},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, 3, 0.5, -5.117340646},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 3, -3, 0.0, -5.117461929},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 3, -3, 0.5, -5.117340646},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, 4, 0.0, -5.117461929},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, 4, 0.5, -5.117601819},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 3, -4, 0.0, -5.117760296},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 3, -4, 0.5, -5.117601819},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, 5, 0.0, -5.117760296},
    {3, SymmetryLimit::pseudospin, PotentialChoice::second, 2, 5, 0.5, -5.117937335},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, -2, 0.0, 4.904873061},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, -2, 0.5, 4.904823288},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, 1, 0.0, 4.904873061},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, 1, 0.5, 4.904942731},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, -3, 0.0, 4.905032288},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, -3, 0.5, 4.904942731},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, 2, 0.0, 4.905032288},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, 2, 0.5, 4.905141716},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, -4, 0.0, 4.905270998},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, -4, 0.5, 4.905141716},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, 3, 0.0, 4.905270998},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, 3, 0.5, 4.905420113},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, -5, 0.0, 4.905589037},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, -5, 0.5, 4.905420113},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, 4, 0.0, 4.905589037},
    {4, SymmetryLimit::spin, PotentialChoice::second, 0, 4, 0.5, 4.905777742},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, -2, 0.0, 4.910372527},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, -2, 0.5, 4.910323664},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, 1, 0.0, 4.910372527},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, 1, 0.5, 4.910440925},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, -3, 0.0, 4.910528846},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, -3, 0.5, 4.910440925},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, 2, 0.0, 4.910528846},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, 2, 0.5, 4.910636276},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, -4, 0.0, 4.910763198},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, -4, 0.5, 4.910636276},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, 3, 0.0, 4.910763198},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, 3, 0.5, 4.910909592},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, -5, 0.0, 4.911075433},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, -5, 0.5, 4.910909592},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, 4, 0.0, 4.911075433},
    {4, SymmetryLimit::spin, PotentialChoice::second, 1, 4, 0.5, 4.911260694},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, -2, 0.0, 4.915734463},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, -2, 0.5, 4.915686483},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, 1, 0.0, 4.915734463},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, 1, 0.5, 4.915801623},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, -3, 0.0, 4.915887953},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, -3, 0.5, 4.915801623},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, 2, 0.0, 4.915887953},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, 2, 0.5, 4.91599344},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, -4, 0.0, 4.916118066},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, -4, 0.5, 4.91599344},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, 3, 0.0, 4.916118066},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, 3, 0.5, 4.916261812},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, -5, 0.0, 4.916424654},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, -5, 0.5, 4.916261812},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, 4, 0.0, 4.916424654},
    {4, SymmetryLimit::spin, PotentialChoice::second, 2, 4, 0.5, 4.916606567},
}};

}  // namespace

std::span<const ReferenceLevel> reference_levels() { return kLevels; }

std::vector<ReferenceLevel> reference_levels(int table) {
    std::vector<ReferenceLevel> out;
    for (const auto& lvl : kLevels)
        if (lvl.table == table) out.push_back(lvl);
    if (out.empty()) throw std::invalid_argument("reference_levels: table must be 1..4");
    return out;
}

PotentialParams benchmark_params(SymmetryLimit limit) {
    PotentialParams p;
    p.V0 = limit == SymmetryLimit::pseudospin ? -0.2 : 0.2;
    p.V1 = 0.1;
    p.A = 1.0;
    p.B = -2.0;
    p.C = 1.0;
    p.D = -1.0;
    p.alpha = 0.01;
    return p;
}

SymmetrySpec benchmark_spec(SymmetryLimit limit, PotentialChoice choice, double H) {
    SymmetrySpec s;
    s.limit = limit;
    s.choice = choice;
    s.tail = TailForm::squared;
    s.sym_const = 0.0;
    s.H = H;
    s.M = 5.0;
    return s;
}

int benchmark_table(SymmetryLimit limit, PotentialChoice choice) {
    const int base = choice == PotentialChoice::first ? 1 : 3;
    return base + (limit == SymmetryLimit::spin ? 1 : 0);
}

}  // namespace msy
