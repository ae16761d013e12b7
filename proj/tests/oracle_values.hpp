#pragma once
// Frozen output of tests/oracles/oracles.py and tests/oracles/tree_types.py (sympy / mpmath / brute force).

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace oracle {

using Cx = std::complex<double>;

// tree_types.py: valid types, filter-passing types, sum of component counts
struct EnumCounts {
    int d, n, total, filtered, component_sum;
};
inline const std::vector<EnumCounts> enum_counts{
    {2, 5, 667, 20, 20}, {2, 4, 47, 16, 16}, {3, 4, 51, 17, 22},
    {4, 4, 51, 17, 30}, {5, 4, 51, 17, 40}, {6, 4, 51, 17, 52},
};

// disc((d+1)s^d - d s^(d-1) - 1), d = 2..6
inline const std::vector<long> disc_g{16, -540, -38912, 4850000, 929947392};

// y^2 + a1 xy = x^3 + a4 x after x -> alpha x, y -> alpha y
constexpr int alpha = -1, a1 = -3, a4 = 1;
constexpr long disc_num = 17;
constexpr long j_num = 35937, j_den = 17;
inline const std::string transformed_curve = "-x^3 + x^2 z + xyz + xz^2 + y^2 z + yz^2";

// point orders among the rational punctures
constexpr int order_p1 = 4, order_p3 = 2, order_p4 = 4;

// lattice of the long form
constexpr double g2 = 2.75, g3 = -0.375;
constexpr double w1 = 3.09415950710224, w2_im = 2.74573911808975;

struct WpSample {
    Cx u, p, dp;
};
inline const std::vector<WpSample> wp_samples{
    {{0.37, 0.81}, {-0.892971822829787, -0.860820544472533}, {2.87337632075429, -0.577410620541983}},
    {{1.2, -0.4}, {0.658722810578103, 0.253544030131591}, {-0.295808165056242, -0.942771449520006}},
    {{0.05, 0.02}, {249.703023583885, -237.811853530933}, {-5330.25809735175, 11644.5993666966}},
};

// points of Per_{2,5} over x3 = 2: (x4, x5, X, Y)
struct CurvePoint {
    Cx x4, x5, X, Y;
};
inline const std::vector<CurvePoint> points_x3_2{
    {{-1.4054027631772941, -0.22957735835807647}, {0.85018565857591298, 3.7321785302751571},
     {-0.34058543281920730, -0.50598991595521411}, {-1.2678215688763214, -1.636212355261094922}},
    {{-1.4054027631772941, 0.22957735835807647}, {0.85018565857591298, -3.7321785302751571},
     {-0.34058543281920730, 0.50598991595521411}, {-1.2678215688763214, 1.636212355261094922}},
    {{0.77766733940517345, 0}, {1.1726933415745283, 0}, {-0.81433799850737054978, 0}, {0.46563337472831283366, 0}},
    {{1.0165690934747074, -4.3884219407974491}, {-0.43653232936317711, -1.2929904808107387},
     {1.7477544320728925783, 0.49617676763147277}, {3.5350048815121649838, 0.18667455944566138}},
    {{1.0165690934747074, 4.3884219407974491}, {-0.43653232936317711, 1.2929904808107387},
     {1.7477544320728925783, -0.49617676763147277}, {3.5350048815121649838, -0.18667455944566138}},
};

// chart (X, Y) of the 20 PCF points
inline const std::vector<std::pair<Cx, Cx>> pcf_chart{
    {{-4.38863399114773, 0}, {4.91702482540649, 0}},
    {{0.0234682956442633, -0.438846303643627}, {0.255581944760792, 0.0421367185260571}},
    {{0.0234682956442633, 0.438846303643627}, {0.255581944760792, -0.0421367185260571}},
    {{0.733705147917469, 0}, {1.38787569179508, 0}},
    {{1.60799225194173, 0}, {2.18393559327684, 0}},
    {{-1.04994658326971, 0}, {0.590205416802958, 0}},
    {{0.422239979249232, -0.177350849959528}, {0.728610846122683, -0.635316154807581}},
    {{0.422239979249232, 0.177350849959528}, {0.728610846122683, 0.635316154807581}},
    {{2.10273331238563, -0.345708797937109}, {2.47628644547584, -1.71272091292985}},
    {{2.10273331238563, 0.345708797937109}, {2.47628644547584, 1.71272091292985}},
    {{-0.249851588864255, 0}, {0.262330822052533, 0}},
    {{0.684486902995135, -1.05050752670245}, {0.102709332967476, -0.564960610308355}},
    {{0.684486902995135, 1.05050752670245}, {0.102709332967476, 0.564960610308355}},
    {{1.44043889143699, -0.686318705053714}, {3.26612525600626, -0.945172806369265}},
    {{1.44043889143699, 0.686318705053714}, {3.26612525600626, 0.945172806369265}},
    {{-0.770017843674630, 0}, {-2.75523594308942, 0}},
    {{-0.656262615554286, -0.982563993931970}, {0.148026964571456, 0.382870536342214}},
    {{-0.656262615554286, 0.982563993931970}, {0.148026964571456, -0.382870536342214}},
    {{0.648790675148792, 0}, {0.814424211842414, 0}},
    {{1.43375239963441, 0}, {2.64475780210409, 0}},
};

}  // namespace oracle
