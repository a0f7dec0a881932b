#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "forge/anomaly.hpp"
#include "forge/arith.hpp"
#include "forge/elliptic.hpp"
#include "forge/error.hpp"
#include "forge/field.hpp"
#include "forge/poly.hpp"

namespace forge {

enum class Branch { Generic, SpecialAZero };
std::string_view to_string(Branch b);

/// Slope polynomial of the curve: k^8 + 18a k^4 + 108b k^2 - 27a^2, or k^6 + 108b when a = 0.
struct ConstructionPoly {
    Curve curve;
    PolyQ P;
    Branch branch;
};

ConstructionPoly build_polynomial(const Curve& E);

/// -2^24 3^21 a^2 (4a^3 + 27b^2)^e
Rat disc_closed_form(const Curve& E, unsigned exponent);

struct DiscFormulaCheck {
    Rat computed;   // discriminant(P) through resultants
    Rat predicted;  // closed form with exponent 3
    bool matches = false;
    /// Exponent e in 0..12 for which the closed form reproduces `computed`, if any.
    std::optional<unsigned> fitted_exponent;
};

/// WrongBranch when a = 0.
DiscFormulaCheck check_disc_formula(const Curve& E);
bool verify_disc_formula(const Curve& E);

/// Both sides of 108 k^2 (x^3 + a x + b - y^2) = P(k) - 4 k^2 t^3 with x = (k^2 - t)/3,
/// y = (k^4 + 3a - 2k^2 t)/(6k), denominators cleared. For a = 0 the right side is
/// k^2 (P(k) - 4 t^3).
struct PhiIdentitySides {
    BiPolyQ lhs;
    BiPolyQ rhs;
};
PhiIdentitySides phi_identity_sides(const Curve& E);
bool verify_phi_identity(const Curve& E);

/// 27 psi3(k^2/3) = P(k), or k^2 P(k) when a = 0.
bool verify_psi3_identity(const Curve& E);

struct MValue {
    Rat m_x;
    CubeClass cube_class;
};

/// m_x = P(x)/(4x^2) (generic) or P(x)/4 (a = 0).
MValue m_value(const Curve& E, const Rat& x);
MValue m_value(const ConstructionPoly& cp, const Rat& x);

using LiftedPoint = std::variant<Point<Rat>, Point<RadicalElem>>;

struct AscentRecord {
    Rat x;
    Rat m_x;
    CubeClass cube_class;
    LiftedPoint point;
    bool on_curve = false;
    TorsionVerdict verdict;
    std::vector<DivisorClass> anomalous_divisors;  // primes dividing m0

    bool trivial_class() const { return cube_class.trivial(); }
};

/// The lifted point (x_E, y_E) = ((x^2 - t)/3, (x^4 + 3a - 2x^2 t)/(6x)) with t = c r, r^3 = m0.
/// InvalidParameter for x = 0 (the map has a pole there in both branches).
AscentRecord lift_point(const Curve& E, const Rat& x, const TorsionOptions& opts = {});

/// Parameter enumeration: integers lo..hi, or rationals p/q with 0 < |p|, q <= H, gcd(p, q) = 1.
class ParamSpec {
   public:
    static ParamSpec integers(const Int& lo, const Int& hi);
    static ParamSpec rationals(unsigned height);

    /// Ascending. InvalidInput when empty.
    std::vector<Rat> values() const;

   private:
    enum class Mode { IntegerRange, RationalHeight };
    Mode mode_ = Mode::IntegerRange;
    Int lo_ = 1, hi_ = 0;
    unsigned height_ = 0;
};

struct SkippedParam {
    Rat x;
    ErrorKind reason;
    std::string notice;
};

struct AscentRun {
    std::vector<AscentRecord> records;
    std::vector<SkippedParam> skipped;
    std::vector<Int> distinct_m0;  // ascending
};

AscentRun ascend_range(const Curve& E, const ParamSpec& params, unsigned jobs = 1, const TorsionOptions& opts = {});

}  // namespace forge
