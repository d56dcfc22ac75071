#pragma once

#include "gtnl/behavior.hpp"

#include <string>
#include <vector>

namespace gtnl {

/// A linear witness B.P <= bound over a scenario's probability entries.
/// Coefficients are exact rationals (the bundled witnesses are integers).
struct BellVector {
    Scenario scenario;
    std::vector<Rat> coeffs;
    Rat bound;
    std::string label;

    BellVector() = default;
    BellVector(const Scenario& s, std::vector<Rat> c, Rat beta, std::string lbl)
        : scenario(s), coeffs(std::move(c)), bound(std::move(beta)), label(std::move(lbl))
    {
        if (static_cast<int>(coeffs.size()) != s.entries())
            throw std::invalid_argument("bell vector length does not match scenario");
    }
};

enum class WitnessId { MAO, CAO };

inline const char* witness_name(WitnessId id) { return id == WitnessId::MAO ? "mao" : "cao"; }

/// The two bundled tripartite witnesses with integer coefficient tables
/// (bounds 4 and 8).
BellVector standard_witness(WitnessId id);

/// The extra-setting witness over the (2,3,2) scenario (96 coefficients,
/// bound 4), in its linearized sum-of-probabilities form.
BellVector jw_pan_witness();

Rat witness_value(const BellVector& w, const BehaviorQ& b);
double witness_value(const BellVector& w, const Behavior& b);

}  // namespace gtnl
