#pragma once

#include <stdexcept>
#include <string>

namespace pho {

// Pole or out-of-domain argument (e.g. Gamma at a non-positive integer).
class domain_error : public std::domain_error {
    using std::domain_error::domain_error;
};

// Result magnitude exceeds the double range.
class overflow_error : public std::range_error {
    using std::range_error::range_error;
};

// Cancellation ate the digit budget; the value would be meaningless.
class accuracy_loss_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of subdivisions before reaching tolerance.
class convergence_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Momentum Renyi/Tsallis order at or below the convergence threshold:
// the integral diverges, this is not a numeric failure.
class below_threshold_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Near-threshold momentum integral whose algebraic tail cannot be bridged
// to the asymptotic regime at this eta; flagged distinctly from plain
// nonconvergence.
class near_threshold_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-difference grid too coarse for the requested accuracy.
class grid_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}
