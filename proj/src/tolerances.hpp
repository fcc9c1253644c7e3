#ifndef SMOOTHROOTS_TOLERANCES_HPP
#define SMOOTHROOTS_TOLERANCES_HPP

namespace smoothroots {

struct Tolerances {
    double zero = 1e-12;    // float-mode zero test
    double cluster = 1e-8;  // root clustering radius
    double hensel = 1e-9;   // admissible reconstruction residual
    double match = 1e-8;    // branch pairing across t = 0
};

} // namespace smoothroots

#endif
