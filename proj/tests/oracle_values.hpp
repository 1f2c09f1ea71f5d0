#pragma once

// Frozen expected values, computed once with a 60-digit arbitrary
// precision evaluation of the closed forms and stored here at 25
// significant digits (doubles keep ~17).

namespace oracle {

// z(1) for the eps = 0 reduction dz/dt = C z (1 + log z), z0 = e, C = 1:
// z(t) = exp((1 + log z0) e^{Ct} - 1) = exp(2e - 1).
inline constexpr double kZ1ClosedForm = 84.48412584713864962651756;

// Mild-form forcing at t = 1 with w == 0, C = 1, b = 1/e: exp(1/e - 1).
inline constexpr double kF1AtZeroHistory = 0.5314636053866156728169148;

// dz/dt at (z = e, a = 0, bint = 0, eps = 0.5, C = 1): 2.5 e.
inline constexpr double kBoussinesqRhsExample = 6.795704571147613088400719;

// nh-Euler H and dUpsilon/dt at (Ups = 2, a = 0, i2 = 1, eps = 1, C = 1):
// H = 1 + 4 ln 2, dUps/dt = 2 (1 + ln 2 + H).
inline constexpr double kNhEulerHExample = 3.772588722239781237668928;
inline constexpr double kNhEulerRhsExample = 10.93147180559945309417232;

// thresholds at C = 1, T = 0.1, M = 2 (m_tilde = 1).
inline constexpr double kEps1_T01_M2 = 3.348057193912129640123991;
inline constexpr double kEps2_T01_M2 = 13.12197087540047965069001;
inline constexpr double kLogL_T01_M2 = -0.2717028984017507753535516;

// thresholds at C = 1, T = 1, M = 2: log eps1 = log 2 - log 6 - exp(2e).
inline constexpr double kLogEps1_T1_M2 = -230.7502763721922422013248;
inline constexpr double kLogEps2_T1_M2 = -91.02075221398011674563792;

// Lipschitz constant at C = 1, T = 0.1, M = 4 (contraction certificate
// for w0 = 2): L and the resulting eps2 = 1/(T L).
inline constexpr double kL_T01_M4 = 102.9775374565660665265546;
inline constexpr double kEps2_T01_M4 = 0.09710855636082584104012421;

// ||sin x||_{H^3} on [0, 2 pi]^2 = 4 pi.
inline constexpr double kSinH3Norm = 12.56637061435917295385057;

// Admissible edge of the triple-log domain, e^{-e}.
inline constexpr double kTripleLogEdge = 0.06598803584531253707679019;

}  // namespace oracle
