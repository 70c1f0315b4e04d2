#pragma once

// Named polynomial families: Chebyshev U_n, the signed-binomial P_n, the
// characteristic polynomials of the tridiagonal matrices T'_n / T_n and of
// the unit-primitive matrix A_n, plus Euler (zigzag) numbers. Each family
// comes from its explicit formula; recurrence cross-checks live in the tests.

#include "zigzag/exact.hpp"

namespace zigzag::polyfam {

// U_n by the three-term recurrence U_0 = 1, U_1 = 2x,
// U_n = 2x U_{n-1} - U_{n-2}. Memoized.
Poly chebyshev_u(int n);

// P_n(x) = sum_{k=0}^{n} (-1)^{floor(3k/2)} C(floor((n+k)/2), k) x^k.
// Equals det(I_n - x A_n). Memoized.
Poly p_poly(int n);

// Characteristic polynomial of the 0/1 tridiagonal matrix T'_n, computed as
// U_n(x/2) expanded exactly. char_poly_tprime(0) := 1 (empty determinant).
Poly char_poly_tprime(int n);

// f_{T_n}(x) = f_{T'_n}(x) - f_{T'_{n-1}}(x), n >= 1.
Poly char_poly_t(int n);

// f_{A_n}(x) = sum_k (-1)^{floor(3k/2)} C(floor((n+k)/2), k) x^{n-k}
//            = x^n P_n(1/x), n >= 1.
Poly char_poly_a(int n);

// n-th zigzag number (sec-tan coefficients times n!), by the
// Seidel-Entringer boustrophedon triangle. E_0 = E_1 = 1, E_5 = 16.
Int euler_number(int n);

}  // namespace zigzag::polyfam
