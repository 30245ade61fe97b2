#pragma once

// Equations transcribed from the worked examples, in the CLI grammar.
namespace fx {

inline constexpr const char* factorial = "s(n+2)*s(n) - s(n+1)*(s(n)+s(n+1))";
inline constexpr const char* factorial_ratio =
    "s(n+2)*(s(n+1)^2*s(n) - s(n+1)^2 + s(n+1)*s(n) - s(n)) - s(n+1)*(2*s(n+1)*s(n) - s(n+1) - s(n))";
inline constexpr const char* bernoulli = "5*s(n+3)*s(n) - 6*s(n+2)*s(n+1) + s(n+1)*s(n)";
inline constexpr const char* bernoulli_cont = "25*s(n)*s(n+4) + 11*s(n)*s(n+2) - 36*s(n+2)^2 + s(n+3)";
inline constexpr const char* interlace_a = "2*s(n)*s(n+1) + s(n) + s(n+1)";
inline constexpr const char* interlace_b = "2*s(n+1)*s(n) - s(n) - s(n+1)";
inline constexpr const char* interlace_q = "(2*s(n)+s(n+1))*s(n+2) + s(n)*s(n+1)";

inline constexpr const char* catalan_holo = "(n+2)*s(n+1) - (4*n+2)*s(n) = 0";
inline constexpr const char* catalan_rat = "(10*s(n)-s(n+1))*s(n+2) - 2*s(n+1)*(8*s(n)+s(n+1))";
inline constexpr const char* arctan_holo = "n*s(n) + (n+2)*s(n+2) = 0";
inline constexpr const char* arctan_rat = "s(n+3)*(s(n+2)+3*s(n)) + s(n+1)*(s(n)-s(n+2))";
inline constexpr const char* somos_holo = "s(n+3) = n*s(n)+(n+1)*s(n+1)+(n+2)*s(n+2)";
inline constexpr const char* somos_rat =
    "s(n+4)*(s(n)+s(n+1)+s(n+2)) - (s(n)*s(n+1)+2*s(n)*s(n+2)+3*s(n)*s(n+3)+3*s(n+1)*s(n+3)"
    "+2*s(n+2)*s(n+3)+s(n+3)^2)";

// u = k^F(n) and v = A007018
inline constexpr const char* pow_fib = "u(n+2) - u(n+1)*u(n)";
inline constexpr const char* trees = "v(n+1) - v(n)^2 - v(n)";
inline constexpr const char* ratio_uv =
    "s(n+1)^4*s(n+3)^2*s(n)^4 - s(n+1)^4*s(n+3)*s(n)^3*s(n+2)^2 + s(n+3)^2*s(n+2)^4"
    " - s(n+1)^3*s(n+3)^2*s(n)^3*s(n+2) + s(n+1)^3*s(n)*s(n+2)^5 + s(n+1)^2*s(n+2)^6"
    " + 2*s(n+1)^2*s(n+3)*s(n)*s(n+2)^4 - s(n+1)^2*s(n+3)^2*s(n)^2*s(n+2)^2"
    " + s(n+1)*s(n+3)^2*s(n)*s(n+2)^3 + 2*s(n+1)*s(n+3)*s(n+2)^5"
    " - s(n+1)^3*s(n+3)*s(n)^2*s(n+2)^3";
inline constexpr const char* product_uv =
    "s(n+2)^2*s(n+1)^4*s(n)^4 + 2*s(n+3)*s(n+2)*s(n+1)^3*s(n)^4 + s(n+2)^3*s(n+1)^3*s(n)^3"
    " + s(n+3)^2*s(n+1)^2*s(n)^4 + 2*s(n+3)*s(n+2)^2*s(n+1)^2*s(n)^3 - s(n+2)^4*s(n+1)^2*s(n)^2"
    " + s(n+3)^2*s(n+2)*s(n+1)*s(n)^3 - s(n+3)*s(n+2)^3*s(n+1)*s(n)^2 - s(n+2)^5*s(n+1)*s(n)"
    " - s(n+3)*s(n+2)^4*s(n) + s(n+2)^6";
inline constexpr const char* partial_sum_u =
    "s(n)*s(n+1) - s(n)*s(n+2) - s(n+1)^2 + s(n+1)*s(n+2) + s(n+2) - s(n+3)";

inline constexpr const char* fibonacci = "s(n+2) - s(n+1) - s(n)";
inline constexpr const char* fib_recip_product =
    "-s(n)*s(n+1) + 2*s(n)*s(n+2) + s(n+1)^2 - s(n+1)*s(n+2)";
inline constexpr const char* fib_partial_sum =
    "s(n+3)*(2*s(n) - 3*s(n+1) + s(n+2)) + s(n)*s(n+1) - 3*s(n)*s(n+2) - 2*s(n+1)^2 + 6*s(n+1)*s(n+2)"
    " - 2*s(n+2)^2";
inline constexpr const char* fib_aitken =
    "s(n)^2*s(n+1)^2 + 6*s(n)^2*s(n+1)*s(n+2) - 8*s(n)^2*s(n+1)*s(n+3) + 9*s(n)^2*s(n+2)^2"
    " - 24*s(n)^2*s(n+2)*s(n+3) + 16*s(n)^2*s(n+3)^2 - 12*s(n)*s(n+1)^2*s(n+2) + 10*s(n)*s(n+1)^2*s(n+3)"
    " - 16*s(n)*s(n+1)*s(n+2)^2 + 44*s(n)*s(n+1)*s(n+2)*s(n+3) - 24*s(n)*s(n+1)*s(n+3)^2"
    " - 4*s(n)*s(n+2)^3 + 10*s(n)*s(n+2)^2*s(n+3) - 8*s(n)*s(n+2)*s(n+3)^2 + 4*s(n+1)^3*s(n+2)"
    " - 4*s(n+1)^3*s(n+3) + 8*s(n+1)^2*s(n+2)^2 - 16*s(n+1)^2*s(n+2)*s(n+3)"
    " + 9*s(n+1)^2*s(n+3)^2 + 4*s(n+1)*s(n+2)^3 - 12*s(n+1)*s(n+2)^2*s(n+3)"
    " + 6*s(n+1)*s(n+2)*s(n+3)^2 + s(n+2)^2*s(n+3)^2";

// parameter l
inline constexpr const char* babylonian = "2*s(n)*s(n+1) - s(n)^2 - l";
inline constexpr const char* babylonian_aitken = "s(n+1)*(s(n)^2 + l) - 2*l*s(n)";

// parameters a00 a01 a10 a11 for alpha_{i,j}
inline constexpr const char* c2_generic_body = "c1(n)*s(n+1) + c0(n)*s(n)";
inline constexpr const char* c2_generic_rule_c1 = "c1(n+2) = a11*c1(n+1) + a10*c1(n)";
inline constexpr const char* c2_generic_rule_c0 = "c0(n+2) = a01*c0(n+1) + a00*c0(n)";
inline constexpr const char* c2_generic_num =
    "-s(n+3)*(-s(n+2)*s(n)*s(n+3)*a01^2*a10 + s(n+1)^2*s(n+3)*a00*a01*a11 + s(n+2)^2*s(n+1)*a00^2"
    " - s(n+2)*s(n)*s(n+3)*a00*a10)";
inline constexpr const char* c2_generic_den =
    "s(n+2)^2*s(n)*a01*a10*a11 - s(n+2)*s(n+1)^2*a00*a11^2 - s(n+2)*s(n+1)^2*a00*a10"
    " + s(n+1)*s(n)*s(n+3)*a10^2";
inline constexpr const char* c2_specialized =
    "s(n+4)*(s(n+3)*s(n+1)*s(n) + 2*s(n)*s(n+2)^2 - 6*s(n+1)^2*s(n+2))"
    " + s(n+3)*(6*s(n+3)*s(n+1)^2 - 7*s(n+3)*s(n)*s(n+2) + 9*s(n+2)^2*s(n+1))";
inline constexpr const char* c2_period_body = "u(n)*s(n) + 2*s(n+1) + v(n)*s(n+2)";
inline constexpr const char* c2_period_rule_u = "u(n+2) = u(n)";
inline constexpr const char* c2_period_rule_v = "v(n+2) = v(n)";
inline constexpr const char* c2_period_out =
    "s(n+6)*(s(n+3)*s(n) - s(n+1)*s(n+2))"
    " - (s(n+5)*s(n+4)*s(n) - s(n+5)*s(n+2)^2 - s(n+4)^2*s(n+1) + s(n+4)*s(n+3)*s(n+2))";

inline constexpr const char* catalan_stride3 =
    "343597383680*s(n)^3*s(n+1)^3 - 69004689408*s(n)^3*s(n+1)^2*s(n+2) + 4274823168*s(n)^3*s(n+1)*s(n+2)^2"
    " - 83243160*s(n)^3*s(n+2)^3 - 1258291200*s(n)^2*s(n+1)^4 + 266514432*s(n)^2*s(n+1)^3*s(n+2)"
    " - 26883000*s(n)^2*s(n+1)^2*s(n+2)^2 + 1043658*s(n)^2*s(n+1)*s(n+2)^3 - 122880*s(n)*s(n+1)^5"
    " - 101544*s(n)*s(n+1)^4*s(n+2) + 65067*s(n)*s(n+1)^3*s(n+2)^2 - 4113*s(n)*s(n+1)^2*s(n+2)^3"
    " + 1400*s(n+1)^6 - 30*s(n+1)^5*s(n+2) - 75*s(n+1)^4*s(n+2)^2 + 5*s(n+1)^3*s(n+2)^3";

}  // namespace fx
