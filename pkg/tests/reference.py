"""Published values the test suite is frozen against."""
import re

# invariant counts for rank 3 and 4, n = 1..10, and their connected parts
Z3 = [1, 5, 16, 86, 448, 3580, 34981, 448628, 6854130, 121173330]
Z4 = [1, 14, 132, 4154, 234004, 24791668, 3844630928, 809199787472,
      220685007519070, 75649235368772418]
C3 = [1, 4, 11, 60, 318, 2806, 29359, 396196, 6231794, 112137138]
C4 = [1, 13, 118, 3931, 228316, 24499085, 3816396556, 805001547991,
      219822379032704, 75417509926065404]

# output of the reference computation for the degree-one query on T_000
REFERENCE_T000 = """
4*T_032*T_212*T_220 - 4*T_023*T_202*T_221 + 4*T_022*T_203*T_221 +
 4*T_032*T_213*T_221 + 4*T_023*T_201*T_222 - 4*T_021*T_203*T_222 - 4*T_032*T_210*T_222
- 4*T_022*T_201*T_223 + 4*T_021*T_202*T_223 - 4*T_032*T_211*T_223 - 4*T_022*T_212*T_230
+ 4*T_012*T_222*T_230 - 4*T_023*T_212*T_231 + 4*T_012*T_223*T_231 + 4*T_022*T_210*T_232
+ 4*T_023*T_211*T_232 - 4*T_021*T_213*T_232 - 4*T_012*T_220*T_232 + 4*T_021*T_212*T_233
- 4*T_012*T_221*T_233 - 4*T_122*T_220*T_302 - 4*T_123*T_221*T_302 + 4*T_120*T_222*T_302
+ 4*T_121*T_223*T_302 - 4*T_122*T_230*T_312 - 4*T_123*T_231*T_312 + 4*T_120*T_232*T_312
+ 4*T_121*T_233*T_312 + 4*T_122*T_202*T_320 + 4*T_132*T_212*T_320 - 4*T_102*T_222*T_320
- 4*T_112*T_232*T_320 + 4*T_122*T_203*T_321 + 4*T_132*T_213*T_321 - 4*T_102*T_223*T_321
- 4*T_112*T_233*T_321 + 4*T_123*T_201*T_322 - 4*T_120*T_202*T_322 - 4*T_121*T_203*T_322
- 4*T_132*T_210*T_322 + 4*T_102*T_220*T_322 + 4*T_112*T_230*T_322 - 4*T_122*T_201*T_323
- 4*T_132*T_211*T_323 + 4*T_102*T_221*T_323 + 4*T_112*T_231*T_323 + 4*T_122*T_210*T_332
+ 4*T_123*T_211*T_332 - 4*T_120*T_212*T_332 - 4*T_121*T_213*T_332
"""


def reference_t000_terms():
    text = " ".join(REFERENCE_T000.split())
    terms = re.findall(r"(^|[+-])\s*4\*(T_\d{3}\*T_\d{3}\*T_\d{3})", text)
    out = {}
    for sign, mono in terms:
        key = tuple(sorted(tuple(int(c) for c in sym[2:]) for sym in mono.split("*")))
        out[key] = -4 if sign == "-" else 4
    return out
