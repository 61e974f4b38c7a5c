"""Reference values for the bivariate permanent polynomial."""

# Order-8 copermanent pairs: printed polynomials, in canonical term order.
G_PAIR_POLY = (
    "x^8+14x^6λ^2+14x^6+12x^5λ^3+44x^5λ^2+44x^5λ+12x^5+69x^4λ^4+112x^4λ^3"
    "+268x^4λ^2+112x^4λ+69x^4+82x^3λ^5+402x^3λ^4+748x^3λ^3+748x^3λ^2+402x^3λ"
    "+82x^3+130x^2λ^6+648x^2λ^5+1804x^2λ^4+2256x^2λ^3+1804x^2λ^2+648x^2λ"
    "+130x^2+88xλ^7+742xλ^6+2434xλ^5+4152xλ^4+4152xλ^3+2434xλ^2+742xλ+88x"
    "+40λ^8+360λ^7+1520λ^6+3320λ^5+4353λ^4+3320λ^3+1520λ^2+360λ+40"
)
H_PAIR_POLY = (
    "x^8+14x^6λ^2+14x^6+10x^5λ^3+46x^5λ^2+46x^5λ+10x^5+69x^4λ^4+108x^4λ^3"
    "+276x^4λ^2+108x^4λ+69x^4+78x^3λ^5+418x^3λ^4+736x^3λ^3+736x^3λ^2+418x^3λ"
    "+78x^3+144x^2λ^6+672x^2λ^5+1814x^2λ^4+2160x^2λ^3+1814x^2λ^2+672x^2λ"
    "+144x^2+130xλ^7+830xλ^6+2412xλ^5+4044xλ^4+4044xλ^3+2412xλ^2+830xλ+130x"
    "+52λ^8+468λ^7+1672λ^6+3208λ^5+4033λ^4+3208λ^3+1672λ^2+468λ+52"
)

# n -> (#graphs, #perm. pols, # with coperm. mate, frac. with mate, max. family)
SURVEY_ROWS = {
    0: (1, 1, 0, "0", 1),
    1: (1, 1, 0, "0", 1),
    2: (2, 2, 0, "0", 1),
    3: (4, 4, 0, "0", 1),
    4: (11, 11, 0, "0", 1),
    5: (34, 34, 0, "0", 1),
    6: (156, 156, 0, "0", 1),
    7: (1044, 1044, 0, "0", 1),
    8: (12346, 12344, 4, "0.000324", 2),
    9: (274668, 274624, 88, "0.000320", 2),
    10: (12005168, 12004460, 1416, "0.000118", 2),
}


def survey_csv(n):
    graphs, pols, mates, frac, fam = SURVEY_ROWS[n]
    frac6 = f"{float(frac):.6f}"
    return f"{n},{graphs},{pols},{mates},{frac6},{fam}"
