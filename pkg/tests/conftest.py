import sympy

X = sympy.Symbol("x")


def to_sympy(poly):
    return sum(sympy.Rational(c) * X**j for j, c in enumerate(poly.coeffs))


def from_sympy(expr):
    coeffs = sympy.Poly(sympy.expand(expr), X).all_coeffs()[::-1]
    return [sympy.Rational(c) for c in coeffs]
