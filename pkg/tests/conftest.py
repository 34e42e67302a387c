import sympy

from kummer_asym.exact import BivarPoly

b_sym, z_sym = sympy.symbols("b z")

# lines collected by the acceptance module, echoed in the terminal summary
ACCEPTANCE_LINES: list = []


def to_sympy(p):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * b_sym**i * z_sym**j for (i, j), c in p.terms.items()),
        sympy.Integer(0),
    )


def from_sympy(expr) -> BivarPoly:
    poly = sympy.Poly(sympy.expand(expr), b_sym, z_sym)
    from fractions import Fraction

    return BivarPoly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
