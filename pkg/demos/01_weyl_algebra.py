"""Arithmetic in the Weyl algebra and its rational extension.

Operators are stored in normal order (coefficients left of derivatives), so
``dx * x`` becomes ``x*dx + 1``.  Dividing by polynomials in x moves the
operator into the rational Weyl algebra.

Run with:  python demos/01_weyl_algebra.py
"""

from weylconn import WeylContext, clear_denominators, format_element, parse_expr, parse_rational

ctx = WeylContext(["x", "y"], weights=[2, 1])
x, y, dx, dy = ctx.x(0), ctx.x(1), ctx.d(0), ctx.d(1)

print("dx * x        =", format_element(dx * x))
print("dx^3 * x^2    =", format_element(dx ** 3 * x ** 2))
print("dy * x        =", format_element(dy * x))

# The order ranks by weighted derivative degree first, then breaks ties
# lexicographically.
p = parse_expr("x*y*dy^2 - y^2*dy^2 + x*dy - 3*y*dy - 1", ctx)
print("init monomial =", p.init_monomial())

# In the rational algebra derivatives act on coefficients by Leibniz' rule.
r = parse_rational("1/x*dx", ctx)
print("(1/x dx) * x  =", format_element(r * x.to_rational()))

# Clearing denominators recovers a polynomial operator up to a factor.
q = parse_rational("-y/x*dy - 1/x", ctx)
print("cleared       =", format_element(clear_denominators(q)))
