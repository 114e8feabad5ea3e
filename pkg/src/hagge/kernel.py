"""Exact rational plane geometry: homogeneous points and lines, circles,
incidence/orientation predicates and the primitive constructions.

Every object is canonicalized to a coprime-integer representation at
construction, so ``==`` and ``hash`` are structural and two routes to the
same geometric object compare equal.  All operations are pure and closed
over the rationals: no radicals ever appear.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

Scalar = Fraction

RationalLike = "int | Fraction"


class GeometryError(Exception):
    """Base class for all exact-geometry errors."""


class PointAtInfinity(GeometryError):
    pass


class CollinearInput(GeometryError):
    pass


class KnownPointNotIncident(GeometryError):
    pass


class IdenticalCircles(GeometryError):
    pass


class ImaginaryCircle(GeometryError):
    pass


class CenterInversion(GeometryError):
    pass


class DegenerateQuad(GeometryError):
    pass


class LineAtInfinity(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}: {v!r}")


def _int_triple(a, b, c) -> tuple[int, int, int]:
    """Clear denominators of three rationals and divide out the gcd."""
    fa, fb, fc = _as_fraction(a), _as_fraction(b), _as_fraction(c)
    den = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
    den = den * fc.denominator // gcd(den, fc.denominator)
    ia, ib, ic = int(fa * den), int(fb * den), int(fc * den)
    g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
    if g > 1:
        ia, ib, ic = ia // g, ib // g, ic // g
    return ia, ib, ic


class PPoint:
    """Projective point (x : y : w); affine when w != 0.

    Canonical form: coprime integers with w > 0, or (for points at
    infinity) first nonzero coordinate positive.
    """

    __slots__ = ("x", "y", "w")

    def __init__(self, x, y, w=1):
        ix, iy, iw = _int_triple(x, y, w)
        if ix == 0 and iy == 0 and iw == 0:
            raise GeometryError("(0 : 0 : 0) is not a projective point")
        lead = iw if iw != 0 else (ix if ix != 0 else iy)
        if lead < 0:
            ix, iy, iw = -ix, -iy, -iw
        object.__setattr__(self, "x", ix)
        object.__setattr__(self, "y", iy)
        object.__setattr__(self, "w", iw)

    def __setattr__(self, name, value):
        raise AttributeError("PPoint is immutable")

    @classmethod
    def affine(cls, x, y) -> PPoint:
        return cls(x, y, 1)

    @property
    def is_infinite(self) -> bool:
        return self.w == 0

    def xy(self) -> tuple[Fraction, Fraction]:
        if self.w == 0:
            raise PointAtInfinity(f"{self} has no affine coordinates")
        return Fraction(self.x, self.w), Fraction(self.y, self.w)

    def triple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.w)

    def __eq__(self, other):
        if not isinstance(other, PPoint):
            return NotImplemented
        return self.triple() == other.triple()

    def __hash__(self):
        return hash(("ppoint", self.triple()))

    def __repr__(self):
        if self.w != 0:
            ax, ay = self.xy()
            return f"PPoint({ax}, {ay})"
        return f"PPoint({self.x} : {self.y} : 0)"


class PLine:
    """Line l*x + m*y + n*w = 0 with coprime-integer coefficients,
    first nonzero coefficient positive."""

    __slots__ = ("l", "m", "n")

    def __init__(self, l, m, n):
        il, im, iw = _int_triple(l, m, n)
        if il == 0 and im == 0 and iw == 0:
            raise GeometryError("(0, 0, 0) is not a line")
        lead = il if il != 0 else (im if im != 0 else iw)
        if lead < 0:
            il, im, iw = -il, -im, -iw
        object.__setattr__(self, "l", il)
        object.__setattr__(self, "m", im)
        object.__setattr__(self, "n", iw)

    def __setattr__(self, name, value):
        raise AttributeError("PLine is immutable")

    @property
    def is_line_at_infinity(self) -> bool:
        return self.l == 0 and self.m == 0

    def eval_at(self, p: PPoint) -> int:
        return self.l * p.x + self.m * p.y + self.n * p.w

    def contains(self, p: PPoint) -> bool:
        return self.eval_at(p) == 0

    def triple(self) -> tuple[int, int, int]:
        return (self.l, self.m, self.n)

    def __eq__(self, other):
        if not isinstance(other, PLine):
            return NotImplemented
        return self.triple() == other.triple()

    def __hash__(self):
        return hash(("pline", self.triple()))

    def __repr__(self):
        return f"PLine({self.l}*x + {self.m}*y + {self.n} = 0)"


class Circle:
    """Circle cA*(x^2 + y^2) + cD*x + cE*y + cF = 0.

    Stored as coprime integers with cA > 0; real (radius^2 >= 0) enforced
    at construction since no supported construction produces an imaginary
    circle from real data.
    """

    __slots__ = ("cA", "cD", "cE", "cF")

    def __init__(self, cA, cD, cE, cF):
        fa = _as_fraction(cA)
        fd = _as_fraction(cD)
        fe = _as_fraction(cE)
        ff = _as_fraction(cF)
        if fa == 0:
            raise GeometryError("cA = 0: not a proper circle")
        den = 1
        for f in (fa, fd, fe, ff):
            den = den * f.denominator // gcd(den, f.denominator)
        ia, id_, ie, if_ = (int(f * den) for f in (fa, fd, fe, ff))
        g = gcd(gcd(abs(ia), abs(id_)), gcd(abs(ie), abs(if_)))
        if g > 1:
            ia, id_, ie, if_ = ia // g, id_ // g, ie // g, if_ // g
        if ia < 0:
            ia, id_, ie, if_ = -ia, -id_, -ie, -if_
        if id_ * id_ + ie * ie - 4 * ia * if_ < 0:
            raise ImaginaryCircle("negative squared radius")
        object.__setattr__(self, "cA", ia)
        object.__setattr__(self, "cD", id_)
        object.__setattr__(self, "cE", ie)
        object.__setattr__(self, "cF", if_)

    def __setattr__(self, name, value):
        raise AttributeError("Circle is immutable")

    @classmethod
    def from_centre_point(cls, centre: PPoint, through: PPoint) -> Circle:
        ox, oy = centre.xy()
        px, py = through.xy()
        r2 = (px - ox) ** 2 + (py - oy) ** 2
        return cls(1, -2 * ox, -2 * oy, ox * ox + oy * oy - r2)

    def coefficients(self) -> tuple[int, int, int, int]:
        return (self.cA, self.cD, self.cE, self.cF)

    def monic_coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """The cA = 1 view of the equation."""
        a = self.cA
        return (Fraction(1), Fraction(self.cD, a), Fraction(self.cE, a), Fraction(self.cF, a))

    def eval_at(self, p: PPoint) -> int:
        # homogenized: cA(x^2+y^2) + cD x w + cE y w + cF w^2
        return (self.cA * (p.x * p.x + p.y * p.y) + self.cD * p.x * p.w
                + self.cE * p.y * p.w + self.cF * p.w * p.w)

    def contains(self, p: PPoint) -> bool:
        return self.eval_at(p) == 0

    def centre(self) -> PPoint:
        return PPoint(Fraction(-self.cD, 2 * self.cA), Fraction(-self.cE, 2 * self.cA))

    def radius2(self) -> Fraction:
        return Fraction(self.cD ** 2 + self.cE ** 2 - 4 * self.cA * self.cF,
                        4 * self.cA ** 2)

    def __eq__(self, other):
        if not isinstance(other, Circle):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(("circle", self.coefficients()))

    def __repr__(self):
        return f"Circle({self.cA}(x²+y²) + {self.cD}x + {self.cE}y + {self.cF} = 0)"


def line_through(p: PPoint, q: PPoint) -> PLine:
    """Join of two distinct points (cross product of the triples)."""
    l = p.y * q.w - p.w * q.y
    m = p.w * q.x - p.x * q.w
    n = p.x * q.y - p.y * q.x
    if l == 0 and m == 0 and n == 0:
        raise CoincidentPoints(f"join of coincident points {p}")
    return PLine(l, m, n)


def line_intersection(a: PLine, b: PLine) -> PPoint:
    """Meet of two distinct lines; points at infinity are first-class."""
    x = a.m * b.n - a.n * b.m
    y = a.n * b.l - a.l * b.n
    w = a.l * b.m - a.m * b.l
    if x == 0 and y == 0 and w == 0:
        raise GeometryError(f"meet of coincident lines {a}")
    return PPoint(x, y, w)


def midpoint(p: PPoint, q: PPoint) -> PPoint:
    px, py = p.xy()
    qx, qy = q.xy()
    return PPoint((px + qx) / 2, (py + qy) / 2)


def collinear(p: PPoint, q: PPoint, r: PPoint) -> int:
    """3x3 determinant of the homogeneous triples; zero iff collinear."""
    return (p.x * (q.y * r.w - q.w * r.y)
            - p.y * (q.x * r.w - q.w * r.x)
            + p.w * (q.x * r.y - q.y * r.x))


def concurrent(l1: PLine, l2: PLine, l3: PLine) -> int:
    """Dual determinant; zero iff the lines concur (or two coincide)."""
    return (l1.l * (l2.m * l3.n - l2.n * l3.m)
            - l1.m * (l2.l * l3.n - l2.n * l3.l)
            + l1.n * (l2.l * l3.m - l2.m * l3.l))


def orientation(a: PPoint, b: PPoint, c: PPoint) -> Fraction:
    """Twice the signed area of the affine triangle abc."""
    ax, ay = a.xy()
    bx, by = b.xy()
    cx, cy = c.xy()
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def circle_through(p1: PPoint, p2: PPoint, p3: PPoint) -> Circle:
    """The unique circle through three non-collinear affine points."""
    for p in (p1, p2, p3):
        if p.is_infinite:
            raise PointAtInfinity(f"{p} cannot lie on a circle")
    pts = [p.xy() for p in (p1, p2, p3)]
    rows = [(x * x + y * y, x, y, Fraction(1)) for x, y in pts]

    def minor(drop: int) -> Fraction:
        cols = [i for i in range(4) if i != drop]
        (a, b, c), (d, e, f), (g, h, i) = (tuple(row[j] for j in cols) for row in rows)
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    cA = minor(0)
    if cA == 0:
        raise CollinearInput(f"collinear points {p1}, {p2}, {p3}")
    return Circle(cA, -minor(1), minor(2), -minor(3))


def concyclic4(p1: PPoint, p2: PPoint, p3: PPoint, p4: PPoint) -> Fraction:
    """4x4 determinant of rows (x^2+y^2, x, y, 1); zero iff concyclic."""
    rows = []
    for p in (p1, p2, p3, p4):
        x, y = p.xy()
        rows.append((x * x + y * y, x, y, Fraction(1)))
    det = Fraction(0)
    for j in range(4):
        sub = [tuple(r[k] for k in range(4) if k != j) for r in rows[1:]]
        (a, b, c), (d, e, f), (g, h, i) = sub
        m3 = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        det += (-1) ** j * rows[0][j] * m3
    return det


def second_intersection_line_circle(ln: PLine, c: Circle, known: PPoint) -> PPoint:
    """Other intersection of a line with a circle, given one rational
    intersection; returns ``known`` itself at tangency."""
    if ln.eval_at(known) != 0 or c.eval_at(known) != 0:
        raise KnownPointNotIncident(f"{known} not on both {ln} and {c}")
    kx, ky = known.xy()
    dx, dy = ln.m, -ln.l  # direction vector of the line
    qa = c.cA * (dx * dx + dy * dy)
    qb = 2 * c.cA * (kx * dx + ky * dy) + c.cD * dx + c.cE * dy
    t = Fraction(-qb, qa)
    if t == 0:
        return known
    return PPoint(kx + t * dx, ky + t * dy)


def radical_line(c1: Circle, c2: Circle) -> PLine:
    """Common chord / line of equal power of two distinct circles."""
    a1, d1, e1, f1 = c1.monic_coefficients()
    a2, d2, e2, f2 = c2.monic_coefficients()
    l, m, n = d1 - d2, e1 - e2, f1 - f2
    if l == 0 and m == 0 and n == 0:
        raise IdenticalCircles(f"{c1} and {c2} coincide")
    if l == 0 and m == 0:
        # concentric distinct circles: radical line at infinity
        raise IdenticalCircles(f"concentric circles {c1}, {c2} share no chord")
    return PLine(l, m, n)


def second_intersection_circle_circle(c1: Circle, c2: Circle, known: PPoint) -> PPoint:
    """Other common point of two circles through a known rational one,
    found along their radical line."""
    if c1 == c2:
        raise IdenticalCircles("circles coincide")
    if c1.eval_at(known) != 0 or c2.eval_at(known) != 0:
        raise KnownPointNotIncident(f"{known} not on both circles")
    return second_intersection_line_circle(radical_line(c1, c2), c1, known)


def invert_point(center: PPoint, k, p: PPoint) -> PPoint:
    """Inversion with centre ``center`` and power ``k``:
    p maps to center + k*(p - center)/|p - center|^2."""
    k = _as_fraction(k)
    if k == 0:
        raise GeometryError("inversion power must be nonzero")
    if p == center:
        raise CenterInversion("cannot invert the centre")
    cx, cy = center.xy()
    px, py = p.xy()
    vx, vy = px - cx, py - cy
    d2 = vx * vx + vy * vy
    return PPoint(cx + k * vx / d2, cy + k * vy / d2)


def convex_quad(a: PPoint, b: PPoint, c: PPoint, d: PPoint) -> bool:
    """True iff the quadrilateral a,b,c,d (in this cyclic order) is strictly
    convex: the four consecutive orientation signs agree."""
    quad = (a, b, c, d)
    if len({q.triple() for q in quad}) < 4:
        raise DegenerateQuad("repeated vertex")
    signs = []
    for i in range(4):
        o = orientation(quad[i], quad[(i + 1) % 4], quad[(i + 2) % 4])
        if o == 0:
            raise DegenerateQuad(f"three consecutive vertices collinear at index {i}")
        signs.append(o > 0)
    return len(set(signs)) == 1


def point_reflection(center: PPoint, p: PPoint) -> PPoint:
    cx, cy = center.xy()
    px, py = p.xy()
    return PPoint(2 * cx - px, 2 * cy - py)


def perpendicular_through(p: PPoint, ln: PLine) -> PLine:
    """Line through the affine point ``p`` perpendicular to ``ln``."""
    if ln.is_line_at_infinity:
        raise LineAtInfinity("no perpendicular to the line at infinity")
    px, py = p.xy()
    return PLine(ln.m, -ln.l, ln.l * py - ln.m * px)


def parallel_through(p: PPoint, ln: PLine) -> PLine:
    if ln.is_line_at_infinity:
        raise LineAtInfinity("no parallel to the line at infinity")
    px, py = p.xy()
    return PLine(ln.l, ln.m, -(ln.l * px + ln.m * py))


def distance2(p: PPoint, q: PPoint) -> Fraction:
    px, py = p.xy()
    qx, qy = q.xy()
    return (px - qx) ** 2 + (py - qy) ** 2
