"""Exact arithmetic in the golden ring Z[phi] and an exact coplanarity test.

Every platonic solid can be placed with vertex coordinates of the form
``a + b*phi`` with integer ``a`` and ``b`` (``phi**2 == phi + 1``), so the
planarity filter never needs a floating-point tolerance.
"""

from __future__ import annotations

from functools import total_ordering
from typing import Iterable, Sequence

PHI = 1.6180339887498949

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _check64(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"golden-number component {value} exceeds the 64-bit range")
    return value


@total_ordering
class GoldenNumber:
    """The number ``a + b*phi`` with 64-bit integer components."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        if isinstance(a, bool) or isinstance(b, bool) or not (isinstance(a, int) and isinstance(b, int)):
            raise TypeError("golden-number components must be integers")
        self.a = _check64(a)
        self.b = _check64(b)

    @classmethod
    def coerce(cls, value: GoldenNumber | int) -> GoldenNumber:
        if isinstance(value, GoldenNumber):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value, 0)
        raise TypeError(f"cannot interpret {value!r} as a golden number")

    def __repr__(self) -> str:
        return f"GoldenNumber({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}φ"
        return f"{self.a}{self.b:+}φ"

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.a == other and self.b == 0
        if isinstance(other, GoldenNumber):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __lt__(self, other: GoldenNumber | int) -> bool:
        return (self - GoldenNumber.coerce(other)).sign() < 0

    def __add__(self, other: GoldenNumber | int) -> GoldenNumber:
        other = GoldenNumber.coerce(other)
        return GoldenNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __sub__(self, other: GoldenNumber | int) -> GoldenNumber:
        other = GoldenNumber.coerce(other)
        return GoldenNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: GoldenNumber | int) -> GoldenNumber:
        return GoldenNumber.coerce(other) - self

    def __mul__(self, other: GoldenNumber | int) -> GoldenNumber:
        other = GoldenNumber.coerce(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        bb = _check64(b1 * b2)
        return GoldenNumber(
            _check64(_check64(a1 * a2) + bb),
            _check64(_check64(a1 * b2) + _check64(a2 * b1)) + bb,
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sign(self) -> int:
        """Exact sign of ``a + b*phi``.

        With ``s = 2a + b`` the value is ``(s + b*sqrt(5)) / 2``; when ``s`` and
        ``b`` disagree in sign the comparison ``s**2`` vs ``5*b**2`` decides.
        """
        s = 2 * self.a + self.b
        b = self.b
        if b == 0:
            return (s > 0) - (s < 0)
        if s == 0 or (s > 0) == (b > 0):
            return 1 if b > 0 else -1
        if s * s > 5 * b * b:
            return 1 if s > 0 else -1
        return 1 if b > 0 else -1

    def __float__(self) -> float:
        return self.a + self.b * PHI

    def to_pair(self) -> list[int]:
        return [self.a, self.b]


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
GOLDEN = GoldenNumber(0, 1)


class Point3:
    __slots__ = ("x", "y", "z")

    def __init__(self, x: GoldenNumber | int, y: GoldenNumber | int, z: GoldenNumber | int) -> None:
        self.x = GoldenNumber.coerce(x)
        self.y = GoldenNumber.coerce(y)
        self.z = GoldenNumber.coerce(z)

    def __repr__(self) -> str:
        return f"Point3({self.x}, {self.y}, {self.z})"

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point3):
            return NotImplemented
        return self.x == other.x and self.y == other.y and self.z == other.z

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.z))

    def key(self) -> tuple[GoldenNumber, GoldenNumber, GoldenNumber]:
        return (self.x, self.y, self.z)

    def __sub__(self, other: Point3) -> Point3:
        return Point3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __add__(self, other: Point3) -> Point3:
        return Point3(self.x + other.x, self.y + other.y, self.z + other.z)

    def scale(self, k: GoldenNumber | int) -> Point3:
        return Point3(self.x * k, self.y * k, self.z * k)

    def cross(self, other: Point3) -> Point3:
        return Point3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def dot(self, other: Point3) -> GoldenNumber:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def norm2(self) -> GoldenNumber:
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero() and self.z.is_zero()

    def to_floats(self) -> tuple[float, float, float]:
        return (float(self.x), float(self.y), float(self.z))


def triple_product(u: Point3, v: Point3, w: Point3) -> GoldenNumber:
    """Return ``(u x v) . w`` exactly."""
    return u.cross(v).dot(w)


def independent_triple(points: Sequence[Point3]) -> tuple[int, int, int] | None:
    """Indices of the first three affinely independent points in scan order.

    A candidate is skipped when it coincides with, or is collinear with, the
    points already chosen. Returns None when no such triple exists.
    """
    chosen: list[int] = []
    for i, p in enumerate(points):
        if not chosen:
            chosen.append(i)
        elif len(chosen) == 1:
            if p != points[chosen[0]]:
                chosen.append(i)
        else:
            p0 = points[chosen[0]]
            if not (points[chosen[1]] - p0).cross(p - p0).is_zero():
                return chosen[0], chosen[1], i
    return None


def coplanar(points: Iterable[Point3]) -> bool:
    """True iff every point lies in one common plane."""
    pts = list(points)
    if not pts:
        raise ValueError("coplanar needs at least one point")
    triple = independent_triple(pts)
    if triple is None:
        return True
    i0, i1, i2 = triple
    p0 = pts[i0]
    normal = (pts[i1] - p0).cross(pts[i2] - p0)
    return all(normal.dot(p - p0).is_zero() for p in pts)
