"""Dense bivariate integer polynomials in ``x`` and ``λ``.

Coefficients are kept in a flat triangular layout: for a polynomial of order
``n`` the entry for ``x^i λ^j`` (``i + j <= n``) lives at
``offset(i) + j`` with rows ordered by ascending ``x`` degree.  Every
coefficient must fit a signed 64-bit integer; all arithmetic here is checked
and raises instead of wrapping.
"""

from __future__ import annotations

import re
import struct
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import (
    CoefficientOverflow,
    DecodeError,
    DegreeOverflow,
    EvaluationOverflow,
    OrderTooLarge,
)

MAX_ORDER = 20
INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1
INT128_MIN = -(1 << 127)
INT128_MAX = (1 << 127) - 1

FNV_OFFSET = 14695981039346656037
FNV_PRIME = 1099511628211


def table_size(order: int) -> int:
    return (order + 1) * (order + 2) // 2


def row_offset(order: int, i: int) -> int:
    return i * (order + 1) - i * (i - 1) // 2


def _check_order(order: int) -> None:
    if not 0 <= order <= MAX_ORDER:
        raise OrderTooLarge(f"polynomial order {order} outside 0..{MAX_ORDER}")


def _checked(values) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    for v in out:
        if not INT64_MIN <= v <= INT64_MAX:
            raise CoefficientOverflow(f"coefficient {v} does not fit in 64 bits")
    return out


class BiPoly:
    """Polynomial ``sum c[i][j] x^i λ^j`` with total degree at most ``order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        _check_order(order)
        coeffs = _checked(coeffs)
        if len(coeffs) != table_size(order):
            raise ValueError(
                f"order {order} needs {table_size(order)} coefficients, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_dict(cls, order: int, terms: dict[tuple[int, int], int]) -> BiPoly:
        flat = [0] * table_size(order)
        for (i, j), c in terms.items():
            if i < 0 or j < 0 or i + j > order:
                raise DegreeOverflow(f"monomial x^{i} λ^{j} exceeds order {order}")
            flat[row_offset(order, i) + j] += c
        return cls(order, flat)

    @classmethod
    def from_matrix(cls, matrix) -> BiPoly:
        """Build from a square array indexed ``[x_degree, lambda_degree]``."""
        m = np.asarray(matrix)
        n = m.shape[0] - 1
        flat = []
        for i in range(n + 1):
            flat.extend(int(v) for v in m[i, : n - i + 1])
        for i in range(n + 1):
            if np.any(m[i, n - i + 1 :]):
                raise DegreeOverflow(f"row {i} has terms above total degree {n}")
        return cls(n, flat)

    def coeff(self, i: int, j: int) -> int:
        if i < 0 or j < 0 or i + j > self.order:
            return 0
        return self.coeffs[row_offset(self.order, i) + j]

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(i, j, c)`` for every stored entry, ascending ``i`` then ``j``."""
        n = self.order
        k = 0
        for i in range(n + 1):
            for j in range(n - i + 1):
                yield i, j, self.coeffs[k]
                k += 1

    def nonzero_terms(self) -> list[tuple[int, int, int]]:
        return [t for t in self.terms() if t[2]]

    def as_matrix(self) -> np.ndarray:
        n = self.order
        m = np.zeros((n + 1, n + 1), dtype=np.int64)
        for i, j, c in self.terms():
            m[i, j] = c
        return m

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other: BiPoly) -> BiPoly:
        return add_assign(self, other)

    def __sub__(self, other: BiPoly) -> BiPoly:
        return add_assign(self, -other)

    def __neg__(self) -> BiPoly:
        return BiPoly(self.order, [-c for c in self.coeffs])

    def __repr__(self):
        return f"BiPoly(order={self.order}, {format_text(self, lam='y')!r})"

    def __str__(self):
        return format_text(self)


def zero(order: int) -> BiPoly:
    _check_order(order)
    return BiPoly(order, [0] * table_size(order))


def one(order: int) -> BiPoly:
    _check_order(order)
    flat = [0] * table_size(order)
    flat[0] = 1
    return BiPoly(order, flat)


def add_assign(target: BiPoly, source: BiPoly) -> BiPoly:
    """Elementwise checked sum; returns a new polynomial."""
    if target.order != source.order:
        raise ValueError(f"order mismatch: {target.order} vs {source.order}")
    return BiPoly(target.order, [a + b for a, b in zip(target.coeffs, source.coeffs)])


def mul_linear_factor(p: BiPoly, has_x: bool, a: int, b: int) -> BiPoly:
    """Return ``p * (x*[has_x] + a*λ + b)``."""
    n = p.order
    src = p.as_matrix().tolist()
    raises_degree = bool(has_x) or a != 0
    out = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n - i + 1):
            c = src[i][j]
            if not c:
                continue
            if raises_degree and i + j == n:
                raise DegreeOverflow(f"product exceeds total degree {n}")
            out[i][j] += b * c
            if a:
                out[i][j + 1] += a * c
            if has_x:
                out[i + 1][j] += c
    flat = []
    for i in range(n + 1):
        flat.extend(out[i][: n - i + 1])
    return BiPoly(n, flat)


def evaluate(p: BiPoly, x0: int, lam0: int) -> int:
    """Exact value at ``(x0, lam0)``; raises if any partial sum leaves 128 bits."""
    total = 0
    for i, j, c in p.terms():
        if not c:
            continue
        term = c * x0**i * lam0**j
        if not INT128_MIN <= term <= INT128_MAX:
            raise EvaluationOverflow(f"term x^{i} λ^{j} overflows 128 bits")
        total += term
        if not INT128_MIN <= total <= INT128_MAX:
            raise EvaluationOverflow("evaluation overflows 128 bits")
    return total


@dataclass(frozen=True)
class Fingerprint:
    """Canonical serialization of a :class:`BiPoly` and its FNV-1a hash."""

    bytes: bytes
    hash64: int

    def hex(self) -> str:
        return self.bytes.hex()

    @classmethod
    def from_bytes(cls, data: bytes) -> Fingerprint:
        return cls(bytes(data), fnv1a64(data))

    @classmethod
    def from_hex(cls, text: str) -> Fingerprint:
        return cls.from_bytes(bytes.fromhex(text))

    def __lt__(self, other: Fingerprint) -> bool:
        return self.bytes < other.bytes


def fnv1a64(data: bytes) -> int:
    h = FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def fingerprint(p: BiPoly) -> Fingerprint:
    data = bytes([p.order]) + struct.pack(f"<{len(p.coeffs)}q", *p.coeffs)
    return Fingerprint(data, fnv1a64(data))


def from_fingerprint(fp: Fingerprint | bytes) -> BiPoly:
    """Inverse of :func:`fingerprint`."""
    data = fp.bytes if isinstance(fp, Fingerprint) else bytes(fp)
    if not data:
        raise DecodeError("empty fingerprint")
    order = data[0]
    if order > MAX_ORDER:
        raise DecodeError(f"fingerprint order {order} outside 0..{MAX_ORDER}")
    size = table_size(order)
    if len(data) != 1 + 8 * size:
        raise DecodeError(
            f"fingerprint of order {order} must be {1 + 8 * size} bytes, got {len(data)}"
        )
    return BiPoly(order, struct.unpack(f"<{size}q", data[1:]))


def _monomial(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def format_text(p: BiPoly, lam: str = "λ", x: str = "x") -> str:
    """Render terms by descending ``x`` degree, then descending ``λ`` degree."""
    parts = []
    for i in range(p.order, -1, -1):
        for j in range(p.order - i, -1, -1):
            c = p.coeff(i, j)
            if not c:
                continue
            mono = _monomial(x, i) + _monomial(lam, j)
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append(body if not parts and c > 0 else sign + body)
    return "".join(parts) if parts else "0"


_TERM = re.compile(
    r"([+-]?)(\d*)(?:(x)(?:\^(\d+))?)?(?:(λ|y|l)(?:\^(\d+))?)?"
)


def parse_text(text: str, order: int) -> BiPoly:
    """Parse the output of :func:`format_text` (``λ`` may be spelled ``y``)."""
    s = re.sub(r"\s+", "", text)
    if s == "0":
        return zero(order)
    terms: dict[tuple[int, int], int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise DecodeError(f"cannot parse polynomial near {s[pos:pos + 12]!r}")
        sign, digits, xv, xe, lv, le = m.groups()
        if not (digits or xv or lv):
            raise DecodeError(f"empty term near {s[pos:pos + 12]!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        i = (int(xe) if xe else 1) if xv else 0
        j = (int(le) if le else 1) if lv else 0
        terms[(i, j)] = terms.get((i, j), 0) + c
        pos = m.end()
    return BiPoly.from_dict(order, terms)
