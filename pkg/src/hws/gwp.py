"""Generalized weight polynomials P_w(Z) and their inversion to higher weight spectra."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .codes import (CODEWORD_BUDGET, LinearCode, SpectrumTable, extend_code,
                    spectrum_polynomial, weight_distribution)
from .errors import (MissingColumn, NegativeSpectrum, NonIntegralSpectrum, OutOfRange,
                     TooLarge)
from .exactalg import gaussian_binomial
from .matroid import PhiProfile

__all__ = ["WeightPolynomial", "gwp_assemble", "gwp_invert", "forward_evaluate",
           "polys_from_spectra", "extension_check", "ExtensionReport", "spectrum_polynomial",
           "falling_product"]


@dataclass(frozen=True)
class WeightPolynomial:
    """P_w(Z) = sum_l coeffs[l] Z^l (exact integers, trailing zeros stripped)."""
    w: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c:
                mono = "" if e == 0 else "Z" if e == 1 else f"Z^{e}"
                coef = str(c) if e == 0 or abs(c) != 1 else ("-" if c < 0 else "")
                terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ") or "0"


def falling_product(q: int, e: int, r: int) -> int:
    """prod_{i<r} (q^e - q^i): number of ordered r-frames of F_q^e."""
    out = 1
    qe = q ** e
    for i in range(r):
        out *= qe - q ** i
    return out


def gwp_assemble(phi: PhiProfile, k: int | None = None,
                 columns: Iterable[int] | None = None) -> dict[int, WeightPolynomial]:
    """P_j(Z) = sum_{l=0..k} (phi_j^(l) - phi_j^(l-1)) Z^l for every active column j."""
    k = phi.k if k is None else k
    if k != phi.k:
        raise OutOfRange(f"profile has k={phi.k}, asked for k={k}")
    active = set(phi.columns()) | {0}
    if columns is None:
        cols = sorted(active)
    else:
        cols = sorted(set(columns))
        absent = [j for j in cols if j not in active]
        if absent:
            raise MissingColumn(f"no phi values for columns {absent}")
    out: dict[int, WeightPolynomial] = {}
    for j in cols:
        coeffs = [phi.get(lv, j) - phi.get(lv - 1, j) for lv in range(k + 1)]
        p = WeightPolynomial(j, tuple(coeffs))
        if j > 0 and p(1) != 0:
            raise NonIntegralSpectrum(f"P_{j}(1) = {p(1)} != 0")
        if not p.is_zero():
            out[j] = p
    return out


def gwp_invert(polys: Mapping[int, WeightPolynomial] | Iterable[WeightPolynomial],
               q: int, k: int, n: int | None = None) -> SpectrumTable:
    """Solve P_w(q^e) = sum_{r<=e} A_w^(r) prod_{i<r}(q^e - q^i) for e = 0..k."""
    if q < 2:
        raise OutOfRange("q must be at least 2")
    plist = list(polys.values()) if isinstance(polys, Mapping) else list(polys)
    A: dict[int, dict[int, int]] = {r: {} for r in range(k + 1)}
    for p in plist:
        vals: list[int] = []
        for e in range(k + 1):
            rest = p(q ** e) - sum(vals[r] * falling_product(q, e, r) for r in range(e))
            den = falling_product(q, e, e)
            a, rem = divmod(rest, den)
            if rem:
                raise NonIntegralSpectrum(f"A_{p.w}^({e}) = {Fraction(rest, den)}")
            if a < 0:
                raise NegativeSpectrum(f"A_{p.w}^({e}) = {a}")
            vals.append(a)
        for r, a in enumerate(vals):
            if a:
                A[r][p.w] = a
    n = max((p.w for p in plist), default=0) if n is None else n
    return SpectrumTable(q, k, n, A, complete_through=k, method="gwp")


def forward_evaluate(t: SpectrumTable, w: int, e: int) -> int:
    """P_w(q^e) computed from the spectrum: sum_r A_w^(r) prod_{i<r}(q^e - q^i)."""
    return sum(t.get(r, w) * falling_product(t.q, e, r) for r in range(min(e, t.k) + 1))


def polys_from_spectra(t: SpectrumTable) -> dict[int, WeightPolynomial]:
    """Interpolate P_w through the k+1 values P_w(q^e), e = 0..k."""
    xs = [Fraction(t.q ** e) for e in range(t.k + 1)]
    weights = sorted({w for r in t.A for w, v in t.A[r].items() if v})
    out = {}
    for w in weights:
        ys = [Fraction(forward_evaluate(t, w, e)) for e in range(t.k + 1)]
        coeffs = _interpolate(xs, ys)
        if any(c.denominator != 1 for c in coeffs):
            raise NonIntegralSpectrum(f"P_{w} has non-integral coefficients")
        p = WeightPolynomial(w, tuple(int(c) for c in coeffs))
        if not p.is_zero():
            out[w] = p
    return out


def _interpolate(xs: list[Fraction], ys: list[Fraction]) -> list[Fraction]:
    """Newton divided differences, expanded to monomial coefficients."""
    m = len(xs)
    dd = list(ys)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        # coeffs <- coeffs * (Z - xs[i]) + dd[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[i] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[i]
    return coeffs


@dataclass
class ExtensionReport:
    m: int
    expected: dict[int, int]
    actual: dict[int, int]

    @property
    def mismatches(self) -> list[tuple[int, int, int]]:
        keys = sorted(set(self.expected) | set(self.actual))
        return [(j, self.expected.get(j, 0), self.actual.get(j, 0)) for j in keys
                if self.expected.get(j, 0) != self.actual.get(j, 0)]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def extension_check(c: LinearCode, m: int,
                    polys: Mapping[int, WeightPolynomial]) -> ExtensionReport:
    """Compare P_j(q^m) with the weight distribution of the F_{q^m}-extension of c."""
    if c.q ** (m * c.k) > CODEWORD_BUDGET:
        raise TooLarge(f"extension has {c.q ** (m * c.k)} codewords")
    z = c.q ** m
    expected = {j: p(z) for j, p in polys.items() if p(z)}
    actual = weight_distribution(extend_code(c, m))
    return ExtensionReport(m, expected, {w: v for w, v in actual.items() if v})


def row_sums_match(t: SpectrumTable) -> list[tuple[int, int, int]]:
    """Rows whose sum differs from the Gaussian binomial [k, r]_q."""
    bad = []
    for r in range(t.k + 1):
        if r in t.A:
            s, g = t.row_sum(r), gaussian_binomial(t.k, r, t.q)
            if s != g:
                bad.append((r, s, g))
    return bad
