"""Zeros of tau -> Z_{n;r,s}(tau) in a rectangle of the upper half plane."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import ArgumentError, ConvergenceError, PoleError, UnresolvedRegion
from ..elliptic.torus import TorusContext
from .evaluator import eval_Zn, magnitude_scale, _values

MIN_IM = 0.5
_MAX_DEPTH = 24
_STEP = 0.6  # largest phase change accepted on one contour segment


@dataclass(frozen=True)
class ZeroRecord:
    r: Fraction
    s: Fraction
    tau: complex
    residual: float      # |Z_n(tau)| / magnitude scale
    derivative: float    # |dZ_n/dtau| / magnitude scale
    winding: int


@dataclass
class ZeroSearch:
    records: list                 # zeros inside the requested region
    scanned: list                 # every zero found on the enlarged scan grid
    unresolved: list = field(default_factory=list)
    total_winding: int = 0        # summed over the scan grid; equals len(scanned) when clean


class _Target:
    """tau -> Z_{n;r,s}(tau), memoized, with precision raised where cancellation is severe.

    Near the cusp Z_n decays like a power of q while its monomials do not, so
    doubles lose every digit; such points are re-evaluated with mpmath.
    """

    _LADDER = ((None, 1e-8), (40, 1e-25), (90, 0.0))

    def __init__(self, n, r, s):
        self.n, self.r, self.s = n, r, s
        self._memo = {}

    def _eval(self, tau, dps):
        ctx = TorusContext(tau, dps=dps)
        if dps is None:
            r, s = float(self.r), float(self.s)
        else:
            mp = ctx.ops.ctx
            r = mp.mpf(self.r.numerator) / self.r.denominator
            s = mp.mpf(self.s.numerator) / self.s.denominator
        vals = _values(ctx, r, s)
        return complex(eval_Zn(self.n, r, s, ctx=ctx)), magnitude_scale(self.n, vals)

    def __call__(self, tau):
        key = complex(tau)
        if key not in self._memo:
            for dps, rel in self._LADDER:
                val, scale = self._eval(key, dps)
                if abs(val) > rel * scale:
                    break
            self._memo[key] = val
        return self._memo[key]

    def scale(self, tau):
        ctx = TorusContext(complex(tau))
        return magnitude_scale(self.n, _values(ctx, float(self.r), float(self.s)))

    def derivative(self, tau, h=1e-5):
        return (self(tau + h) - self(tau - h) - 1j * (self(tau + 1j * h) - self(tau - 1j * h))) / (4 * h)


def _phase(a, b):
    return cmath.phase(b / a)


def _segment(f, z0, z1, f0, f1, depth, floor):
    """Continuous change of arg f along [z0, z1]."""
    if abs(f0) < floor or abs(f1) < floor:
        raise UnresolvedRegion("zero on or near a contour", box=(z0, z1))
    zm = (z0 + z1) / 2
    fm = f(zm)
    if abs(fm) < floor:
        raise UnresolvedRegion("zero on or near a contour", box=(z0, z1))
    whole = _phase(f0, f1)
    a, b = _phase(f0, fm), _phase(fm, f1)
    if abs(whole) < _STEP and abs(a + b - whole) < 1e-9 and abs(a) < _STEP / 2 + 0.1 and abs(b) < _STEP / 2 + 0.1:
        return whole
    if depth >= _MAX_DEPTH:
        raise UnresolvedRegion("contour refinement limit reached", box=(z0, z1))
    return (_segment(f, z0, zm, f0, fm, depth + 1, floor)
            + _segment(f, zm, z1, fm, f1, depth + 1, floor))


def winding_number(f, box, floor=0.0):
    """Argument-principle count of zeros of f inside box = (re0, re1, im0, im1)."""
    re0, re1, im0, im1 = box
    corners = [complex(re0, im0), complex(re1, im0), complex(re1, im1), complex(re0, im1)]
    vals = [f(c) for c in corners]
    total = 0.0
    for k in range(4):
        total += _segment(f, corners[k], corners[(k + 1) % 4], vals[k], vals[(k + 1) % 4], 0, floor)
    w = total / (2 * math.pi)
    if abs(w - round(w)) > 1e-6:
        raise UnresolvedRegion(f"non-integral winding {w}", box=box)
    return int(round(w))


def _newton(target, tau, tol, max_iter=60):
    for _ in range(max_iter):
        if tau.imag < 0.25:
            raise ConvergenceError("Newton left the upper half plane")
        val = target(tau)
        d = target.derivative(tau)
        if d == 0:
            raise ConvergenceError("vanishing derivative")
        step = val / d
        if abs(step) > 0.1:
            step *= 0.1 / abs(step)
        tau = tau - step
        if abs(step) < tol:
            return tau
    raise ConvergenceError("Newton iteration in tau did not converge")


def _inside(tau, box, pad=0.0):
    re0, re1, im0, im1 = box
    return re0 - pad <= tau.real <= re1 + pad and im0 - pad <= tau.imag <= im1 + pad


def _parse_rs(r, s):
    r, s = Fraction(r), Fraction(s)
    if r.denominator == 1 and s.denominator == 1:
        raise PoleError("(r, s) is a lattice point")
    return r, s


def find_zeros(n, r, s, region=(-0.5, 0.5, MIN_IM, 4.0), cells=(6, 14), margin=0.013):
    """Zeros of Z_{n;r,s} in ``region``, each confirmed by winding one on a small box.

    The scan grid is the region enlarged by ``margin`` so that zeros on the
    region boundary are interior to some cell; they are kept when within 1e-8
    of the closed region.
    """
    r, s = _parse_rs(r, s)
    re0, re1, im0, im1 = region
    if im0 < MIN_IM or re0 >= re1 or im0 >= im1:
        raise ArgumentError(f"region must satisfy re0 < re1, {MIN_IM} <= im0 < im1")
    target = _Target(n, r, s)
    scan = (re0 - margin, re1 + margin, max(MIN_IM - 0.1, im0 - margin), im1 + margin)
    nx, ny = cells
    dx, dy = (scan[1] - scan[0]) / nx, (scan[3] - scan[2]) / ny
    boxes = [(scan[0] + i * dx, scan[0] + (i + 1) * dx, scan[2] + j * dy, scan[2] + (j + 1) * dy)
             for i in range(nx) for j in range(ny)]
    found, unresolved, total = [], [], 0
    while boxes:
        box = boxes.pop()
        centre = complex((box[0] + box[1]) / 2, (box[2] + box[3]) / 2)
        floor = 1e-80 * target.scale(centre)
        try:
            w = winding_number(target, box, floor)
        except UnresolvedRegion as exc:
            unresolved.append(exc)
            continue
        if w == 0:
            continue
        if w < 0:
            unresolved.append(UnresolvedRegion("negative winding for a holomorphic function", box, w))
            continue
        total += w
        if w > 1 and box[1] - box[0] > 1e-3:
            hx, hy = (box[0] + box[1]) / 2, (box[2] + box[3]) / 2
            total -= w
            boxes.extend([(box[0], hx, box[2], hy), (hx, box[1], box[2], hy),
                          (box[0], hx, hy, box[3]), (hx, box[1], hy, box[3])])
            continue
        try:
            rec = _refine(target, centre, box)
        except (ConvergenceError, UnresolvedRegion) as exc:
            unresolved.append(UnresolvedRegion(f"Newton/winding mismatch: {exc}", box, w))
            continue
        if w != 1 or rec.winding != 1:
            unresolved.append(UnresolvedRegion("zero is not simple", box, w))
        found.append(rec)
    found = _dedupe(found)
    inside = [z for z in found if _inside(z.tau, region, 1e-8)]
    key = lambda z: (z.tau.imag, z.tau.real)
    return ZeroSearch(sorted(inside, key=key), sorted(found, key=key), unresolved, total)


def _refine(target, start, box):
    scale = target.scale(start)
    tau = _newton(target, start, 1e-13)
    if not _inside(tau, box, 1e-9):
        raise ConvergenceError(f"Newton converged outside its cell to {tau}")
    h = min(box[1] - box[0], box[3] - box[2]) / 4
    w = winding_number(target, (tau.real - h, tau.real + h, tau.imag - h, tau.imag + h),
                       1e-80 * scale)
    scale = target.scale(tau)
    return ZeroRecord(target.r, target.s, tau, abs(target(tau)) / scale,
                      abs(target.derivative(tau)) / scale, w)


def _dedupe(records, tol=1e-8):
    out = []
    for rec in records:
        if all(abs(rec.tau - o.tau) > tol for o in out):
            out.append(rec)
    return out
