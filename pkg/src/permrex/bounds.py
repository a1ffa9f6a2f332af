"""Certified real-number checks for the growth of f(n).

All real arithmetic goes through Enclosure, a thin wrapper around
mpmath's endpoint interval type: every value is a closed interval
guaranteed to contain the exact real, and every operation rounds
outward.  A comparison can therefore come back three ways - certified,
violated, or undecided - and undecided answers are retried up the
precision ladder (default 200 bits, doubling to a 2000-bit ceiling)
rather than glossed over.

The checks certify, against exact integer f(n):

  * the factorial sandwich  e^(1/(12n+1)) S(n) <= n! <= e^(1/12n) S(n)
    for the Stirling term S(x) = sqrt(2 pi x) (x/e)^x;
  * bracketing of S(x)S(x+1) by S(x+1/2)^2;
  * bracketing of g_a(x) + g_a(x+1) by (5/2) g_a(x+1/2), where
    g_a(x) = 4^x x^(a - lg(x)/4) is the growth template;
  * the doubling identity  b S(2x)/S(x)^2 g_a(x) = g_a(2x)  for
    a = lg(b) + 1/4 - lg(pi)/2;
  * the two-sided growth bound 0.195 g_al(n) <= f(n) <= (1/4) g_ah(n)
    with al = 5/4 - lg(pi)/2 and ah = lg(5) - 3/4 - lg(pi)/2, plus the
    sharper f(n) <= (1/4) g_al(n) at powers of two.

The n = 1 upper bound holds with exact equality, so g_alpha keeps
integer inputs on an exact path (4^k is one mantissa bit; 1^w is [1,1])
and comparisons accept touching intervals for <=.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import mpmath
from mpmath import iv, mp

from . import lengths
from .errors import DomainError, InvalidArgs, UndecidedAtPrecision

DEFAULT_PRECISION_BITS = 200
MAX_PRECISION_BITS = 2000

CERTIFIED = "certified"
UNDECIDED = "undecided"
VIOLATED = "violated"


def precision_ladder(base_bits: int = DEFAULT_PRECISION_BITS) -> list[int]:
    """Escalation schedule: base, then doubling, clamped at the ceiling."""
    if base_bits < 16:
        raise InvalidArgs(f"precision must be at least 16 bits, got {base_bits}")
    ladder = [base_bits]
    while ladder[-1] < MAX_PRECISION_BITS:
        ladder.append(min(ladder[-1] * 2, MAX_PRECISION_BITS))
    return ladder


class _Precision:
    """Context manager that sets iv.prec and restores it on exit."""

    def __init__(self, bits: int):
        self.bits = bits
        self._saved = 0

    def __enter__(self) -> "_Precision":
        self._saved = iv.prec
        iv.prec = self.bits
        return self

    def __exit__(self, *exc) -> None:
        iv.prec = self._saved


def precision(bits: int) -> _Precision:
    return _Precision(bits)


def _mpf_to_fraction(x) -> Fraction:
    numerator, denominator = mpmath.libmp.to_rational(x._mpf_)
    return Fraction(int(numerator), int(denominator))


class Enclosure:
    """A closed interval certain to contain one exact real value.

    Wraps an mpmath interval; construct via from_int / from_fraction or
    arithmetic on existing enclosures.  Width reflects both input
    uncertainty and outward rounding at the precision in force when
    each operation ran; values built at different precisions mix freely.
    """

    __slots__ = ("_iv",)

    def __init__(self, value):
        self._iv = iv.convert(value)

    @classmethod
    def from_int(cls, value: int) -> "Enclosure":
        return cls(iv.mpf(value))

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "Enclosure":
        fr = Fraction(value)
        return cls(iv.mpf(fr.numerator) / iv.mpf(fr.denominator))

    # -- inspection ---------------------------------------------------------

    def endpoints(self):
        """Both endpoints as exact mpf values (no rounding on extraction)."""
        lo_raw, hi_raw = self._iv._mpi_
        return mp.make_mpf(lo_raw), mp.make_mpf(hi_raw)

    @property
    def lo(self):
        return self.endpoints()[0]

    @property
    def hi(self):
        return self.endpoints()[1]

    @property
    def mid(self):
        lo, hi = self.endpoints()
        return (lo + hi) / 2

    @property
    def rad(self):
        lo, hi = self.endpoints()
        with mp.workprec(mp.prec + 10):
            return (hi - lo) / 2

    def exact_int(self) -> int | None:
        """The integer this enclosure pins down exactly, if any."""
        lo, hi = self.endpoints()
        if lo != hi or not mp.isint(lo):
            return None
        return int(lo)

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_finite(self) -> bool:
        lo, hi = self.endpoints()
        return bool(mp.isfinite(lo) and mp.isfinite(hi))

    def contains(self, value) -> bool:
        # Exact: endpoints are dyadic rationals, so Fraction comparison is safe.
        if not self.is_finite():
            return False
        lo, hi = (_mpf_to_fraction(e) for e in self.endpoints())
        target = Fraction(value)
        return lo <= target <= hi

    def __repr__(self) -> str:
        return f"Enclosure{format_interval(self)}"

    # -- arithmetic (always outward-rounded by the backing library) ---------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Enclosure):
            return other._iv
        if isinstance(other, int):
            return iv.mpf(other)
        if isinstance(other, Fraction):
            return iv.mpf(other.numerator) / iv.mpf(other.denominator)
        return NotImplemented

    def __add__(self, other):
        coerced = self._coerce(other)
        return NotImplemented if coerced is NotImplemented else Enclosure(self._iv + coerced)

    __radd__ = __add__

    def __sub__(self, other):
        coerced = self._coerce(other)
        return NotImplemented if coerced is NotImplemented else Enclosure(self._iv - coerced)

    def __rsub__(self, other):
        coerced = self._coerce(other)
        return NotImplemented if coerced is NotImplemented else Enclosure(coerced - self._iv)

    def __mul__(self, other):
        coerced = self._coerce(other)
        return NotImplemented if coerced is NotImplemented else Enclosure(self._iv * coerced)

    __rmul__ = __mul__

    def __truediv__(self, other):
        coerced = self._coerce(other)
        return NotImplemented if coerced is NotImplemented else Enclosure(self._iv / coerced)

    def __rtruediv__(self, other):
        coerced = self._coerce(other)
        return NotImplemented if coerced is NotImplemented else Enclosure(coerced / self._iv)

    def __neg__(self):
        return Enclosure(-self._iv)


def format_interval(x: Enclosure, digits: int = 12) -> str:
    lo, hi = x.endpoints()
    return f"[{mpmath.nstr(lo, digits)}, {mpmath.nstr(hi, digits)}]"


def enc_exp(x: Enclosure) -> Enclosure:
    return Enclosure(iv.exp(x._iv))


def enc_log(x: Enclosure) -> Enclosure:
    if not x.is_positive():
        raise DomainError(f"log needs a certainly-positive argument, got {format_interval(x)}")
    return Enclosure(iv.log(x._iv))


def enc_sqrt(x: Enclosure) -> Enclosure:
    if x.lo < 0:
        raise DomainError(f"sqrt needs a nonnegative argument, got {format_interval(x)}")
    return Enclosure(iv.sqrt(x._iv))


def enc_pi() -> Enclosure:
    return Enclosure(+iv.pi)


def enc_pow(base: Enclosure, exponent: Enclosure | Fraction | int) -> Enclosure:
    """base ** exponent via exp(exponent * log base); exact for integer
    exponents and for base exactly 1."""
    if isinstance(exponent, int) or (
        isinstance(exponent, Fraction) and exponent.denominator == 1
    ):
        return Enclosure(base._iv ** int(exponent))
    if isinstance(exponent, Fraction):
        exponent = Enclosure.from_fraction(exponent)
    if base.exact_int() == 1:
        return Enclosure.from_int(1)
    return enc_exp(exponent * enc_log(base))


def compare_le(lhs: Enclosure, rhs: Enclosure) -> str:
    """Three-valued certified comparison of the exact values inside."""
    outcome = lhs._iv <= rhs._iv
    if outcome is True:
        return CERTIFIED
    # Strictly disjoint the wrong way round means the exact values violate.
    if rhs._iv < lhs._iv:
        return VIOLATED
    return UNDECIDED


def overlap(lhs: Enclosure, rhs: Enclosure) -> bool:
    """True when the two enclosures intersect (consistent with equality)."""
    return not (lhs._iv < rhs._iv) and not (rhs._iv < lhs._iv)


# -- the Stirling term and the growth template ------------------------------

def stirling_S(x: Enclosure) -> Enclosure:
    """Enclosure of S(x) = sqrt(2 pi x) * (x/e)^x for certainly-positive x."""
    if not x.is_positive():
        raise DomainError(f"S(x) needs x > 0, got {format_interval(x)}")
    v = x._iv
    root = iv.sqrt(2 * iv.pi * v)
    power = iv.exp(v * (iv.log(v) - 1))  # (x/e)^x
    return Enclosure(root * power)


def g_alpha(x: Enclosure, alpha) -> Enclosure:
    """Enclosure of the growth template g_a(x) = 4^x * x^(a - lg(x)/4).

    `alpha` may be an Enclosure, an exact rational, or a zero-argument
    callable producing an Enclosure at the ambient precision.

    Integer x stays exact where possible: 4^k is a single mantissa bit,
    and x = 1 short-circuits to exactly 4 because 1^w = 1 for any w.
    The exactness matters: the growth bound on f is *tight* at n = 1.
    """
    if not isinstance(alpha, Enclosure):
        alpha = alpha() if callable(alpha) else Enclosure.from_fraction(Fraction(alpha))
    if not x.is_positive():
        raise DomainError(f"g_a(x) needs x > 0, got {format_interval(x)}")
    xi = x.exact_int()
    if xi is not None:
        four_pow = iv.mpf(4) ** xi
        if xi == 1:
            return Enclosure(four_pow)
        log_x = iv.log(iv.mpf(xi))
    else:
        v = x._iv
        four_pow = iv.exp(v * iv.log(iv.mpf(4)))
        log_x = iv.log(v)
    lg_x = log_x / iv.log(iv.mpf(2))
    exponent = alpha._iv - lg_x / 4
    return Enclosure(four_pow * iv.exp(exponent * log_x))


def alpha_low() -> Enclosure:
    """5/4 - lg(pi)/2, the exponent in the certified lower bound on f."""
    lg_pi = iv.log(iv.pi) / iv.log(iv.mpf(2))
    return Enclosure(iv.mpf(5) / iv.mpf(4) - lg_pi / 2)


def alpha_high() -> Enclosure:
    """lg(5) - 3/4 - lg(pi)/2, the exponent in the certified upper bound on f."""
    ln2 = iv.log(iv.mpf(2))
    lg5 = iv.log(iv.mpf(5)) / ln2
    lg_pi = iv.log(iv.pi) / ln2
    return Enclosure(lg5 - iv.mpf(3) / iv.mpf(4) - lg_pi / 2)


def alpha_for_beta(beta: Fraction | int) -> Enclosure:
    """The exponent lg(beta) + 1/4 - lg(pi)/2 that makes the doubling
    identity beta * S(2x)/S(x)^2 * g_a(x) = g_a(2x) hold."""
    fr = Fraction(beta)
    if fr <= 0:
        raise InvalidArgs(f"beta must be positive, got {beta}")
    ln2 = iv.log(iv.mpf(2))
    b = iv.mpf(fr.numerator) / iv.mpf(fr.denominator)
    lg_beta = iv.log(b) / ln2
    lg_pi = iv.log(iv.pi) / ln2
    return Enclosure(lg_beta + iv.mpf(1) / iv.mpf(4) - lg_pi / 2)


# -- report plumbing --------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    """Outcome of one certified sweep."""

    inequality: str
    domain: str
    status: str
    points_checked: int
    worst_margin: str
    worst_point: str
    max_precision_bits: int
    failures: tuple[str, ...] = ()


def ensure_certified(*reports: BoundReport) -> None:
    """Raise when any report is not fully certified."""
    for report in reports:
        if report.status == UNDECIDED:
            raise UndecidedAtPrecision(
                f"{report.inequality} undecided at {report.max_precision_bits} bits: "
                f"{report.failures}")
        if report.status == VIOLATED:
            raise AssertionError(
                f"{report.inequality} violated: {report.failures}")


# Each sweep point is (label, make) where make() evaluates, at the ambient
# precision, the list of (lhs, rhs) pairs whose lhs <= rhs must be certified.
_PointFactory = Callable[[], list[tuple[Enclosure, Enclosure]]]


def _sweep_le(
    inequality: str,
    domain: str,
    points: Sequence[tuple[str, _PointFactory]],
    base_bits: int,
) -> BoundReport:
    ladder = precision_ladder(base_bits)
    worst_margin_lo = None
    worst_margin_str = ""
    worst_point = ""
    max_bits = ladder[0]
    failures: list[str] = []
    status = CERTIFIED
    for label, make in points:
        point_status = UNDECIDED
        margins: list[Enclosure] = []
        for bits in ladder:
            max_bits = max(max_bits, bits)
            with precision(bits):
                pairs = make()
                outcomes = [compare_le(lhs, rhs) for lhs, rhs in pairs]
                margins = [rhs - lhs for lhs, rhs in pairs]
            if VIOLATED in outcomes:
                point_status = VIOLATED
                break
            if all(outcome == CERTIFIED for outcome in outcomes):
                point_status = CERTIFIED
                break
        if point_status is not CERTIFIED:
            status = VIOLATED if point_status is VIOLATED else (
                status if status is VIOLATED else UNDECIDED)
            failures.append(f"{label}: {point_status}")
            continue
        for margin in margins:
            margin_lo = margin.lo
            if worst_margin_lo is None or margin_lo < worst_margin_lo:
                worst_margin_lo = margin_lo
                worst_margin_str = format_interval(margin)
                worst_point = label
    return BoundReport(
        inequality=inequality,
        domain=domain,
        status=status,
        points_checked=len(points),
        worst_margin=worst_margin_str,
        worst_point=worst_point,
        max_precision_bits=max_bits,
        failures=tuple(failures),
    )


# -- certified sweeps -------------------------------------------------------

def check_stirling_sandwich(
    max_n: int, base_bits: int = DEFAULT_PRECISION_BITS
) -> BoundReport:
    """Certify e^(1/(12n+1)) S(n) <= n! <= e^(1/12n) S(n) for 1 <= n <= max_n."""
    if max_n < 0:
        raise InvalidArgs(f"max_n must be >= 0, got {max_n}")

    def point(n: int) -> tuple[str, _PointFactory]:
        def make() -> list[tuple[Enclosure, Enclosure]]:
            s = stirling_S(Enclosure.from_int(n))
            fact = Enclosure.from_int(math.factorial(n))
            lower = enc_exp(Enclosure.from_fraction(Fraction(1, 12 * n + 1))) * s
            upper = enc_exp(Enclosure.from_fraction(Fraction(1, 12 * n))) * s
            return [(lower, fact), (fact, upper)]

        return f"n={n}", make

    return _sweep_le(
        inequality="factorial_sandwich",
        domain=f"n in [1, {max_n}]",
        points=[point(n) for n in range(1, max_n + 1)],
        base_bits=base_bits,
    )


def check_lemma_sa(
    grid: Iterable[Fraction | int], base_bits: int = DEFAULT_PRECISION_BITS
) -> BoundReport:
    """Certify S(x+1/2)^2 <= S(x)S(x+1) <= e^(1/2x) S(x+1/2)^2 on the grid."""
    xs = [Fraction(x) for x in grid]
    for x in xs:
        if x < 1:
            raise DomainError(f"grid point {x} < 1")

    def point(x: Fraction) -> tuple[str, _PointFactory]:
        def make() -> list[tuple[Enclosure, Enclosure]]:
            s_mid = stirling_S(Enclosure.from_fraction(x + Fraction(1, 2)))
            mid_sq = s_mid * s_mid
            product = stirling_S(Enclosure.from_fraction(x)) * stirling_S(
                Enclosure.from_fraction(x + 1))
            stretched = enc_exp(Enclosure.from_fraction(Fraction(1, 2) / x)) * mid_sq
            return [(mid_sq, product), (product, stretched)]

        return f"x={x}", make

    return _sweep_le(
        inequality="stirling_midpoint_bracket",
        domain=_grid_domain(xs),
        points=[point(x) for x in xs],
        base_bits=base_bits,
    )


AlphaLike = Fraction | int | Callable[[], Enclosure]


def _alpha_factory(alpha: AlphaLike) -> Callable[[], Enclosure]:
    if callable(alpha):
        return alpha
    fr = Fraction(alpha)
    return lambda: Enclosure.from_fraction(fr)


def check_lemma_ga(
    grid: Iterable[Fraction | int],
    alpha: AlphaLike,
    base_bits: int = DEFAULT_PRECISION_BITS,
) -> BoundReport:
    """Certify e^(-1/2 sqrt x) (5/2) g_a(x+1/2) <= g_a(x) + g_a(x+1)
    <= e^(1/2 sqrt x) (5/2) g_a(x+1/2) at grid points with x >= 4^a."""
    xs = [Fraction(x) for x in grid]
    make_alpha = _alpha_factory(alpha)
    _require_ga_domain(xs, make_alpha, base_bits)

    def point(x: Fraction) -> tuple[str, _PointFactory]:
        def make() -> list[tuple[Enclosure, Enclosure]]:
            a = make_alpha()
            five_halves = Enclosure.from_fraction(Fraction(5, 2))
            mid = five_halves * g_alpha(
                Enclosure.from_fraction(x + Fraction(1, 2)), a)
            total = g_alpha(Enclosure.from_fraction(x), a) + g_alpha(
                Enclosure.from_fraction(x + 1), a)
            wobble = Enclosure.from_fraction(Fraction(1, 2)) / enc_sqrt(
                Enclosure.from_fraction(x))
            return [
                (enc_exp(-wobble) * mid, total),
                (total, enc_exp(wobble) * mid),
            ]

        return f"x={x}", make

    return _sweep_le(
        inequality="growth_template_bracket",
        domain=_grid_domain(xs),
        points=[point(x) for x in xs],
        base_bits=base_bits,
    )


def _require_ga_domain(
    xs: Sequence[Fraction], make_alpha: Callable[[], Enclosure], base_bits: int
) -> None:
    # The bracket only holds from 4^alpha onward; refuse points that are not
    # certifiably inside, escalating precision before giving up.
    for x in xs:
        verdict = UNDECIDED
        for bits in precision_ladder(base_bits):
            with precision(bits):
                threshold = enc_pow(Enclosure.from_int(4), make_alpha())
                verdict = compare_le(threshold, Enclosure.from_fraction(x))
            if verdict is not UNDECIDED:
                break
        if verdict is not CERTIFIED:
            raise DomainError(f"grid point {x} is not certifiably >= 4^alpha")


def filter_ga_domain(
    grid: Iterable[Fraction | int],
    alpha: AlphaLike,
    base_bits: int = DEFAULT_PRECISION_BITS,
) -> list[Fraction]:
    """Grid points certifiably >= 4^alpha (the bracket's domain)."""
    make_alpha = _alpha_factory(alpha)
    kept: list[Fraction] = []
    for x in (Fraction(x) for x in grid):
        for bits in precision_ladder(base_bits):
            with precision(bits):
                threshold = enc_pow(Enclosure.from_int(4), make_alpha())
                verdict = compare_le(threshold, Enclosure.from_fraction(x))
            if verdict is not UNDECIDED:
                break
        if verdict is CERTIFIED:
            kept.append(x)
    return kept


def check_lemma_gaS(
    grid: Iterable[Fraction | int],
    beta: Fraction | int,
    base_bits: int = DEFAULT_PRECISION_BITS,
    tightness: Fraction = Fraction(1, 10**30),
) -> BoundReport:
    """Certify the doubling identity beta S(2x)/S(x)^2 g_a(x) = g_a(2x)
    with a = lg(beta) + 1/4 - lg(pi)/2: at every grid point the two sides'
    enclosures must overlap while both radii sit below `tightness`."""
    xs = [Fraction(x) for x in grid]
    for x in xs:
        if x <= 0:
            raise DomainError(f"grid point {x} <= 0")
    ladder = precision_ladder(base_bits)
    tight = Fraction(tightness)
    failures: list[str] = []
    status = CERTIFIED
    worst_radius = None
    worst_point = ""
    worst_str = ""
    max_bits = ladder[0]
    for x in xs:
        point_status = UNDECIDED
        lhs = rhs = None
        for bits in ladder:
            max_bits = max(max_bits, bits)
            with precision(bits):
                a = alpha_for_beta(beta)
                s_x = stirling_S(Enclosure.from_fraction(x))
                s_2x = stirling_S(Enclosure.from_fraction(2 * x))
                lhs = (
                    Enclosure.from_fraction(Fraction(beta))
                    * s_2x / (s_x * s_x)
                    * g_alpha(Enclosure.from_fraction(x), a)
                )
                rhs = g_alpha(Enclosure.from_fraction(2 * x), a)
                lhs_rad, rhs_rad = lhs.rad, rhs.rad
                tight_mpf = mp.mpf(tight.numerator) / mp.mpf(tight.denominator)
            if not overlap(lhs, rhs):
                point_status = VIOLATED
                break
            if lhs_rad < tight_mpf and rhs_rad < tight_mpf:
                point_status = CERTIFIED
                break
        if point_status is not CERTIFIED:
            status = VIOLATED if point_status is VIOLATED else (
                status if status is VIOLATED else UNDECIDED)
            failures.append(f"x={x}: {point_status}")
            continue
        radius = max(lhs.rad, rhs.rad)
        if worst_radius is None or radius > worst_radius:
            worst_radius = radius
            worst_point = f"x={x}"
            worst_str = format_interval(rhs - lhs)
    return BoundReport(
        inequality=f"doubling_identity_beta_{beta}",
        domain=_grid_domain(xs),
        status=status,
        points_checked=len(xs),
        worst_margin=worst_str,
        worst_point=worst_point,
        max_precision_bits=max_bits,
        failures=tuple(failures),
    )


def check_fn_bounds(
    max_n: int,
    base_bits: int = DEFAULT_PRECISION_BITS,
    power_of_two_strengthening: bool = True,
) -> BoundReport:
    """Certify 0.195 g_al(n) <= f(n) <= (1/4) g_ah(n) for 1 <= n <= max_n,
    plus f(n) <= (1/4) g_al(n) whenever n is a power of two."""
    if max_n < 1:
        raise InvalidArgs(f"max_n must be >= 1, got {max_n}")
    lengths.f(max_n)  # warm the exact table before timing-sensitive sweeps

    def point(n: int) -> tuple[str, _PointFactory]:
        power_of_two = n & (n - 1) == 0

        def make() -> list[tuple[Enclosure, Enclosure]]:
            x = Enclosure.from_int(n)
            exact = Enclosure.from_int(lengths.f(n))
            quarter = Enclosure.from_fraction(Fraction(1, 4))
            low_template = g_alpha(x, alpha_low())
            lower = Enclosure.from_fraction(Fraction(195, 1000)) * low_template
            upper = quarter * g_alpha(x, alpha_high())
            pairs = [(lower, exact), (exact, upper)]
            if power_of_two and power_of_two_strengthening:
                pairs.append((exact, quarter * low_template))
            return pairs

        return f"n={n}", make

    return _sweep_le(
        inequality="fn_growth_bounds",
        domain=f"n in [1, {max_n}]",
        points=[point(n) for n in range(1, max_n + 1)],
        base_bits=base_bits,
    )


@dataclass(frozen=True)
class EstimateRow:
    """One row of the power-of-two closed-form comparison."""

    m: int
    n: int
    f_exact: int
    estimate: Enclosure
    ratio: Enclosure
    ln_ratio: Enclosure
    anomalous: bool


def estimate_power_of_two(
    m_max: int, base_bits: int = DEFAULT_PRECISION_BITS
) -> list[EstimateRow]:
    """Compare exact f(2^m) with 4^(2^m) e^-1 pi^((1-m)/2) 2^(-(m^2-5m+6)/4).

    The closed form is only an asymptotic sketch, so rows carry ratios and
    log-ratios instead of a pass/fail.  A row is flagged anomalous when
    |ln ratio| shrinks after having grown, which would be out of character
    for a smooth drift.
    """
    if not 0 <= m_max <= 10:
        raise InvalidArgs(f"m_max must be in [0, 10], got {m_max}")
    rows: list[EstimateRow] = []
    previous_abs = None
    with precision(base_bits):
        for m in range(1, m_max + 1):
            n = 2**m
            exact = lengths.f(n)
            estimate = (
                Enclosure(iv.mpf(4) ** n)
                * enc_exp(Enclosure.from_int(-1))
                * enc_pow(enc_pi(), Fraction(1 - m, 2))
                * enc_pow(Enclosure.from_int(2), Fraction(-(m * m - 5 * m + 6), 4))
            )
            ratio = Enclosure.from_int(exact) / estimate
            ln_ratio = enc_log(ratio)
            abs_mid = abs(ln_ratio.mid)
            anomalous = previous_abs is not None and abs_mid < previous_abs
            previous_abs = abs_mid
            rows.append(EstimateRow(
                m=m,
                n=n,
                f_exact=exact,
                estimate=estimate,
                ratio=ratio,
                ln_ratio=ln_ratio,
                anomalous=anomalous,
            ))
    return rows


def default_grid(
    start: Fraction = Fraction(1),
    stop: Fraction = Fraction(100),
    step: Fraction = Fraction(1, 4),
) -> list[Fraction]:
    """The quarter-step grid used by the analytic sweeps."""
    if step <= 0 or stop < start:
        raise InvalidArgs("grid needs step > 0 and stop >= start")
    out = []
    x = Fraction(start)
    while x <= stop:
        out.append(x)
        x += step
    return out


def _grid_domain(xs: Sequence[Fraction]) -> str:
    if not xs:
        return "empty grid"
    return f"x in [{xs[0]}, {xs[-1]}], {len(xs)} points"
