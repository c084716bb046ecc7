"""Pure-difference binomials, monomial maps and a small Groebner engine.

Every ideal handled here is generated by binomials ``u - v`` with unit
coefficients.  S-polynomials and reductions of such binomials are again pure
differences, so the engine never touches field arithmetic: a binomial is a
pair of monomials and reducing it means reducing each monomial on its own.

Internally monomials are packed into Python integers, one 8-bit field per
variable with the top bit of each field used as a guard, which turns
divisibility, lcm and multiplication into a handful of integer operations.
"""
from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import DanglingVertexError, DegreeBoundError, MarkedVertexError, UnknownVariableError
from .grid import CellCollection, Point

DEFAULT_KERNEL_CAP = 5_000_000


class Var(NamedTuple):
    """Variable id: ``x`` (vertex ``(a, b)``), ``v``/``h`` (interval ``a``) or ``w``."""

    kind: str
    a: int
    b: int = 0

    def __str__(self) -> str:
        if self.kind == "x":
            return f"x_{_num(self.a)}_{_num(self.b)}"
        if self.kind == "w":
            return "w"
        return f"{self.kind}{self.a}"


def _num(k: int) -> str:
    return str(k) if k >= 0 else f"m{-k}"


def x_var(p) -> Var:
    return Var("x", p[0], p[1])


def v_var(i: int) -> Var:
    return Var("v", i)


def h_var(j: int) -> Var:
    return Var("h", j)


W = Var("w", 0)


def _as_var(v) -> Var:
    if isinstance(v, Var):
        return v
    return x_var(v)


@dataclass(frozen=True, order=True)
class Monomial:
    """Sparse exponent vector; variables sorted, zero exponents never stored."""

    exps: tuple[tuple[Var, int], ...] = ()

    @classmethod
    def from_dict(cls, d: dict) -> "Monomial":
        return cls(tuple(sorted((_as_var(k), int(e)) for k, e in d.items() if e)))

    @classmethod
    def from_vars(cls, variables: Iterable) -> "Monomial":
        counts: dict[Var, int] = {}
        for v in variables:
            v = _as_var(v)
            counts[v] = counts.get(v, 0) + 1
        return cls.from_dict(counts)

    def as_dict(self) -> dict[Var, int]:
        return dict(self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def variables(self) -> frozenset[Var]:
        return frozenset(v for v, _ in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial.from_dict(d)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial.from_dict({v: e * k for v, e in self.exps})

    def divides(self, other: "Monomial") -> bool:
        d = other.as_dict()
        return all(d.get(v, 0) >= e for v, e in self.exps)

    def gcd(self, other: "Monomial") -> "Monomial":
        d = other.as_dict()
        return Monomial.from_dict({v: min(e, d.get(v, 0)) for v, e in self.exps})

    def __truediv__(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            if d.get(v, 0) < e:
                raise ValueError("monomial does not divide")
            d[v] -= e
        return Monomial.from_dict(d)

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.exps)


ONE = Monomial()


@dataclass(frozen=True)
class Binomial:
    """``plus - minus``.  ``plus == minus`` encodes the zero polynomial."""

    plus: Monomial
    minus: Monomial

    @property
    def is_zero(self) -> bool:
        return self.plus == self.minus

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def degree(self) -> int:
        return max(self.plus.degree, self.minus.degree)

    def variables(self) -> frozenset[Var]:
        return self.plus.variables() | self.minus.variables()

    def negated(self) -> "Binomial":
        return Binomial(self.minus, self.plus)

    def same_up_to_sign(self, other: "Binomial") -> bool:
        return self == other or self == other.negated()

    def oriented(self, order: "TermOrder") -> "Binomial":
        """Leading term first."""
        if order.greater(self.minus, self.plus):
            return self.negated()
        return self

    def __str__(self) -> str:
        return f"{self.plus} - {self.minus}"


class TermOrder:
    """Degree reverse lexicographic order on a fixed, sorted variable list.

    ``variables[0]`` is the largest variable.  The packed encoding stores the
    last variable in the most significant field, so for equal degrees a
    smaller packed integer is a larger monomial.
    """

    kind = "degrevlex"
    WIDTH = 8

    def __init__(self, variables: Iterable):
        self.variables: tuple[Var, ...] = tuple(sorted({_as_var(v) for v in variables}))
        self.index = {v: i for i, v in enumerate(self.variables)}
        n = len(self.variables)
        w = self.WIDTH
        self.guard = sum(1 << (w * i + w - 1) for i in range(n))
        self.ones = sum(1 << (w * i) for i in range(n))
        self.field_mask = (1 << (w * n)) - 1
        self._top = w * (n - 1) if n else 0
        self._fill = (1 << w) - 1

    @classmethod
    def for_binomials(cls, binomials: Iterable[Binomial], extra: Iterable = ()) -> "TermOrder":
        vs = set(_as_var(v) for v in extra)
        for b in binomials:
            vs |= b.variables()
        return cls(vs)

    # -- packing -----------------------------------------------------------
    def pack(self, m: Monomial) -> int:
        out = 0
        for v, e in m.exps:
            try:
                i = self.index[v]
            except KeyError:
                raise UnknownVariableError(str(v)) from None
            if e >= 1 << (self.WIDTH - 1):
                raise DegreeBoundError("exponent too large for packed monomials")
            out += e << (self.WIDTH * i)
        return out

    def unpack(self, x: int) -> Monomial:
        w = self.WIDTH
        exps = []
        i = 0
        while x:
            e = x & self._fill
            if e:
                exps.append((self.variables[i], e))
            x >>= w
            i += 1
        return Monomial(tuple(exps))

    def degree(self, x: int) -> int:
        if not x:
            return 0
        return ((x * self.ones) >> self._top) & self._fill

    def key(self, x: int) -> tuple[int, int]:
        """Sort key: larger key means larger monomial."""
        return (self.degree(x), -x)

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def _ge_mask(self, a: int, b: int) -> int:
        # full-field mask of the fields where a_i >= b_i
        return ((((a | self.guard) - b) & self.guard) >> (self.WIDTH - 1)) * self._fill

    def lcm(self, a: int, b: int) -> int:
        m = self._ge_mask(a, b)
        return (a & m) | (b & ~m & self.field_mask)

    def gcd(self, a: int, b: int) -> int:
        m = self._ge_mask(a, b)
        return (b & m) | (a & ~m & self.field_mask)

    def support(self, a: int) -> int:
        return ((a | self.guard) - self.ones) & self.guard

    def coprime(self, a: int, b: int) -> bool:
        return not (self.support(a) & self.support(b))

    def greater(self, m1: Monomial, m2: Monomial) -> bool:
        return self.key(self.pack(m1)) > self.key(self.pack(m2))


class GroebnerBasis:
    """Reduced Groebner basis of a pure-difference binomial ideal.

    ``elements`` holds packed ``(lead, tail)`` pairs.  When ``max_degree`` is
    set, S-pairs above that degree are skipped; for homogeneous generators the
    result still decides membership of every binomial of degree <= max_degree.
    """

    def __init__(self, order: TermOrder, elements, max_degree: int | None = None):
        self.order = order
        self.elements: list[tuple[int, int]] = list(elements)
        self.max_degree = max_degree

    def __len__(self) -> int:
        return len(self.elements)

    def reduce_packed(self, m: int) -> int:
        div = self.order.divides
        elements = self.elements
        changed = True
        while changed:
            changed = False
            for lead, tail in elements:
                if div(lead, m):
                    m = m - lead + tail
                    changed = True
                    break
        return m

    def normal_form_monomial(self, m: Monomial) -> Monomial:
        return self.order.unpack(self.reduce_packed(self.order.pack(m)))

    def normal_form(self, f: Binomial) -> Binomial | None:
        a = self.reduce_packed(self.order.pack(f.plus))
        b = self.reduce_packed(self.order.pack(f.minus))
        if a == b:
            return None
        return Binomial(self.order.unpack(a), self.order.unpack(b)).oriented(self.order)

    def contains(self, f: Binomial) -> bool:
        return self.normal_form(f) is None

    def binomials(self) -> list[Binomial]:
        return [Binomial(self.order.unpack(a), self.order.unpack(b)) for a, b in self.elements]


def groebner(gens: Iterable[Binomial], order: TermOrder | None = None, max_degree: int | None = None) -> GroebnerBasis:
    """Buchberger's algorithm specialised to pure-difference binomials.

    Pairs are processed by increasing lcm degree; pairs with coprime leading
    terms are dropped (first criterion).
    """
    gens = [g for g in gens if not g.is_zero]
    if order is None:
        order = TermOrder.for_binomials(gens)
    if max_degree is not None and any(g.plus.degree != g.minus.degree for g in gens):
        max_degree = None  # truncation is only sound for homogeneous input
    key = order.key
    basis: list[tuple[int, int]] = []
    pairs: list = []
    counter = itertools.count()
    probe = GroebnerBasis(order, ())
    probe.elements = basis  # share the growing list

    def add(a: int, b: int):
        if a == b:
            return
        lead, tail = (a, b) if key(a) > key(b) else (b, a)
        k = len(basis)
        basis.append((lead, tail))
        for i in range(k):
            other = basis[i][0]
            if order.coprime(other, lead):
                continue
            lc = order.lcm(other, lead)
            d = order.degree(lc)
            if max_degree is not None and d > max_degree:
                continue
            heapq.heappush(pairs, (d, next(counter), i, k, lc))

    for g in gens:
        a = probe.reduce_packed(order.pack(g.plus))
        b = probe.reduce_packed(order.pack(g.minus))
        add(a, b)

    while pairs:
        _, _, i, j, lc = heapq.heappop(pairs)
        li, ti = basis[i]
        lj, tj = basis[j]
        a = probe.reduce_packed(lc - li + ti)
        b = probe.reduce_packed(lc - lj + tj)
        add(a, b)

    return GroebnerBasis(order, _reduce_basis(order, basis), max_degree)


def _reduce_basis(order: TermOrder, basis):
    key = order.key
    div = order.divides
    leads = sorted({lt for lt in basis}, key=lambda lt: key(lt[0]))
    minimal = []
    for lead, tail in leads:
        if any(div(l2, lead) for l2, _ in minimal):
            continue
        minimal = [(l2, t2) for l2, t2 in minimal if not div(lead, l2)]
        minimal.append((lead, tail))
    out = set()
    gb = GroebnerBasis(order, minimal)
    for lead, tail in minimal:
        t = gb.reduce_packed(tail)
        if t != lead:
            out.add((lead, t))
    return sorted(out, key=lambda lt: key(lt[0]), reverse=True)


def buchberger(gens: Iterable[Binomial], order: TermOrder | None = None) -> list[Binomial]:
    """Reduced Groebner basis as a list of leading-term-first binomials."""
    return groebner(gens, order).binomials()


def normal_form(f: Binomial, basis, order: TermOrder | None = None) -> Binomial | None:
    """Full reduction of ``f``; ``None`` stands for zero.

    ``basis`` is a :class:`GroebnerBasis` or a list of binomials that already
    form a Groebner basis for ``order``.
    """
    if f.is_zero:
        return None
    if not isinstance(basis, GroebnerBasis):
        basis = list(basis)
        if order is None:
            order = TermOrder.for_binomials(basis + [f])
        elements = []
        for b in basis:
            b = b.oriented(order)
            elements.append((order.pack(b.plus), order.pack(b.minus)))
        basis = GroebnerBasis(order, elements)
    return basis.normal_form(f)


def s_polynomial(f: Binomial, g: Binomial, order: TermOrder) -> Binomial:
    f = f.oriented(order)
    g = g.oriented(order)
    lc = Monomial.from_dict({v: max(f.plus.as_dict().get(v, 0), g.plus.as_dict().get(v, 0))
                             for v in f.plus.variables() | g.plus.variables()})
    return Binomial((lc / f.plus) * f.minus, (lc / g.plus) * g.minus)


# -- ideals attached to a collection ---------------------------------------------

def inner_2_minors(P: CellCollection) -> list[Binomial]:
    """``x_a x_b - x_c x_d`` for every inner interval ``[a, b]``."""
    out = []
    for iv in P.inner_intervals:
        a, b = iv.diagonal
        c, d = iv.anti_diagonal
        out.append(Binomial(Monomial.from_vars((a, b)), Monomial.from_vars((c, d))))
    return out


def vertex_order(P: CellCollection) -> TermOrder:
    return TermOrder(x_var(p) for p in P.vertex_set)


@dataclass(frozen=True)
class MonomialMap:
    """Images of the vertex variables; ``marked`` is empty for the edge ring map."""

    images: dict = field(hash=False)
    marked: frozenset = frozenset()

    def image(self, v) -> Monomial:
        try:
            return self.images[_as_var(v)]
        except KeyError:
            raise UnknownVariableError(str(v)) from None

    @property
    def domain(self) -> list[Var]:
        return sorted(self.images)

    def target_variables(self) -> list[Var]:
        vs = set()
        for m in self.images.values():
            vs |= m.variables()
        return sorted(vs)


def edge_ring_map(P: CellCollection) -> MonomialMap:
    """``x_r -> v_i h_j`` where ``r`` lies on vertical interval i and horizontal j."""
    return hole_toric_map(P, ())


def hole_toric_map(P: CellCollection, marked: Iterable) -> MonomialMap:
    """Edge ring map with the extra factor ``w`` on every marked vertex."""
    marked = frozenset(Point(*p) for p in marked)
    bad = marked - P.vertex_set
    if bad:
        raise MarkedVertexError(f"marked vertex not in collection: {sorted(bad)}")
    index = P.interval_index
    images = {}
    for p in P.vertex_set:
        if p not in index:
            raise DanglingVertexError()
        i, j = index[p]
        factors = [v_var(i), h_var(j)]
        if p in marked:
            factors.append(W)
        images[x_var(p)] = Monomial.from_vars(factors)
    return MonomialMap(images, marked)


def apply_map(m: MonomialMap, mono: Monomial) -> Monomial:
    out: dict[Var, int] = {}
    for v, e in mono.exps:
        for t, f in m.image(v).exps:
            out[t] = out.get(t, 0) + e * f
    return Monomial.from_dict(out)


def in_kernel(m: MonomialMap, b: Binomial) -> bool:
    return apply_map(m, b.plus) == apply_map(m, b.minus)


def _monomial_count(n: int, d: int) -> int:
    return sum(math.comb(n + k - 1, k) for k in range(1, d + 1))


def _kernel_buckets(m: MonomialMap, d: int, cap: int):
    """Group all monomials of degree 1..d by their image (packed)."""
    domain = m.domain
    n = len(domain)
    if _monomial_count(n, d) > cap:
        raise DegreeBoundError()
    target = TermOrder(m.target_variables())
    img = [target.pack(m.images[v]) for v in domain]
    buckets: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for k in range(1, d + 1):
        for combo in itertools.combinations_with_replacement(range(n), k):
            s = 0
            for i in combo:
                s += img[i]
            buckets.setdefault((k, s), []).append(combo)
    return domain, {key: ms for key, ms in buckets.items() if len(ms) > 1}


def _combo_monomial(domain, combo) -> Monomial:
    return Monomial.from_vars(domain[i] for i in combo)


def kernel_binomials_up_to_degree(m: MonomialMap, d: int, cap: int = DEFAULT_KERNEL_CAP) -> list[Binomial]:
    """All coprime ``u - v`` of degree <= d with equal images, leading term first."""
    if d < 1:
        raise ValueError("degree bound must be positive")
    domain, buckets = _kernel_buckets(m, d, cap)
    order = TermOrder(domain)
    out = []
    for _, combos in sorted(buckets.items()):
        for c1, c2 in itertools.combinations(combos, 2):
            if set(c1).isdisjoint(c2):
                b = Binomial(_combo_monomial(domain, c1), _combo_monomial(domain, c2)).oriented(order)
                out.append(b)
    out.sort(key=lambda b: (b.degree, str(b)))
    return out


@dataclass
class ToricReport:
    """Two inclusions between the inner-minor ideal and a toric kernel, up to a degree."""

    degree: int
    marked: list
    n_generators: int
    generators_in_kernel: bool
    generator_failures: list[str]
    n_monomials: int
    n_fibres: int
    n_kernel_binomials: int
    kernel_in_ideal: bool
    kernel_failures: list[str]
    groebner_size: int

    @property
    def passed(self) -> bool:
        return self.generators_in_kernel and self.kernel_in_ideal

    @property
    def verdict(self) -> str:
        if self.passed:
            return f"equal up to degree {self.degree}"
        return f"not equal up to degree {self.degree}"

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "marked": [list(p) for p in self.marked],
            "verdict": self.verdict,
            "passed": self.passed,
            "generators": self.n_generators,
            "generators_in_kernel": self.generators_in_kernel,
            "generator_failures": self.generator_failures,
            "monomials": self.n_monomials,
            "fibres": self.n_fibres,
            "kernel_binomials": self.n_kernel_binomials,
            "kernel_in_ideal": self.kernel_in_ideal,
            "kernel_failures": self.kernel_failures,
            "groebner_size": self.groebner_size,
        }


def toric_equality_report(P: CellCollection, m: MonomialMap | None = None, d: int = 4,
                          cap: int = DEFAULT_KERNEL_CAP, max_failures: int = 10) -> ToricReport:
    """Check ``I_P`` against ``ker`` of ``m`` on all binomials of degree <= d.

    Inclusion one evaluates every inner 2-minor under ``m``.  Inclusion two
    groups the monomials of degree <= d into fibres of ``m``; the coprime
    kernel binomials all reduce to zero exactly when each fibre has a single
    normal form modulo a degree-truncated Groebner basis of ``I_P``.
    """
    if d < 2:
        raise ValueError("degree bound must be at least 2")
    if m is None:
        m = edge_ring_map(P)
    gens = inner_2_minors(P)
    gen_fail = [str(g) for g in gens if not in_kernel(m, g)]

    domain, buckets = _kernel_buckets(m, d, cap)
    order = TermOrder(domain)
    gb = groebner(gens, order, max_degree=d)
    n_mon = _monomial_count(len(domain), d)
    n_pairs = 0
    failures = []
    kernel_ok = True
    for _, combos in sorted(buckets.items()):
        nfs = [gb.reduce_packed(_pack_combo(order, c)) for c in combos]
        if len(set(nfs)) > 1:
            kernel_ok = False
        for (c1, x1), (c2, x2) in itertools.combinations(zip(combos, nfs), 2):
            if set(c1).isdisjoint(c2):
                n_pairs += 1
                if x1 != x2 and len(failures) < max_failures:
                    b = Binomial(_combo_monomial(domain, c1), _combo_monomial(domain, c2)).oriented(order)
                    failures.append(str(b))
    return ToricReport(
        degree=d,
        marked=sorted(m.marked),
        n_generators=len(gens),
        generators_in_kernel=not gen_fail,
        generator_failures=gen_fail[:max_failures],
        n_monomials=n_mon,
        n_fibres=len(buckets),
        n_kernel_binomials=n_pairs,
        kernel_in_ideal=kernel_ok,
        kernel_failures=failures,
        groebner_size=len(gb),
    )


def _pack_combo(order: TermOrder, combo) -> int:
    x = 0
    for i in combo:
        x += 1 << (order.WIDTH * i)
    return x
