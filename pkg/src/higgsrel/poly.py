"""Exact graded polynomial arithmetic.

Everything downstream works in sparse multivariate polynomials over the
rationals, graded by ordinary (cohomological) degree.  Variables carry a
fixed positive weight; odd-weight variables anticommute and square to
zero, even-weight variables are central.  There is no floating point
anywhere: the sole scalar type is `Rational` (= `fractions.Fraction`,
always reduced, positive denominator).

Monomials are stored as exponent tuples over a `VarTable`, in table
order; multiplication tracks the Koszul sign of reordering odd factors.
"Total degree" means half the ordinary degree and is only meaningful
for even classes.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class VarTable:
    """Ordered table of named variables with fixed ordinary-degree weights."""

    __slots__ = ("names", "weights", "odd", "_index")

    def __init__(self, variables: Iterable[tuple[str, int]]):
        names, weights = [], []
        for name, weight in variables:
            if weight <= 0:
                raise ValueError(f"weight of {name!r} must be a positive integer")
            names.append(name)
            weights.append(int(weight))
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names in table")
        self.names: tuple[str, ...] = tuple(names)
        self.weights: tuple[int, ...] = tuple(weights)
        self.odd: tuple[bool, ...] = tuple(w % 2 == 1 for w in weights)
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def degree(self, exps: tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VarTable)
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return hash((self.names, self.weights))

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"VarTable({inner})"


# Standard tables.  ASCII names double as the I/O aliases: a=alpha,
# b=beta, g3=gamma, u, psi<j>, eta, th=theta, xi<j>.

def abg_table() -> VarTable:
    return VarTable([("a", 2), ("b", 4), ("g3", 6)])


def abgu_table() -> VarTable:
    return VarTable([("a", 2), ("b", 4), ("g3", 6), ("u", 2)])


def moduli_table(g: int) -> VarTable:
    """alpha, beta, gamma, u and the 2g odd generators psi_j (degree 3)."""
    base = [("a", 2), ("b", 4), ("g3", 6), ("u", 2)]
    base += [(f"psi{j}", 3) for j in range(1, 2 * g + 1)]
    return VarTable(base)


def symprod_table(g: int) -> VarTable:
    """eta, theta, u and the 2g odd generators xi_j (degree 1)."""
    base = [("eta", 2), ("th", 2), ("u", 2)]
    base += [(f"xi{j}", 1) for j in range(1, 2 * g + 1)]
    return VarTable(base)


def eta_theta_table() -> VarTable:
    return VarTable([("eta", 2), ("th", 2)])


def eta_theta_u_table() -> VarTable:
    return VarTable([("eta", 2), ("th", 2), ("u", 2)])


def eta_xi_table(g: int) -> VarTable:
    """eta and the raw odd generators, for top-pairing evaluations."""
    return VarTable([("eta", 2)] + [(f"xi{j}", 1) for j in range(1, 2 * g + 1)])


def _mul_monomials(
    table: VarTable, e1: tuple[int, ...], e2: tuple[int, ...]
) -> tuple[tuple[int, ...], int] | None:
    """Product of two canonical monomials: (exponents, sign), or None if 0."""
    odd = table.odd
    out = []
    for i, (a, b) in enumerate(zip(e1, e2)):
        s = a + b
        if odd[i] and s > 1:
            return None
        out.append(s)
    sign = 1
    odd1 = [i for i, a in enumerate(e1) if odd[i] and a]
    if odd1:
        for j, b in enumerate(e2):
            if odd[j] and b:
                # factors of e2 cross the odd factors of e1 sitting later
                crossings = sum(1 for i in odd1 if i > j)
                if crossings & 1:
                    sign = -sign
    return tuple(out), sign


class GradedPoly:
    """Sparse polynomial over `Rational` with graded, partly odd variables.

    Immutable after construction; no zero coefficients are stored; odd
    variables never carry an exponent above 1.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Mapping[tuple[int, ...], Fraction]):
        self.table = table
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            if not coeff:
                continue
            if len(exps) != len(table):
                raise ValueError("exponent tuple does not match table")
            for i, e in enumerate(exps):
                if e < 0 or (table.odd[i] and e > 1):
                    raise ValueError(f"bad exponent {e} at {table.names[i]!r}")
            clean[exps] = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        self.terms: dict[tuple[int, ...], Fraction] = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, table: VarTable) -> "GradedPoly":
        return cls(table, {})

    @classmethod
    def constant(cls, table: VarTable, value) -> "GradedPoly":
        return cls(table, {(0,) * len(table): Fraction(value)})

    @classmethod
    def one(cls, table: VarTable) -> "GradedPoly":
        return cls.constant(table, 1)

    @classmethod
    def variable(cls, table: VarTable, name: str) -> "GradedPoly":
        exps = [0] * len(table)
        exps[table.index(name)] = 1
        return cls(table, {tuple(exps): _ONE})

    @classmethod
    def monomial(cls, table: VarTable, exps: tuple[int, ...], coeff=1) -> "GradedPoly":
        return cls(table, {tuple(exps): Fraction(coeff)})

    # -- ring operations --------------------------------------------------

    def _check_table(self, other: "GradedPoly") -> None:
        if self.table != other.table:
            raise ValueError("variable table mismatch")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GradedPoly)
            and self.table == other.table
            and self.terms == other.terms
        )

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(self.table, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._check_table(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return GradedPoly(self.table, out)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def scale(self, value) -> "GradedPoly":
        q = Fraction(value)
        if not q:
            return GradedPoly.zero(self.table)
        return GradedPoly(self.table, {e: c * q for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_table(other)
        out: dict[tuple[int, ...], Fraction] = {}
        table = self.table
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                prod = _mul_monomials(table, e1, e2)
                if prod is None:
                    continue
                e, sign = prod
                c = c1 * c2 if sign > 0 else -(c1 * c2)
                s = out.get(e, _ZERO) + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return GradedPoly(self.table, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "GradedPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = GradedPoly.one(self.table)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            n >>= 1
            if base_needed and n:
                base = base * base
        return result

    # -- grading ----------------------------------------------------------

    def monomial_degrees(self) -> set[int]:
        return {self.table.degree(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.monomial_degrees()) <= 1

    def ordinary_degree(self) -> int | None:
        """Degree of a homogeneous polynomial; None for 0; error if mixed."""
        degs = self.monomial_degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def homogeneous_part(self, ordinary_degree: int) -> "GradedPoly":
        deg = self.table.degree
        return GradedPoly(
            self.table,
            {e: c for e, c in self.terms.items() if deg(e) == ordinary_degree},
        )

    # -- structural helpers ------------------------------------------------

    def coefficient(self, exps: tuple[int, ...]) -> Fraction:
        return self.terms.get(tuple(exps), _ZERO)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.table), _ZERO)

    def cap(self, name: str, max_exp: int) -> "GradedPoly":
        """Drop monomials where `name` has exponent above `max_exp`."""
        i = self.table.index(name)
        return GradedPoly(
            self.table, {e: c for e, c in self.terms.items() if e[i] <= max_exp}
        )

    def split_by(self, name: str) -> dict[int, "GradedPoly"]:
        """Coefficients of powers of `name` (with that variable removed
        from the exponents but the table unchanged)."""
        i = self.table.index(name)
        buckets: dict[int, dict[tuple[int, ...], Fraction]] = {}
        for e, c in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1 :]
            buckets.setdefault(e[i], {})[rest] = c
        return {k: GradedPoly(self.table, t) for k, t in sorted(buckets.items())}

    def project(self, target: VarTable) -> "GradedPoly":
        """Re-express over a table holding a subset of the variables.

        Any variable absent from `target` must have exponent 0 throughout.
        """
        positions = []
        keep = set()
        for name in target.names:
            j = self.table.index(name)
            positions.append(j)
            keep.add(j)
        for e in self.terms:
            for j, exp in enumerate(e):
                if exp and j not in keep:
                    raise ValueError(
                        f"variable {self.table.names[j]!r} occurs; cannot project"
                    )
        out = {}
        for e, c in self.terms.items():
            out[tuple(e[j] for j in positions)] = c
        return GradedPoly(target, out)

    def embed(self, target: VarTable) -> "GradedPoly":
        """Re-express over a larger table containing all our variables
        (with matching weights); new variables get exponent 0."""
        positions = []
        for name, weight in zip(self.table.names, self.table.weights):
            j = target.index(name)
            if target.weights[j] != weight:
                raise ValueError(f"weight mismatch for {name!r}")
            positions.append(j)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(target)
            for j, exp in zip(positions, e):
                ne[j] = exp
            out[tuple(ne)] = c
        return GradedPoly(target, out)

    def derivative(self, name: str) -> "GradedPoly":
        """Partial derivative with respect to an even variable."""
        i = self.table.index(name)
        if self.table.odd[i]:
            raise ValueError("derivative only supported for even variables")
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
            out[ne] = out.get(ne, _ZERO) + c * e[i]
        return GradedPoly(self.table, out)

    def substitute(
        self, images: Mapping[str, "GradedPoly"], target: VarTable
    ) -> "GradedPoly":
        """Ring homomorphism sending each variable to its image.

        Images of odd variables must be homogeneous of odd ordinary degree
        (and even variables of even parity), otherwise the sign bookkeeping
        of the source ring would not be respected.
        """
        imgs: dict[int, GradedPoly] = {}
        for name, image in images.items():
            i = self.table.index(name)
            if image.table != target:
                raise ValueError(f"image of {name!r} lives in the wrong table")
            want = self.table.weights[i] % 2
            for e in image.terms:
                if target.degree(e) % 2 != want:
                    raise ValueError(
                        f"image of {name!r} has a term of the wrong parity"
                    )
            imgs[i] = image
        powers: dict[tuple[int, int], GradedPoly] = {}

        def image_power(i: int, e: int) -> GradedPoly:
            key = (i, e)
            if key not in powers:
                powers[key] = imgs[i] ** e
            return powers[key]

        result = GradedPoly.zero(target)
        for exps, coeff in self.terms.items():
            term = GradedPoly.constant(target, coeff)
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i not in imgs:
                    raise ValueError(
                        f"no image given for variable {self.table.names[i]!r}"
                    )
                term = term * image_power(i, e)
            result = result + term
        return result

    def __repr__(self) -> str:
        return f"GradedPoly({poly_format(self)})"


def degree_slice_monomials(table: VarTable, degree: int) -> list[tuple[int, ...]]:
    """All monomials of exactly the given ordinary degree, descending-lex
    by exponent tuple in table order (deterministic)."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    weights, odd, n = table.weights, table.odd, len(table)
    out: list[tuple[int, ...]] = []

    def rec(i: int, rem: int, prefix: tuple[int, ...]) -> None:
        if i == n:
            if rem == 0:
                out.append(prefix)
            return
        emax = rem // weights[i]
        if odd[i]:
            emax = min(emax, 1)
        for e in range(emax, -1, -1):
            rec(i + 1, rem - e * weights[i], prefix + (e,))

    rec(0, degree, ())
    return out


# -- text format --------------------------------------------------------
#
# Terms joined by ` + ` / ` - `; a term is `coeff*v^e*w*...` with the
# coefficient omitted when it is +-1 and variables are present.  The
# printer emits monomials in (degree, descending-lex) order and the
# parser round-trips exactly.

class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z][A-Za-z0-9]*)|([+\-*^]))")


def poly_format(p: GradedPoly) -> str:
    if not p.terms:
        return "0"
    table = p.table

    def key(e: tuple[int, ...]):
        return (table.degree(e), tuple(-x for x in e))

    pieces: list[str] = []
    for exps in sorted(p.terms, key=key):
        coeff = p.terms[exps]
        factors = []
        for name, e in zip(table.names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if factors and mag == 1:
            body = "*".join(factors)
        elif factors:
            body = "*".join([str(mag)] + factors)
        else:
            body = str(mag)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(pieces)


def poly_parse(text: str, table: VarTable) -> GradedPoly:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        number, name, op = m.groups()
        start = m.start(1) if number else m.start(2) if name else m.start(3)
        if number:
            tokens.append(("num", number, start))
        elif name:
            tokens.append(("var", name, start))
        else:
            tokens.append(("op", op, start))
        pos = m.end()
    if not tokens:
        raise PolyParseError("empty polynomial", 0)

    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else ("end", "", len(text))

    def parse_factor() -> GradedPoly:
        nonlocal i
        kind, value, at = peek()
        if kind == "num":
            i += 1
            return GradedPoly.constant(table, Fraction(value))
        if kind == "var":
            i += 1
            try:
                poly = GradedPoly.variable(table, value)
            except KeyError:
                raise PolyParseError(f"unknown variable {value!r}", at) from None
            kind2, value2, _ = peek()
            if kind2 == "op" and value2 == "^":
                i += 1
                kind3, value3, at3 = peek()
                if kind3 != "num" or "/" in value3:
                    raise PolyParseError("exponent must be an integer", at3)
                i += 1
                poly = poly ** int(value3)
            return poly
        raise PolyParseError("expected a number or variable", at)

    def parse_term() -> GradedPoly:
        nonlocal i
        poly = parse_factor()
        while True:
            kind, value, _ = peek()
            if kind == "op" and value == "*":
                i += 1
                poly = poly * parse_factor()
            else:
                return poly

    result = GradedPoly.zero(table)
    sign = 1
    kind, value, _ = peek()
    if kind == "op" and value in "+-":
        sign = -1 if value == "-" else 1
        i += 1
    result = result + parse_term().scale(sign)
    while i < len(tokens):
        kind, value, at = peek()
        if kind != "op" or value not in "+-":
            raise PolyParseError("expected '+' or '-' between terms", at)
        sign = -1 if value == "-" else 1
        i += 1
        result = result + parse_term().scale(sign)
    return result
