"""Matrix realization of the odd orthogonal algebras and abstract root data.

so(2n+1) is built on the defining space with basis e_1..e_n, e_0, e_-1..e_-n
and the symmetric form  B(e_i, e_-i) = 1, B(e_0, e_0) = 1.  Root vectors are
the classical elementary combinations

    g_{e_i - e_j}    = E[i,j]  - E[-j,-i]
    g_{+(e_i + e_j)} = E[i,-j] - E[j,-i]          (i < j)
    g_{-(e_i + e_j)} = E[-i,j] - E[-j,i]          (i < j)
    g_{+e_i}         = E[i,0]  - E[0,-i]
    g_{-e_i}         = E[-i,0] - E[0,i]

with E[a,b] the matrix unit.  Negative root vectors of sum type and of short
type carry an extra factor -2; this replaces the usual irrational
normalization of the short roots, keeps every structure constant rational,
and gives each pair [g_a, g_-a] a non-negative coroot.  All downstream
bracket data is computed from these matrices, never assumed.

Positive roots are labeled 1..n^2 in graded lexicographic order on their
simple-basis coordinates (lower total degree first, then lexicographically
larger first), negatives by the opposite sign, and the Cartan basis by
h1..hn with  h_i = [g_i, g_-i]  for the long simple roots and
h_n = 1/2 [g_n, g_-n]  for the short one.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .linsolve import SpanBuilder
from .scalars import LambdaPoly, rational_from_string, rational_to_string

Label = Union[int, str]
Element = Dict[Label, Fraction]
Matrix = Tuple[Tuple[Fraction, ...], ...]

# ---------------------------------------------------------------------------
# small exact-matrix helpers
# ---------------------------------------------------------------------------


def mat_zero(size: int) -> List[List[Fraction]]:
    return [[Fraction(0)] * size for _ in range(size)]


def mat_freeze(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(tuple(row) for row in m)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c: Fraction) -> Matrix:
    return tuple(tuple(x * c for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    ab = mat_mul(a, b)
    ba = mat_mul(b, a)
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(ab, ba))


def mat_flatten(a: Matrix) -> List[Fraction]:
    return [x for row in a for x in row]


def mat_is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

_FORMS = {
    # orthonormal basis of the so(2n+1) weight space
    "eps": None,
    # the G2 simple-root basis, Gram matrix of the invariant form
    "alpha": ((Fraction(2), Fraction(-3)), (Fraction(-3), Fraction(6))),
}


@dataclass(frozen=True)
class WeightVec:
    """Weight in a declared basis; coordinates exact (rational or symbolic)."""

    coords: tuple
    basis: str = "eps"

    def __post_init__(self):
        if self.basis not in _FORMS:
            raise ValueError(f"unknown weight basis {self.basis!r}")
        object.__setattr__(self, "coords", tuple(self.coords))

    def __add__(self, other: "WeightVec") -> "WeightVec":
        self._check(other)
        return WeightVec(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        self._check(other)
        return WeightVec(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "WeightVec":
        return WeightVec(tuple(-a for a in self.coords), self.basis)

    def scale(self, c) -> "WeightVec":
        return WeightVec(tuple(a * c for a in self.coords), self.basis)

    def is_zero(self) -> bool:
        return all(not c if isinstance(c, LambdaPoly) else c == 0 for c in self.coords)

    def pair(self, other: "WeightVec"):
        """Invariant symmetric form in this basis."""
        self._check(other)
        form = _FORMS[self.basis]
        total = None
        if form is None:
            for a, b in zip(self.coords, other.coords):
                term = a * b
                total = term if total is None else total + term
        else:
            for i, a in enumerate(self.coords):
                for j, b in enumerate(other.coords):
                    if form[i][j] == 0:
                        continue
                    term = a * form[i][j] * b
                    total = term if total is None else total + term
        return Fraction(0) if total is None else total

    def _check(self, other: "WeightVec"):
        if self.basis != other.basis or len(self.coords) != len(other.coords):
            raise ValueError("weight basis mismatch")

    def __str__(self) -> str:
        names = {"eps": "eps", "alpha": "alpha"}[self.basis]
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if isinstance(c, LambdaPoly):
                if c.is_zero():
                    continue
                if c.is_constant():
                    c = c.constant_value()
                else:
                    parts.append((f"({c})*{names}{i}", "+"))
                    continue
            if c == 0:
                continue
            mag = abs(c)
            body = f"{names}{i}" if mag == 1 else f"{mag}*{names}{i}"
            parts.append((body, "-" if c < 0 else "+"))
        if not parts:
            return "0"
        out = []
        for k, (body, sign) in enumerate(parts):
            if k == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)


def reflect(w: WeightVec, root: WeightVec) -> WeightVec:
    """Orthogonal reflection of ``w`` in the hyperplane normal to ``root``."""
    if root.is_zero():
        raise ValueError("zero root rejected")
    norm = root.pair(root)
    factor = w.pair(root) * (Fraction(2) / norm)
    return w - root.scale(factor)


def eps_weight(coords: Sequence) -> WeightVec:
    return WeightVec(tuple(coords), "eps")


def alpha_weight(coords: Sequence) -> WeightVec:
    return WeightVec(tuple(coords), "alpha")


def eps_from_eta(coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Simple-basis coordinates of so(2n+1) to orthonormal coordinates."""
    n = len(coords)
    out = [Fraction(0)] * n
    for i, c in enumerate(coords):
        # eta_i = eps_i - eps_{i+1} for i < n-1 index, eta_n = eps_n
        out[i] += c
        if i + 1 < n:
            out[i + 1] -= c
    return tuple(out)


def eta_from_eps(coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    n = len(coords)
    out = []
    acc = Fraction(0)
    for i in range(n):
        acc += coords[i]
        out.append(acc)
    return tuple(out)


# fundamental-weight helpers for the pair of algebras in play
def so7_omega(i: int) -> WeightVec:
    table = {
        1: (1, 0, 0),
        2: (1, 1, 0),
        3: (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
    }
    return eps_weight([Fraction(x) for x in table[i]])


def g2_psi(i: int) -> WeightVec:
    table = {1: (2, 1), 2: (3, 2)}
    return alpha_weight([Fraction(x) for x in table[i]])


def alpha_to_psi(w: WeightVec) -> Tuple:
    """Fundamental-weight coordinates of an alpha-basis weight.

    psi1 = (2,1) and psi2 = (3,2) in alpha coordinates; the change of basis
    [2 3; 1 2] is unimodular, so the inverse is exact: (x, y) solves
    x*psi1 + y*psi2 = w.
    """
    a1, a2 = w.coords
    return (2 * a1 - 3 * a2, -a1 + 2 * a2)


# ---------------------------------------------------------------------------
# structure tables
# ---------------------------------------------------------------------------


@dataclass
class StructureTable:
    """Basis-labeled Lie algebra with exact bracket constants.

    ``labels`` fixes the canonical basis order.  ``brackets`` maps ordered
    label pairs to sparse element dicts; it is complete (both orders stored).
    Root labels are signed integers; Cartan labels are 'h1', 'h2', ...
    """

    name: str
    labels: List[Label]
    roots: Dict[Label, WeightVec]
    simple_coords: Dict[Label, Tuple[int, ...]]
    cartan_labels: List[str]
    matrices: Dict[Label, Matrix]
    brackets: Dict[Tuple[Label, Label], Element]

    # -- elements ----------------------------------------------------------

    def bracket(self, a: Element, b: Element) -> Element:
        out: Element = {}
        for la, ca in a.items():
            for lb, cb in b.items():
                for lc, cc in self.brackets.get((la, lb), {}).items():
                    out[lc] = out.get(lc, Fraction(0)) + ca * cb * cc
        return {k: v for k, v in out.items() if v != 0}

    def matrix_of(self, x: Element) -> Matrix:
        size = len(next(iter(self.matrices.values())))
        acc = mat_freeze(mat_zero(size))
        for l, c in x.items():
            acc = mat_add(acc, mat_scale(self.matrices[l], c))
        return acc

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def positive_root_labels(self) -> List[int]:
        return sorted(l for l in self.labels if isinstance(l, int) and l > 0)

    def cartan_value(self, h_label: str, weight: WeightVec):
        """Value of a weight on a Cartan basis element.

        Read off the diagonal of the Cartan matrix: the orthonormal weight
        coordinate i pairs with the diagonal entry at the i-th plus vector.
        """
        m = self.matrices[h_label]
        total = None
        for i, c in enumerate(weight.coords):
            term = c * m[i][i]
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    # -- verification -------------------------------------------------------

    def jacobi_check(self) -> bool:
        """Exhaustive Jacobi identity over all basis triples."""
        basis = [{l: Fraction(1)} for l in self.labels]
        table = {l: e for l, e in zip(self.labels, basis)}
        for x in self.labels:
            for y in self.labels:
                xy = self.brackets.get((x, y), {})
                for z in self.labels:
                    yz = self.brackets.get((y, z), {})
                    xz = self.brackets.get((x, z), {})
                    lhs = self.bracket(table[x], yz)
                    rhs1 = self.bracket(xy, table[z])
                    rhs2 = self.bracket(table[y], xz)
                    total = dict(lhs)
                    for l, c in rhs1.items():
                        total[l] = total.get(l, Fraction(0)) - c
                    for l, c in rhs2.items():
                        total[l] = total.get(l, Fraction(0)) - c
                    if any(v != 0 for v in total.values()):
                        return False
        return True

    def antisymmetry_check(self) -> bool:
        for (a, b), val in self.brackets.items():
            neg = self.brackets.get((b, a), {})
            keys = set(val) | set(neg)
            for k in keys:
                if val.get(k, Fraction(0)) + neg.get(k, Fraction(0)) != 0:
                    return False
        return True

    def eigenvector_check(self) -> bool:
        """Every root vector is an ad-eigenvector of every Cartan element."""
        for h in self.cartan_labels:
            for l in self.labels:
                if not isinstance(l, int):
                    continue
                br = self.brackets.get((h, l), {})
                expected = self.cartan_value(h, self.roots[l])
                if set(br) - {l}:
                    return False
                if br.get(l, Fraction(0)) != expected:
                    return False
        return True

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        def lbl(x: Label) -> str:
            return str(x)

        return {
            "algebra": self.name,
            "dimension": self.dimension,
            "basis": [
                {
                    "label": lbl(l),
                    "root": [rational_to_string(Fraction(c)) for c in self.roots[l].coords]
                    if l in self.roots
                    else None,
                }
                for l in self.labels
            ],
            "brackets": [
                {
                    "x": lbl(a),
                    "y": lbl(b),
                    "value": {lbl(k): rational_to_string(v) for k, v in sorted(val.items(), key=lambda kv: str(kv[0]))},
                }
                for (a, b), val in sorted(self.brackets.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1])))
                if val and _label_key(a) <= _label_key(b)
            ],
        }

    def checksum(self) -> str:
        payload = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _label_key(l: Label):
    return (0, l, "") if isinstance(l, int) else (1, 0, l)


def parse_label(s: str) -> Label:
    s = s.strip()
    if s.startswith("h"):
        return s
    return int(s)


def structure_table_from_json(doc: dict) -> StructureTable:
    """Rebuild the bracket data of an exported table (matrices not stored)."""
    labels = [parse_label(b["label"]) for b in doc["basis"]]
    roots = {}
    for b in doc["basis"]:
        if b["root"] is not None:
            l = parse_label(b["label"])
            basis = "alpha" if doc["algebra"] == "g2" else "eps"
            roots[l] = WeightVec(tuple(rational_from_string(c) for c in b["root"]), basis)
    brackets: Dict[Tuple[Label, Label], Element] = {}
    for item in doc["brackets"]:
        a, b = parse_label(item["x"]), parse_label(item["y"])
        val = {parse_label(k): rational_from_string(v) for k, v in item["value"].items()}
        brackets[(a, b)] = val
        brackets[(b, a)] = {k: -v for k, v in val.items()}
    table = StructureTable(
        name=doc["algebra"],
        labels=labels,
        roots=roots,
        simple_coords={},
        cartan_labels=[l for l in labels if isinstance(l, str)],
        matrices={},
        brackets=brackets,
    )
    return table


# ---------------------------------------------------------------------------
# so(2n+1)
# ---------------------------------------------------------------------------


def _positive_roots_so_odd(n: int) -> List[Tuple[Tuple[int, ...], Tuple[Fraction, ...]]]:
    """(simple coords, eps coords) of the positive roots, in label order."""
    roots = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            eps = [Fraction(0)] * n
            eps[i - 1], eps[j - 1] = Fraction(1), Fraction(-1)
            simple = [0] * n
            for k in range(i, j):
                simple[k - 1] = 1
            roots.append((tuple(simple), tuple(eps)))
            eps2 = [Fraction(0)] * n
            eps2[i - 1], eps2[j - 1] = Fraction(1), Fraction(1)
            simple2 = [0] * n
            for k in range(i, j):
                simple2[k - 1] = 1
            for k in range(j, n + 1):
                simple2[k - 1] = 2
            roots.append((tuple(simple2), tuple(eps2)))
        eps3 = [Fraction(0)] * n
        eps3[i - 1] = Fraction(1)
        simple3 = [0] * n
        for k in range(i, n + 1):
            simple3[k - 1] = 1
        roots.append((tuple(simple3), tuple(eps3)))
    roots.sort(key=lambda rc: (sum(rc[0]), tuple(-c for c in rc[0])))
    return roots


def _unit_root_matrix(n: int, eps: Tuple[Fraction, ...]) -> Matrix:
    """The coefficient-1 matrix of a root vector from the classical formulas."""
    size = 2 * n + 1

    def pos(k: int) -> int:
        # e_1..e_n -> 0..n-1, e_0 -> n, e_-1..e_-n -> n+1..2n
        if k > 0:
            return k - 1
        if k == 0:
            return n
        return n - k

    m = mat_zero(size)
    support = [(i + 1, c) for i, c in enumerate(eps) if c != 0]
    if len(support) == 2:
        (i, ci), (j, cj) = support
        if ci == 1 and cj == -1:
            m[pos(i)][pos(j)] = Fraction(1)
            m[pos(-j)][pos(-i)] = Fraction(-1)
        elif ci == -1 and cj == 1:
            m[pos(j)][pos(i)] = Fraction(1)
            m[pos(-i)][pos(-j)] = Fraction(-1)
        elif ci == 1 and cj == 1:
            m[pos(i)][pos(-j)] = Fraction(1)
            m[pos(j)][pos(-i)] = Fraction(-1)
        elif ci == -1 and cj == -1:
            m[pos(-i)][pos(j)] = Fraction(1)
            m[pos(-j)][pos(i)] = Fraction(-1)
        else:
            raise ValueError(f"not a root: {eps}")
    elif len(support) == 1:
        (i, ci) = support[0]
        if ci == 1:
            m[pos(i)][pos(0)] = Fraction(1)
            m[pos(0)][pos(-i)] = Fraction(-1)
        else:
            m[pos(-i)][pos(0)] = Fraction(1)
            m[pos(0)][pos(i)] = Fraction(-1)
    else:
        raise ValueError(f"not a root: {eps}")
    return mat_freeze(m)


def _is_sum_or_short(eps: Tuple[Fraction, ...]) -> bool:
    support = [c for c in eps if c != 0]
    return len(support) == 1 or (len(support) == 2 and support[0] == support[1])


def build_so_odd(n: int) -> StructureTable:
    """so(2n+1) in the labeled basis, brackets from matrix commutators."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    positives = _positive_roots_so_odd(n)
    nroots = len(positives)
    assert nroots == n * n

    labels: List[Label] = list(range(-nroots, 0)) + [f"h{i}" for i in range(1, n + 1)] + list(
        range(1, nroots + 1)
    )
    roots: Dict[Label, WeightVec] = {}
    simple_coords: Dict[Label, Tuple[int, ...]] = {}
    matrices: Dict[Label, Matrix] = {}

    for idx, (simple, eps) in enumerate(positives, start=1):
        roots[idx] = eps_weight(eps)
        simple_coords[idx] = simple
        matrices[idx] = _unit_root_matrix(n, eps)
        neg = tuple(-c for c in eps)
        roots[-idx] = eps_weight(neg)
        simple_coords[-idx] = tuple(-c for c in simple)
        unit = _unit_root_matrix(n, neg)
        # rationalized normalization: -2 on negative sum-type and short roots
        matrices[-idx] = mat_scale(unit, Fraction(-2)) if _is_sum_or_short(eps) else unit

    # Cartan from the bracket prescriptions on the simple pairs; the n-th
    # simple root is the short one and its bracket is halved.
    for i in range(1, n + 1):
        matrices[f"h{i}"] = mat_commutator(matrices[i], matrices[-i])
    matrices[f"h{n}"] = mat_scale(matrices[f"h{n}"], Fraction(1, 2))

    table = StructureTable(
        name=f"so{2 * n + 1}",
        labels=labels,
        roots=roots,
        simple_coords=simple_coords,
        cartan_labels=[f"h{i}" for i in range(1, n + 1)],
        matrices=matrices,
        brackets={},
    )
    _fill_brackets(table)
    return table


def _fill_brackets(table: StructureTable) -> None:
    """Compute the complete bracket table by expressing commutators."""
    order = list(table.labels)
    flat = {l: mat_flatten(table.matrices[l]) for l in order}
    span = SpanBuilder(len(next(iter(flat.values()))))
    for l in order:
        if not span.add(flat[l]):
            raise ValueError(f"basis element {l} is dependent")
    solver = CoordinateSolver([flat[l] for l in order])

    def express(vec: List[Fraction]) -> Element:
        coeffs = solver.solve(vec)
        if coeffs is None:
            raise ValueError("bracket left the algebra span")
        return {order[i]: c for i, c in enumerate(coeffs) if c != 0}

    for a in order:
        for b in order:
            if (a, b) in table.brackets:
                continue
            m = mat_commutator(table.matrices[a], table.matrices[b])
            if mat_is_zero(m):
                table.brackets[(a, b)] = {}
                table.brackets[(b, a)] = {}
                continue
            val = express(mat_flatten(m))
            table.brackets[(a, b)] = val
            table.brackets[(b, a)] = {k: -v for k, v in val.items()}


class CoordinateSolver:
    """Express vectors over a fixed independent row set, elimination done once."""

    def __init__(self, basis_rows: List[List[Fraction]]):
        width = len(basis_rows[0])
        nbasis = len(basis_rows)
        rows = [
            list(r) + [Fraction(1) if j == i else Fraction(0) for j in range(nbasis)]
            for i, r in enumerate(basis_rows)
        ]
        pivots: List[int] = []
        r = 0
        for c in range(width):
            piv = None
            for i in range(r, len(rows)):
                if rows[i][c] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            pv = rows[r][c]
            rows[r] = [x / pv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        if r < nbasis:
            raise ValueError("rows are dependent")
        self.rows = rows
        self.pivots = pivots
        self.width = width
        self.nbasis = nbasis

    def solve(self, vec: List[Fraction]) -> Optional[List[Fraction]]:
        v = list(vec)
        coeffs = [Fraction(0)] * self.nbasis
        for r, pc in enumerate(self.pivots):
            if v[pc] != 0:
                f = v[pc]
                row = self.rows[r]
                for j in range(self.width):
                    if row[j] != 0:
                        v[j] -= f * row[j]
                for j in range(self.nbasis):
                    if row[self.width + j] != 0:
                        coeffs[j] += f * row[self.width + j]
        if any(x != 0 for x in v):
            return None
        return coeffs


# ---------------------------------------------------------------------------
# abstract G2 root datum
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootSystemData:
    """Labeled root list plus the invariant form in the simple basis."""

    name: str
    positive: Tuple[Tuple[int, ...], ...]
    form: Tuple[Tuple[Fraction, ...], ...]

    @property
    def labels(self) -> List[int]:
        n = len(self.positive)
        return list(range(-n, 0)) + list(range(1, n + 1))

    def root(self, label: int) -> WeightVec:
        coords = self.positive[abs(label) - 1]
        sign = 1 if label > 0 else -1
        return alpha_weight(tuple(Fraction(sign * c) for c in coords))

    @property
    def root_count(self) -> int:
        return 2 * len(self.positive)

    def highest(self) -> WeightVec:
        return self.root(len(self.positive))


def build_g2_root_data() -> RootSystemData:
    """The 12-root exceptional datum with its rank-2 invariant form."""
    positive = [(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)]
    positive.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
    return RootSystemData(
        name="g2",
        positive=tuple(positive),
        form=((Fraction(2), Fraction(-3)), (Fraction(-3), Fraction(6))),
    )


# ---------------------------------------------------------------------------
# positive combinations
# ---------------------------------------------------------------------------


def positive_combination(
    w: WeightVec, roots: Sequence[Tuple[int, Tuple[int, ...]]]
) -> Optional[Dict[int, int]]:
    """Non-negative integer combination of positive roots summing to ``w``.

    ``roots`` is a list of (label, simple coordinates).  The witness returned
    is the lexicographically smallest coefficient vector in label order, or
    None when no combination exists.  ``w`` must be given in the matching
    simple basis ('alpha' weights are already simple coordinates; orthonormal
    weights are converted by the caller).
    """
    target = []
    for c in w.coords:
        if isinstance(c, LambdaPoly):
            c = c.constant_value()
        if c.denominator != 1:
            return None
        target.append(int(c))
    items = sorted(roots, key=lambda t: t[0])

    def dfs(pos: int, remaining: Tuple[int, ...]) -> Optional[Dict[int, int]]:
        if all(x == 0 for x in remaining):
            return {}
        if pos == len(items):
            return None
        label, coords = items[pos]
        bound = min(
            (rem // c for rem, c in zip(remaining, coords) if c > 0), default=None
        )
        if bound is None:
            bound = 0
        for k in range(0, bound + 1):
            nxt = tuple(r - k * c for r, c in zip(remaining, coords))
            if any(x < 0 for x in nxt):
                break
            sub = dfs(pos + 1, nxt)
            if sub is not None:
                if k:
                    sub = {label: k, **sub}
                return sub
        return None

    if any(x < 0 for x in target):
        # a negative coordinate in the simple basis rules out a combination
        return None
    return dfs(0, tuple(target))
