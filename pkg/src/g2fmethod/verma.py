"""Degree-truncated scalar generalized Verma module, by PBW straightening.

The parabolic is the one crossing out the first simple root of so(7); its
opposite nilradical is commutative with ordered basis

    y1 = g_-1,  y2 = g_-8,  y3 = g_-6,  y4 = g_-9,  y5 = g_-4,

so module vectors are polynomials in the y's applied to the highest weight
vector.  The inducing character takes the value  lam * (diagonal at the
first plus vector)  on Cartan elements and zero on the rest of the
parabolic; the parameter stays symbolic throughout, which lets one
straightening pass serve every specialization.

Straightening moves an algebra element right through the monomial factor by
factor:  X y m v = y (X m v) + [X, y] m v,  with the character applied when
the element reaches the highest weight vector and multiplication when the
element lies in the opposite nilradical.  Intermediate results are memoized
per (basis label, monomial).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .liealg import Element, Label, StructureTable, WeightVec, eps_weight
from .linsolve import kernel_basis
from .polynomials import Monomial, NVARS, format_terms, parse_terms, term_sort_key
from .scalars import LAMBDA, LambdaPoly

# coordinate order of the opposite nilradical (labels of y1..y5)
COORD_LABELS: Tuple[int, ...] = (-1, -8, -6, -9, -4)

_VERMA_NAMES = tuple(f"g_{l}" for l in COORD_LABELS) + ("v",)


class VermaVector:
    """Sparse combination of ordered monomials applied to the cyclic vector."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, LambdaPoly]] = None):
        clean: Dict[Monomial, LambdaPoly] = {}
        if terms:
            for m, c in terms.items():
                c = LambdaPoly.coerce(c)
                if not c.is_zero():
                    clean[tuple(m)] = c
        self.terms = clean

    @staticmethod
    def zero() -> "VermaVector":
        return VermaVector()

    @staticmethod
    def highest_weight() -> "VermaVector":
        return VermaVector({(0,) * NVARS: LambdaPoly.const(1)})

    @staticmethod
    def monomial(m: Monomial, c=1) -> "VermaVector":
        return VermaVector({tuple(m): LambdaPoly.coerce(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VermaVector):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "VermaVector") -> "VermaVector":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, LambdaPoly()) + c
        return VermaVector(out)

    def __neg__(self) -> "VermaVector":
        return VermaVector({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        return self + (-other)

    def scale(self, c) -> "VermaVector":
        c = LambdaPoly.coerce(c)
        return VermaVector({m: v * c for m, v in self.terms.items()})

    def shift(self, var_index: int) -> "VermaVector":
        """Multiply by the basis generator at coordinate position (0-based)."""
        out = {}
        for m, c in self.terms.items():
            mm = list(m)
            mm[var_index] += 1
            out[tuple(mm)] = c
        return VermaVector(out)

    def evaluate_lambda(self, x: Fraction) -> "VermaVector":
        return VermaVector({m: LambdaPoly.const(c(x)) for m, c in self.terms.items()})

    def degrees(self) -> set:
        return {sum(m) for m in self.terms}

    def sorted_terms(self):
        for m in sorted(self.terms, key=term_sort_key, reverse=True):
            yield m, self.terms[m]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return format_terms(
            ((m + (1,), c) for m, c in self.sorted_terms()), _VERMA_NAMES
        )

    def __repr__(self) -> str:
        return f"VermaVector({self})"


def parse_verma(s: str) -> VermaVector:
    """Inverse of ``str(VermaVector)``; every term must end in 'v'."""
    s = s.strip()
    if s == "0":
        return VermaVector.zero()
    out: Dict[Monomial, LambdaPoly] = {}
    for expo, coeff in parse_terms(s, _VERMA_NAMES):
        if expo[-1] != 1:
            raise ValueError("each term must carry the cyclic vector exactly once")
        m = tuple(expo[:-1])
        out[m] = out.get(m, LambdaPoly()) + coeff
    return VermaVector(out)


class VermaModule:
    """Scalar-type module over so(7) for the first-root parabolic."""

    def __init__(self, so7: StructureTable):
        if so7.name != "so7":
            raise ValueError("the module is specific to so(7)")
        self.so7 = so7
        self.coord_index: Dict[int, int] = {l: i for i, l in enumerate(COORD_LABELS)}
        self.nilradical_neg = set(COORD_LABELS)
        self._memo: Dict[Tuple[Label, Monomial], VermaVector] = {}
        self._char: Dict[Label, LambdaPoly] = {}
        for l in so7.labels:
            if isinstance(l, str):
                self._char[l] = LAMBDA * so7.matrices[l][0][0]
            elif l not in self.nilradical_neg:
                self._char[l] = LambdaPoly()

    # -- the action -------------------------------------------------------

    def act_basis(self, label: Label, m: Monomial) -> VermaVector:
        """Action of a basis element on a single ordered monomial."""
        key = (label, m)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if label in self.nilradical_neg:
            out = VermaVector.monomial(m).shift(self.coord_index[label])
        else:
            k = next((i for i, e in enumerate(m) if e > 0), None)
            if k is None:
                out = VermaVector({(0,) * NVARS: self._char[label]})
            else:
                rest = list(m)
                rest[k] -= 1
                rest_m = tuple(rest)
                out = self.act_basis(label, rest_m).shift(k)
                for l2, c2 in self.so7.brackets.get((label, COORD_LABELS[k]), {}).items():
                    out = out + self.act_basis(l2, rest_m).scale(c2)
        self._memo[key] = out
        return out

    def act(self, x: Element, v: VermaVector) -> VermaVector:
        """Exact module action of a so(7) element."""
        out = VermaVector.zero()
        for l, c in x.items():
            if c == 0:
                continue
            for m, coeff in v.terms.items():
                out = out + self.act_basis(l, m).scale(coeff * c)
        return out

    # -- weights -----------------------------------------------------------

    def weight_of(self, v: VermaVector) -> WeightVec:
        """Orthonormal-basis weight of a weight-homogeneous vector.

        Coordinates are parameter polynomials: the highest weight itself is
        lam * eps1.  Raises on inhomogeneous input.
        """
        if v.is_zero():
            raise ValueError("zero vector has no weight")
        weights = set()
        for m in v.terms:
            shift = [Fraction(0)] * 3
            for e, l in zip(m, COORD_LABELS):
                if e:
                    root = self.so7.roots[l]
                    shift = [s + e * c for s, c in zip(shift, root.coords)]
            weights.add(tuple(shift))
        if len(weights) > 1:
            raise ValueError("vector is not weight-homogeneous")
        shift = next(iter(weights))
        return eps_weight((LAMBDA + shift[0], LambdaPoly.const(shift[1]), LambdaPoly.const(shift[2])))

    # -- singular vector search ---------------------------------------------

    def monomials_of_degree(self, d: int) -> List[Monomial]:
        out: List[Monomial] = []

        def rec(prefix: List[int], left: int, pos: int):
            if pos == NVARS - 1:
                out.append(tuple(prefix + [left]))
                return
            for k in range(left + 1):
                rec(prefix + [k], left - k, pos + 1)

        rec([], d, 0)
        out.sort(key=term_sort_key, reverse=True)
        return out

    def singular_search(
        self,
        degree: int,
        lam0: Fraction,
        annihilators: Sequence[Element],
    ) -> List[VermaVector]:
        """Exact kernel of the stacked annihilator action in one degree.

        The degree space splits by Cartan weight; each block is solved
        separately and the kernels are concatenated, which keeps the
        elimination small.  The straightening is symbolic in the parameter
        and shared across calls; only the final matrices specialize.
        """
        monos = self.monomials_of_degree(degree)
        blocks: Dict[Tuple[int, int], List[Monomial]] = {}
        for m in monos:
            key = (m[0] - m[3], m[4] - m[1])
            blocks.setdefault(key, []).append(m)

        vectors: List[VermaVector] = []
        for key in sorted(blocks):
            block = blocks[key]
            rows: Dict[Tuple[int, Monomial], List[Fraction]] = {}
            for col, m in enumerate(block):
                for ai, ann in enumerate(annihilators):
                    image = VermaVector.zero()
                    for l, c in ann.items():
                        image = image + self.act_basis(l, m).scale(c)
                    for tm, coeff in image.terms.items():
                        val = coeff(lam0)
                        if val == 0:
                            continue
                        row = rows.setdefault(
                            (ai, tm), [Fraction(0)] * len(block)
                        )
                        row[col] += val
            matrix = [rows[k] for k in sorted(rows)]
            if not matrix:
                kernel = [
                    [Fraction(1) if i == j else Fraction(0) for j in range(len(block))]
                    for i in range(len(block))
                ]
            else:
                kernel = kernel_basis(matrix)
            for vec in kernel:
                vectors.append(
                    VermaVector(
                        {m: LambdaPoly.const(c) for m, c in zip(block, vec) if c != 0}
                    )
                )
        return vectors
