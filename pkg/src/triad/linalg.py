"""Exact sparse row reduction over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

Vec = dict


class Echelon:
    """Incrementally maintained reduced row echelon basis.

    Each row is stored under its pivot, the largest key according to
    ``key``.  Rows are kept fully reduced, so reducing a vector is a single
    pass over its keys.  Optionally tracks how each row was combined from
    the inserted vectors, which gives coordinates for ``solve``.
    """

    def __init__(self, key: Callable[[Hashable], object] = lambda k: k, track: bool = False):
        self.key = key
        self.rows: dict[Hashable, Vec] = {}
        self.track = track
        self.combos: dict[Hashable, Vec] = {}
        self.count = 0

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping, combo: Vec | None = None) -> Vec:
        w = {k: Fraction(c) for k, c in v.items() if c}
        for p in [p for p in w if p in self.rows]:
            c = w.get(p)
            if not c:
                continue
            for k, r in self.rows[p].items():
                nv = w.get(k, 0) - c * r
                if nv:
                    w[k] = nv
                else:
                    w.pop(k, None)
            if combo is not None:
                for k, r in self.combos[p].items():
                    nv = combo.get(k, 0) - c * r
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
        return w

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    def add(self, v: Mapping, label: Hashable | None = None) -> bool:
        """Insert v; returns True when it enlarged the span."""
        if label is None:
            label = self.count
        self.count += 1
        combo = {label: Fraction(1)} if self.track else None
        w = self.reduce(v, combo)
        if not w:
            return False
        p = max(w, key=self.key)
        inv = 1 / w[p]
        w = {k: c * inv for k, c in w.items()}
        if combo is not None:
            combo = {k: c * inv for k, c in combo.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for k, r in w.items():
                    nv = row.get(k, 0) - c * r
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                if combo is not None:
                    cq = self.combos[q]
                    for k, r in combo.items():
                        nv = cq.get(k, 0) - c * r
                        if nv:
                            cq[k] = nv
                        else:
                            cq.pop(k, None)
        self.rows[p] = w
        if combo is not None:
            self.combos[p] = combo
        return True

    def solve(self, v: Mapping) -> Vec | None:
        """Coefficients on inserted labels reproducing v, or None if v is outside the span."""
        if not self.track:
            raise ValueError("solve needs track=True")
        combo: Vec = {}
        w = {k: Fraction(c) for k, c in v.items() if c}
        # v = sum_p v[p] * row_p once v is in the span, and row_p = sum combo_p
        residue = self.reduce(w)
        if residue:
            return None
        for p, c in w.items():
            if p in self.rows:
                for k, r in self.combos[p].items():
                    combo[k] = combo.get(k, 0) + c * r
        return {k: c for k, c in combo.items() if c}

    def pivots(self) -> list:
        return sorted(self.rows, key=self.key, reverse=True)

    def basis(self) -> list[Vec]:
        return [dict(self.rows[p]) for p in self.pivots()]


def span_equal(a: Iterable[Mapping], b: Iterable[Mapping]) -> bool:
    ea, eb = Echelon(), Echelon()
    for v in a:
        ea.add(v)
    for v in b:
        eb.add(v)
    return len(ea) == len(eb) and all(eb.contains(r) for r in ea.rows.values())


def rank(vectors: Iterable[Mapping]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def nullspace(equations: Iterable[Mapping], unknowns: Sequence[Hashable]) -> list[Vec]:
    """Basis of {c : sum_k eq[k] * c[k] = 0 for every equation}."""
    order = {u: i for i, u in enumerate(unknowns)}
    e = Echelon(key=lambda k: -order[k])
    for eq in equations:
        e.add(eq)
    free = [u for u in unknowns if u not in e.rows]
    out = []
    for f in free:
        vec = {f: Fraction(1)}
        for p, row in e.rows.items():
            c = row.get(f)
            if c:
                vec[p] = -c
        out.append(vec)
    return out
