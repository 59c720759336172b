"""Homomorphisms from finitely presented groups to Sym_nu that send generators to transpositions.

Permutations are tuples over {0, ..., nu-1}.  Words are sequences of signed
1-based generator indices, ``-k`` standing for the inverse of generator k.
A word is evaluated left to right: the first letter acts first.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

DEFAULT_NU_BOUND = 8
DEFAULT_SEARCH_BUDGET = 10 ** 10


@dataclass(frozen=True)
class Presentation:
    ngens: int
    relators: tuple

    def __init__(self, ngens: int, relators: Iterable[Sequence[int]] = ()):
        if ngens < 1:
            raise ValueError("a presentation needs at least one generator")
        rels = tuple(tuple(int(k) for k in r) for r in relators)
        for r in rels:
            for k in r:
                if k == 0 or abs(k) > ngens:
                    raise ValueError(f"generator index {k} out of range 1..{ngens}")
        object.__setattr__(self, "ngens", ngens)
        object.__setattr__(self, "relators", rels)


@dataclass(frozen=True)
class LocalCondition:
    """Images of two words must be non-commuting (cusp) or distinct commuting (node) transpositions."""

    kind: str
    pair: tuple

    def __init__(self, kind: str, pair: Sequence[Sequence[int]]):
        if kind not in ("cusp", "node"):
            raise ValueError(f"local condition kind must be 'cusp' or 'node', got {kind!r}")
        if len(pair) != 2:
            raise ValueError("a local condition relates exactly two words")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "pair", tuple(tuple(int(k) for k in w) for w in pair))

    def holds(self, images: Sequence[tuple]) -> bool:
        p, q = (evaluate_word(images, w) for w in self.pair)
        if not (is_transposition(p) and is_transposition(q)):
            return False
        commute = compose(p, q) == compose(q, p)
        if self.kind == "cusp":
            return not commute
        return p != q and commute


@dataclass(frozen=True)
class HomClass:
    """Canonical representative; ``images`` are 1-based transpositions, one per generator."""

    images: tuple
    nu: int

    def perms(self) -> list:
        return [transposition(self.nu, i - 1, j - 1) for i, j in self.images]

    def __str__(self):
        return " ".join(f"({i},{j})" for i, j in self.images)


# permutations


def identity(nu: int) -> tuple:
    return tuple(range(nu))


def compose(p: tuple, q: tuple) -> tuple:
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def transposition(nu: int, i: int, j: int) -> tuple:
    p = list(range(nu))
    p[i], p[j] = j, i
    return tuple(p)


def is_transposition(p: tuple) -> bool:
    return sum(1 for i, v in enumerate(p) if i != v) == 2


def moved_pair(p: tuple) -> tuple:
    i, j = (k for k, v in enumerate(p) if k != v)
    return (i, j)


def evaluate_word(images: Sequence[tuple], word: Sequence[int]) -> tuple:
    if not images:
        raise ValueError("no generator images given")
    nu = next(len(img) for img in images if img is not None)
    result = identity(nu)
    for k in word:
        if k == 0 or abs(k) > len(images):
            raise IndexError(f"generator index {k} out of range 1..{len(images)}")
        img = images[abs(k) - 1]
        result = compose(result, img if k > 0 else inverse(img))
    return result


def is_transitive(pairs: Iterable[tuple], nu: int) -> bool:
    parent = list(range(nu))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in pairs:
        parent[find(i)] = find(j)
    return len({find(i) for i in range(nu)}) == 1


def canonical_pairs(pairs: Sequence[tuple]) -> tuple:
    """Lexicographically least relabeling of a sequence of transpositions.

    Labels are handed out in order of first appearance: a point seen for the
    first time always gets the smallest unused label, and when both points
    of a pair are new the two possible orders are both explored.
    """
    best = None

    def walk(k, mapping, counter, acc):
        nonlocal best
        if best is not None and tuple(acc) > best[: len(acc)]:
            return
        if k == len(pairs):
            cand = tuple(acc)
            if best is None or cand < best:
                best = cand
            return
        i, j = pairs[k]
        known_i, known_j = i in mapping, j in mapping
        if known_i and known_j:
            options = [(mapping, counter)]
        elif known_i or known_j:
            fresh = j if known_i else i
            m = dict(mapping)
            m[fresh] = counter
            options = [(m, counter + 1)]
        else:
            m1 = dict(mapping)
            m1[i], m1[j] = counter, counter + 1
            m2 = dict(mapping)
            m2[i], m2[j] = counter + 1, counter
            options = [(m1, counter + 2), (m2, counter + 2)]
        for m, cnt in options:
            a, b = m[i], m[j]
            walk(k + 1, m, cnt, acc + [(min(a, b), max(a, b))])

    walk(0, {}, 0, [])
    return best


# search


def _generator_order(pres: Presentation) -> list:
    counts = [0] * pres.ngens
    for r in pres.relators:
        for k in r:
            counts[abs(k) - 1] += 1
    return sorted(range(pres.ngens), key=lambda g: (-counts[g], g))


def _relator_schedule(pres: Presentation, order: Sequence[int]) -> list:
    """For each search depth, the relators whose generators are all assigned by then."""
    position = {g: depth for depth, g in enumerate(order)}
    schedule = [[] for _ in order]
    for r in pres.relators:
        if not r:
            continue
        schedule[max(position[abs(k) - 1] for k in r)].append(r)
    return schedule


def _search(pres: Presentation, nu: int, first_choices: Sequence[int], locals_, require_transitive):
    trans = [transposition(nu, i, j) for i, j in _all_pairs(nu)]
    pair_of = _all_pairs(nu)
    order = _generator_order(pres)
    schedule = _relator_schedule(pres, order)
    ident = identity(nu)
    images = [None] * pres.ngens
    chosen = [None] * pres.ngens
    found = set()

    def rec(depth):
        if depth == len(order):
            if require_transitive and not is_transitive((pair_of[c] for c in chosen), nu):
                return
            if not all(lc.holds(images) for lc in locals_):
                return
            found.add(canonical_pairs([pair_of[c] for c in chosen]))
            return
        g = order[depth]
        choices = first_choices if depth == 0 else range(len(trans))
        for c in choices:
            images[g] = trans[c]
            chosen[g] = c
            if all(evaluate_word(images, r) == ident for r in schedule[depth]):
                rec(depth + 1)
        images[g] = None

    rec(0)
    return found


def _all_pairs(nu: int) -> list:
    return [(i, j) for i in range(nu) for j in range(i + 1, nu)]


def _search_chunk(args):
    return _search(*args)


def enumerate_transposition_homs(pres: Presentation, nu: int,
                                 locals_: Sequence[LocalCondition] = (),
                                 require_transitive: bool = True,
                                 bound: int = DEFAULT_NU_BOUND,
                                 workers: int = 1,
                                 budget: int = DEFAULT_SEARCH_BUDGET) -> list:
    """Conjugacy classes of transposition-valued homomorphisms, sorted by representative."""
    if nu < 2 or nu > bound:
        raise ValueError(f"nu={nu} out of bounds 2..{bound}")
    ntrans = nu * (nu - 1) // 2
    if pres.ngens * math.log(ntrans) > math.log(budget):
        raise ValueError(f"search space {ntrans}^{pres.ngens} exceeds the budget {budget}")
    for lc in locals_:
        for w in lc.pair:
            if any(k == 0 or abs(k) > pres.ngens for k in w):
                raise ValueError(f"local condition word {w} uses an unknown generator")
    locals_ = tuple(locals_)
    if workers > 1:
        chunks = [list(range(ntrans))[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_search_chunk, [(pres, nu, ch, locals_, require_transitive) for ch in chunks])
            found = set().union(*parts)
    else:
        found = _search(pres, nu, range(ntrans), locals_, require_transitive)
    return [HomClass(tuple((i + 1, j + 1) for i, j in rep), nu) for rep in sorted(found)]


def count_table(pres: Presentation, nus: Iterable[int], **kwargs) -> dict:
    return {nu: len(enumerate_transposition_homs(pres, nu, **kwargs)) for nu in nus}


def conjugate_class(images: Sequence[tuple], nu: int) -> tuple:
    """Canonical 1-based representative of an explicit list of 1-based transpositions."""
    rep = canonical_pairs([(min(i, j) - 1, max(i, j) - 1) for i, j in images])
    return tuple((i + 1, j + 1) for i, j in rep)
