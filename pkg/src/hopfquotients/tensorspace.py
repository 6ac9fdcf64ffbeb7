"""Weight blocks of tensor powers H^(x)n and the operators acting on them.

A block basis element is an n-tuple of Hopf basis elements whose
weights add up to a fixed weight vector.  Operators are formal integer
combinations of composable atoms:

    ('swap', i, j)   exchange slots i and j
    ('S', i)         antipode in slot i
    ('E',)           split slot 0, multiply one leg onto slot 1 from the left
    ('F',)           split slot 1, multiply one leg onto slot 0 from the right
    ('gamma',)       two-slot twist  a (x) b  ->  S(b_1) (x) a S(b_2)
    ('tau',)         two-slot swap
    ('delta',)       antipode in slot 0 only
    ('s',)           a (x) b -> S(b) (x) a

An operator word is a tuple of atoms, applied to a vector left to
right: the word (u, v) means "apply u, then v".  Passing
reverse=True composes the other way around; that reading exists only
so the conformance tests can show it is not the one matching the
published tables.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from .hopf import HopfAlgebra, add_into


@lru_cache(maxsize=None)
def tensor_basis(H: HopfAlgebra, n: int, weight: tuple) -> tuple:
    """All n-tuples of basis elements with total weight `weight`,
    sorted lexicographically."""
    weight = tuple(weight)
    if len(weight) != H.num_vars:
        raise ValueError("weight length must match num_vars")
    if n == 1:
        return tuple((e,) for e in H.elements_of_weight(weight))
    out = []
    for head_weight in iproduct(*(range(w + 1) for w in weight)):
        rest = tuple(w - h for w, h in zip(weight, head_weight))
        tails = tensor_basis(H, n - 1, rest)
        for e in H.elements_of_weight(head_weight):
            for tail in tails:
                out.append((e,) + tail)
    return tuple(sorted(out))


def block_index(basis) -> dict:
    return {t: i for i, t in enumerate(basis)}


def apply_atom(H: HopfAlgebra, atom: tuple, t: tuple) -> dict:
    """Apply one atom to a basis tuple; returns a vector over tuples."""
    kind = atom[0]
    if kind == "swap":
        _, i, j = atom
        lst = list(t)
        lst[i], lst[j] = lst[j], lst[i]
        return {tuple(lst): 1}
    if kind == "S":
        i = atom[1]
        sign, elem = H.antipode(t[i])
        lst = list(t)
        lst[i] = elem
        return {tuple(lst): sign}
    if kind == "E":
        a, b, c = t
        out: dict = {}
        for a1, a2, coeff in H.coproduct(a):
            add_into(out, (a1, H.product(a2, b), c), coeff)
        return out
    if kind == "F":
        a, b, c = t
        out = {}
        for b1, b2, coeff in H.coproduct(b):
            add_into(out, (H.product(a, b1), b2, c), coeff)
        return out
    if kind == "gamma":
        a, b = t
        out = {}
        for b1, b2, coeff in H.coproduct(b):
            s1, e1 = H.antipode(b1)
            s2, e2 = H.antipode(b2)
            add_into(out, (e1, H.product(a, e2)), coeff * s1 * s2)
        return out
    if kind == "tau":
        a, b = t
        return {(b, a): 1}
    if kind == "delta":
        a, b = t
        sign, elem = H.antipode(a)
        return {(elem, b): sign}
    if kind == "s":
        a, b = t
        sign, elem = H.antipode(b)
        return {(elem, a): sign}
    raise ValueError(f"unknown atom {atom!r}")


def apply_word(H: HopfAlgebra, word: tuple, t: tuple, reverse: bool = False) -> dict:
    current = {t: 1}
    atoms = reversed(word) if reverse else word
    for atom in atoms:
        nxt: dict = {}
        for tup, c in current.items():
            for tup2, c2 in apply_atom(H, atom, tup).items():
                add_into(nxt, tup2, c * c2)
        current = nxt
    return current


def apply_expr(H: HopfAlgebra, expr, t: tuple, reverse: bool = False) -> dict:
    """expr is a list of (coeff, word) pairs; returns expr applied to t."""
    out: dict = {}
    for coeff, word in expr:
        for tup, c in apply_word(H, word, t, reverse=reverse).items():
            add_into(out, tup, coeff * c)
    return out


def coproduct_into(H: HopfAlgebra, t: tuple, slot: int) -> dict:
    """Replace entry `slot` of an (n-1)-tuple by its coproduct,
    yielding a vector over n-tuples."""
    out: dict = {}
    head, tail = t[:slot], t[slot + 1 :]
    for y1, y2, coeff in H.coproduct(t[slot]):
        add_into(out, head + (y1, y2) + tail, coeff)
    return out


def counit_slot(H: HopfAlgebra, vec: dict, slot: int) -> dict:
    """Apply the counit in one slot of every tuple of a vector."""
    out: dict = {}
    for t, c in vec.items():
        eps = H.counit(t[slot])
        if eps:
            add_into(out, t[:slot] + t[slot + 1 :], c * eps)
    return out


def merge_slots(H: HopfAlgebra, vec: dict, slot: int) -> dict:
    """Multiply slot and slot+1 together in every tuple of a vector."""
    out: dict = {}
    for t, c in vec.items():
        merged = H.product(t[slot], t[slot + 1])
        add_into(out, t[:slot] + (merged,) + t[slot + 2 :], c)
    return out


def bar_relation_rows(H: HopfAlgebra, n: int, weight: tuple):
    """Rows spanning the conjugation defect inside the weight block.

    For the tensor algebra these are, for every generator v and every
    block tuple t one v short of the weight, the sum over slots of
    (v * t_i - t_i * v) placed in slot i.  The symmetric algebra is
    commutative, so there are none.
    """
    weight = tuple(weight)
    if H.kind == "sym":
        return []
    rows = []
    for v in range(H.num_vars):
        if weight[v] == 0:
            continue
        reduced = tuple(w - 1 if u == v else w for u, w in enumerate(weight))
        gen = H.generator(v)
        for t in tensor_basis(H, n, reduced):
            row: dict = {}
            for i, elem in enumerate(t):
                left = t[:i] + (H.product(gen, elem),) + t[i + 1 :]
                right = t[:i] + (H.product(elem, gen),) + t[i + 1 :]
                add_into(row, left, 1)
                add_into(row, right, -1)
            if row:
                rows.append(row)
    return rows
