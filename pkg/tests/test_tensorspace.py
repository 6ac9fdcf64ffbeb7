from itertools import product as iproduct
from math import comb

import pytest

from hopfquotients.exactla import SparseMatrix, quotient_dim
from hopfquotients.hopf import SYM, TENSOR, HopfAlgebra
from hopfquotients.tensorspace import (
    apply_atom,
    apply_expr,
    apply_word,
    bar_relation_rows,
    block_index,
    coproduct_into,
    counit_slot,
    merge_slots,
    tensor_basis,
)

SYM2 = HopfAlgebra(SYM, 2)
TEN2 = HopfAlgebra(TENSOR, 2)
TEN3 = HopfAlgebra(TENSOR, 3)


def pair_blocks(H, total):
    """All two-slot weight blocks of a given total degree, as bases."""
    out = []
    for weight in iproduct(*(range(total + 1) for _ in range(H.num_vars))):
        if sum(weight) == total:
            out.append(tensor_basis(H, 2, weight))
    return out


def total_weight(H, t):
    w = [0] * H.num_vars
    for e in t:
        for i, v in enumerate(H.weight(e)):
            w[i] += v
    return tuple(w)


class TestTensorBasis:
    def test_sym_block_size_is_product_of_binomials(self):
        for n in (1, 2, 3):
            for weight in [(2, 1), (0, 3), (2, 2)]:
                want = 1
                for w in weight:
                    want *= comb(w + n - 1, n - 1)
                assert len(tensor_basis(SYM2, n, weight)) == want

    def test_tensor_block_brute_force(self):
        # distribute the multiset of letters over slots, then order
        # each slot independently
        basis = tensor_basis(TEN3, 3, (1, 1, 1))
        brute = set()
        for assign in iproduct(range(3), repeat=3):
            slots = [[], [], []]
            for letter, slot in enumerate(assign):
                slots[slot].append(letter)
            from itertools import permutations

            for p0 in permutations(slots[0]):
                for p1 in permutations(slots[1]):
                    for p2 in permutations(slots[2]):
                        brute.add((p0, p1, p2))
        assert set(basis) == brute
        assert len(basis) == 60

    def test_sorted_and_distinct(self):
        for H in (SYM2, TEN2):
            basis = tensor_basis(H, 3, (2, 1))
            assert list(basis) == sorted(set(basis))

    def test_weight_length_check(self):
        with pytest.raises(ValueError):
            tensor_basis(SYM2, 2, (1, 1, 1))

    def test_block_index_roundtrip(self):
        basis = tensor_basis(TEN2, 2, (2, 1))
        idx = block_index(basis)
        assert all(basis[i] == t for t, i in idx.items())


class TestExplicitActions:
    def test_split_left_on_square_monomial(self):
        t = ((2, 0), (0, 1), (0, 0))
        got = apply_atom(SYM2, ("E",), t)
        assert got == {
            ((0, 0), (2, 1), (0, 0)): 1,
            ((1, 0), (1, 1), (0, 0)): 2,
            ((2, 0), (0, 1), (0, 0)): 1,
        }

    def test_split_right_on_word(self):
        t = ((0,), (0, 1), ())
        got = apply_atom(TEN2, ("F",), t)
        assert got == {
            ((0,), (0, 1), ()): 1,
            ((0, 0), (1,), ()): 1,
            ((0, 1), (0,), ()): 1,
            ((0, 0, 1), (), ()): 1,
        }

    def test_twist_on_generators(self):
        # gamma(x (x) y) = -1 (x) xy - y (x) x
        got = apply_atom(SYM2, ("gamma",), ((1, 0), (0, 1)))
        assert got == {((0, 0), (1, 1)): -1, ((0, 1), (1, 0)): -1}

    def test_signed_swap_on_generators(self):
        got = apply_atom(SYM2, ("s",), ((1, 0), (0, 1)))
        assert got == {((0, 1), (1, 0)): -1}

    def test_unknown_atom(self):
        with pytest.raises(ValueError):
            apply_atom(SYM2, ("frobenius",), ((0, 0),))


class TestOperatorIdentities:
    def atoms_preserve_weight(self, H, basis, atoms):
        for t in basis:
            w = total_weight(H, t)
            for atom in atoms:
                for out, c in apply_atom(H, atom, t).items():
                    assert c != 0
                    assert total_weight(H, out) == w

    def test_weight_preservation_pairs(self):
        for H in (SYM2, TEN2):
            for basis in pair_blocks(H, 3):
                self.atoms_preserve_weight(
                    H, basis, [("gamma",), ("tau",), ("delta",), ("s",), ("S", 0), ("swap", 0, 1)]
                )

    def test_weight_preservation_triples(self):
        for H in (SYM2, TEN2):
            for t in tensor_basis(H, 3, (2, 1)):
                w = total_weight(H, t)
                for atom in [("E",), ("F",), ("swap", 0, 2), ("S", 1)]:
                    for out, _ in apply_atom(H, atom, t).items():
                        assert total_weight(H, out) == w

    def test_involutions(self):
        for H in (SYM2, TEN2):
            for basis in pair_blocks(H, 4):
                for t in basis:
                    for atom in [("tau",), ("delta",), ("S", 0), ("S", 1), ("swap", 0, 1)]:
                        assert apply_word(H, (atom, atom), t) == {t: 1}

    def test_signed_swap_squares_to_double_antipode(self):
        for H in (SYM2, TEN2):
            for basis in pair_blocks(H, 4):
                for t in basis:
                    twice = apply_word(H, (("s",), ("s",)), t)
                    assert twice == apply_word(H, (("S", 0), ("S", 1)), t)

    def test_swap_conjugates_antipode_slot(self):
        for t in tensor_basis(TEN2, 2, (2, 1)):
            lhs = apply_word(TEN2, (("swap", 0, 1), ("S", 0), ("swap", 0, 1)), t)
            rhs = apply_word(TEN2, (("S", 1),), t)
            assert lhs == rhs

    def test_braid_relation(self):
        word_a = (("swap", 0, 1), ("swap", 1, 2), ("swap", 0, 1))
        word_b = (("swap", 1, 2), ("swap", 0, 1), ("swap", 1, 2))
        for H in (SYM2, TEN2):
            for t in tensor_basis(H, 3, (2, 1)):
                assert apply_word(H, word_a, t) == apply_word(H, word_b, t)

    def test_twist_has_order_three(self):
        for H in (SYM2, TEN2):
            for total in range(1, 6):
                for basis in pair_blocks(H, total):
                    for t in basis:
                        assert apply_word(H, (("gamma",),) * 3, t) == {t: 1}

    def test_twist_differs_from_identity(self):
        t = ((1, 0), (0, 1))
        assert apply_word(SYM2, (("gamma",),), t) != {t: 1}


class TestSlotOperations:
    def test_split_then_counit_merges(self):
        for H in (SYM2, TEN2):
            for t in tensor_basis(H, 3, (2, 1)):
                merged = merge_slots(H, {t: 1}, 0)
                via_f = counit_slot(H, apply_atom(H, ("F",), t), 1)
                via_e = counit_slot(H, apply_atom(H, ("E",), t), 0)
                assert via_f == merged
                assert via_e == merged

    def test_coproduct_then_counit_is_identity(self):
        for H in (SYM2, TEN2):
            for t in tensor_basis(H, 2, (2, 2)):
                for slot in (0, 1):
                    spread = coproduct_into(H, t, slot)
                    assert counit_slot(H, spread, slot) == {t: 1}
                    assert counit_slot(H, spread, slot + 1) == {t: 1}

    def test_expr_linearity(self):
        t = ((1, 0), (1, 1))
        w1 = (("gamma",),)
        w2 = (("s",), ("tau",))
        expr = [(2, w1), (-1, w2)]
        got = apply_expr(SYM2, expr, t)
        a = apply_word(SYM2, w1, t)
        b = apply_word(SYM2, w2, t)
        want = {}
        for k, c in a.items():
            want[k] = want.get(k, 0) + 2 * c
        for k, c in b.items():
            want[k] = want.get(k, 0) - c
        want = {k: c for k, c in want.items() if c}
        assert got == want

    def test_word_reversal_changes_result(self):
        word = (("S", 0), ("swap", 0, 1))
        t = ((2, 0), (0, 1))
        forward = apply_word(SYM2, word, t)
        backward = apply_word(SYM2, word, t, reverse=True)
        assert forward == {((0, 1), (2, 0)): 1}
        assert backward == {((0, 1), (2, 0)): -1}
        assert forward != backward

    def test_empty_word_is_identity(self):
        t = ((1, 1), (0, 0))
        assert apply_word(SYM2, (), t) == {t: 1}


class TestBarRows:
    def test_sym_has_none(self):
        assert bar_relation_rows(SYM2, 2, (3, 1)) == []

    def test_rows_live_in_block_and_sum_to_zero(self):
        for weight in [(2, 1), (1, 1), (3, 0)]:
            basis = set(tensor_basis(TEN2, 2, weight))
            for row in bar_relation_rows(TEN2, 2, weight):
                assert set(row) <= basis
                assert sum(row.values()) == 0

    def necklace_count(self, weight):
        """Orbits of words under rotation, brute force."""
        words = [w for (w,) in tensor_basis(TEN2, 1, weight)]
        seen = set()
        classes = 0
        for w in words:
            if w in seen:
                continue
            classes += 1
            for k in range(len(w)):
                seen.add(w[k:] + w[:k])
        return classes

    def test_single_slot_quotient_counts_necklaces(self):
        # modding T(V) by all conjugation defects identifies each word
        # with its rotations
        for weight in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)]:
            basis = tensor_basis(TEN2, 1, weight)
            idx = block_index(basis)
            mat = SparseMatrix(len(basis))
            for row in bar_relation_rows(TEN2, 1, weight):
                mat.add_row({idx[t]: c for t, c in row.items()})
            assert quotient_dim(len(basis), mat) == self.necklace_count(weight)
