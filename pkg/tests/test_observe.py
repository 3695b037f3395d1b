import random

import pytest

from bcnkit.boolmat import BooleanMatrix
from bcnkit.compiler import AlgebraicForm, algebraic_form
from bcnkit.netlang import parse_network
from bcnkit.observe import (
    dense_verdict_row,
    distinguishing_witness,
    extended_system,
    observability_setup,
    observability_verdict,
    pair_index,
    pair_unindex,
    partition_pairs,
    render_report,
)
from bcnkit.oracle import random_model


class TestPairIndex:
    def test_known_values(self):
        assert pair_index(2, 4, 3) == 12
        assert pair_index(6, 8, 3) == 48
        assert pair_index(1, 1, 2) == 1

    def test_round_trip(self):
        for n in (1, 2, 3):
            for w in range(1, (1 << (2 * n)) + 1):
                assert pair_index(*pair_unindex(w, n), n) == w

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            pair_index(9, 1, 3)


class TestPartition:
    def test_lac_case1_theta(self, lac_case1_form):
        part = partition_pairs(lac_case1_form)
        assert part.theta_indices == (12, 14, 16, 30, 32, 48)
        assert part.theta == ((2, 4), (2, 6), (2, 8), (4, 6), (4, 8), (6, 8))

    def test_lac_case2_theta_and_xi(self, lac_case2_form):
        part = partition_pairs(lac_case2_form)
        assert part.theta_indices == (2, 20, 38, 56)
        upper_xi = sorted(
            w for w in part.xi if (lambda zx: zx[0] < zx[1])(pair_unindex(w, 3))
        )
        assert upper_xi == [3, 4, 5, 6, 7, 8, 11, 12, 13, 14, 15, 16,
                            21, 22, 23, 24, 29, 30, 31, 32, 39, 40, 47, 48]

    def test_injective_output(self):
        form = algebraic_form(
            parse_network("network a\nstates: x1\noutputs: y1\nx1' = x1\ny1 = x1\n")
        )
        part = partition_pairs(form)
        assert part.theta == ()
        assert part.xi == frozenset({2, 3})

    def test_partition_is_exhaustive_and_disjoint(self):
        rng = random.Random(411)
        for n in (1, 2, 3, 4):
            for _ in range(12):
                p = rng.randint(1, 2)
                model = random_model(rng, n, 0, p)
                part = partition_pairs(algebraic_form(model))
                total = 1 << (2 * n)
                d, th, xi = part.diagonal, part.theta_ordered, part.xi
                assert len(d) + len(th) + len(xi) == total
                assert not (d & th) and not (d & xi) and not (th & xi)
                assert d | th | xi == frozenset(range(1, total + 1))


class TestExtendedSystem:
    def test_lac_coordinatewise(self, lac_case1_form):
        ext = extended_system(lac_case1_form)
        # control 5 sends states (2, 4) to (1, 5)
        w = pair_index(2, 4, 3)
        assert ext.per_control[4][w - 1] == pair_index(1, 5, 3)

    def test_diagonal_invariance(self, lac_case1_form):
        ext = extended_system(lac_case1_form)
        part = partition_pairs(lac_case1_form)
        for mp in ext.per_control:
            for w in part.diagonal:
                assert mp[w - 1] in part.diagonal

    def test_small_autonomous(self):
        form = algebraic_form(parse_network("network a\nstates: x1\nx1' = !x1\n"))
        ext = extended_system(form)
        assert ext.per_control[0][pair_index(1, 2, 1) - 1] == pair_index(2, 1, 1)


class TestSetup:
    def test_case1_initial_family(self, lac_case1_form):
        part = partition_pairs(lac_case1_form)
        p0, pd = observability_setup(part)
        assert [s.members for s in p0.sets] == [(12,), (14,), (16,), (30,), (32,), (48,)]
        assert len(pd.sets) == 1 and pd.sets[0].members == tuple(sorted(part.xi))

    def test_case2_initial_family(self, lac_case2_form):
        p0, _ = observability_setup(partition_pairs(lac_case2_form))
        assert [s.members for s in p0.sets] == [(2,), (20,), (38,), (56,)]


class TestVerdict:
    def test_case1_observable(self, lac_case1_form):
        report = observability_verdict(lac_case1_form)
        assert report.observable
        assert report.flags == (True,) * 6

    def test_case2_not_observable(self, lac_case2_form):
        report = observability_verdict(lac_case2_form)
        assert not report.observable
        assert report.flags == (False, True, False, True)

    def test_injective_output_short_circuits(self):
        form = algebraic_form(
            parse_network("network a\nstates: x1\noutputs: y1\nx1' = x1\ny1 = x1\n")
        )
        report = observability_verdict(form)
        assert report.observable and report.theta == ()

    def test_rejects_outputless_model(self):
        form = algebraic_form(parse_network("network a\nstates: x1\nx1' = x1\n"))
        with pytest.raises(ValueError):
            observability_verdict(form)

    def test_bfs_matches_dense_engine(self, lac_case1_form, lac_case2_form):
        rng = random.Random(5150)
        forms = [lac_case1_form, lac_case2_form]
        for _ in range(15):
            forms.append(algebraic_form(random_model(rng, rng.randint(1, 3), rng.randint(0, 2), rng.randint(1, 2))))
        for form in forms:
            report = observability_verdict(form)
            if not report.theta:
                continue
            row = dense_verdict_row(form)
            assert tuple(row.get(1, k) == 1 for k in range(1, row.cols + 1)) == report.flags

    def test_orientation_symmetry(self):
        rng = random.Random(999)
        for _ in range(20):
            form = algebraic_form(random_model(rng, rng.randint(2, 3), rng.randint(0, 2), rng.randint(1, 2)))
            part = partition_pairs(form)
            for z, x in part.theta[:4]:
                a = distinguishing_witness(form, z, x)
                b = distinguishing_witness(form, x, z)
                assert (a is None) == (b is None)

    def test_diagonal_absorption_random_walks(self, lac_case1_form):
        rng = random.Random(31337)
        form = lac_case1_form
        ext = extended_system(form)
        part = partition_pairs(form)
        for _ in range(200):
            w = rng.choice(sorted(part.diagonal))
            for _ in range(10):
                w = ext.per_control[rng.randrange(len(ext.per_control))][w - 1]
                assert w in part.diagonal


class TestWitness:
    def test_case2_pair_3_4(self, lac_case2_form):
        wit = distinguishing_witness(lac_case2_form, 3, 4)
        assert wit == ((5,), 1)

    def test_case2_pair_1_2_has_none(self, lac_case2_form):
        assert distinguishing_witness(lac_case2_form, 1, 2) is None

    def test_pair_already_distinguished(self, lac_case2_form):
        assert distinguishing_witness(lac_case2_form, 1, 3) == ((), 0)

    def test_equal_states_rejected(self, lac_case2_form):
        with pytest.raises(ValueError):
            distinguishing_witness(lac_case2_form, 2, 2)

    def test_witness_replay_separates_outputs(self, lac_case2_form):
        # Replaying the witness on both trajectories: outputs agree before
        # time T and differ at T.
        form = lac_case2_form
        for z0, x0 in ((3, 4), (7, 8)):
            wit = distinguishing_witness(form, z0, x0)
            assert wit is not None
            controls, t = wit
            z, x = z0, x0
            for step, j in enumerate(controls):
                assert form.H.column(z) == form.H.column(x), f"outputs differ early at {step}"
                z, x = form.successor(j, z), form.successor(j, x)
            assert form.H.column(z) != form.H.column(x)
            assert t == len(controls)


class TestRendering:
    def test_report_text(self, lac_case2_form):
        report = observability_verdict(lac_case2_form, want_witnesses=True)
        text = render_report(report)
        assert "{1,2} -> indistinguishable" in text
        assert "{3,4} -> distinguishable [witness: u=(5),T=1]" in text
        assert text.rstrip().endswith("verdict: not observable")
