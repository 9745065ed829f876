import warnings

import pytest

from oracles import coefficient_law_violations, disjoint_pairs
from weylspecht import (
    build_specht_module,
    character_norm,
    closure_from_simples,
    is_good_subsystem,
    is_useful_subsystem,
    is_useful_system,
    polytabloid,
    submodule_theorem_probe,
    vanishing_obstruction,
)
from weylspecht.exactlin import QQ, PrimeField, SparseVector, contains, row_reduce
from weylspecht.rootsys import parse_root
from weylspecht.specht import act_vector, quotient_dimension
from weylspecht.weyl import compose, identity, sign, subgroup_generated, word_to_element


def roots_of(system, *texts):
    return [parse_root(system, t) for t in texts]


# --------------------------------------------------------------------------
# usefulness predicates


def test_useful_system_cases(case_a3, case_g2):
    assert is_useful_system(case_a3.system, case_a3.psi, case_a3.psi_prime)
    # the G2 pair is a useful system even though it fails the stronger predicate
    assert is_useful_system(case_g2.system, case_g2.psi, case_g2.psi_prime)


def test_useful_system_rejects_overlap(case_a3):
    with pytest.raises(ValueError):
        is_useful_system(case_a3.system, case_a3.psi, case_a3.psi)
    with pytest.raises(ValueError):
        is_useful_subsystem(case_a3.system, case_a3.psi, case_a3.psi)


def test_useful_subsystem_cases(case_a3, case_g2, case_d4_rank3):
    assert is_useful_subsystem(
        case_a3.system, case_a3.psi, case_a3.psi_prime, group=case_a3.group
    )
    assert not is_useful_subsystem(
        case_g2.system, case_g2.psi, case_g2.psi_prime, group=case_g2.group
    )
    assert is_useful_subsystem(
        case_d4_rank3.system,
        case_d4_rank3.psi,
        case_d4_rank3.psi_prime,
        group=case_d4_rank3.group,
    )


def test_g2_intersections(case_g2):
    system, group = case_g2.system, case_g2.group
    w_psi = {w.perm for w in subgroup_generated(system, case_g2.psi.simples)}
    w_pp = {w.perm for w in subgroup_generated(system, case_g2.psi_prime.simples)}
    assert w_psi & w_pp == {identity(system).perm}
    n_psi = {w.perm for w in case_g2.space.n_psi}
    assert len(n_psi & w_pp) > 1


# --------------------------------------------------------------------------
# the vanishing obstruction


def test_obstruction_found_in_g2(case_g2):
    system, group = case_g2.system, case_g2.group
    w = vanishing_obstruction(system, case_g2.psi, case_g2.psi_prime, group=group)
    assert w is not None
    assert w == word_to_element(system, (2, 1, 2, 1, 2))
    assert compose(w, w) == identity(system)
    assert sign(system, w) == -1
    assert polytabloid(case_g2.space, QQ, identity(system)).is_zero()


def test_no_obstruction_in_d4(case_d4_rank3):
    assert (
        vanishing_obstruction(
            case_d4_rank3.system,
            case_d4_rank3.psi,
            case_d4_rank3.psi_prime,
            group=case_d4_rank3.group,
        )
        is None
    )


def test_no_obstruction_with_empty_columns(a3, w_a3):
    psi = closure_from_simples(a3, roots_of(a3, "100", "001"))
    empty = closure_from_simples(a3, [])
    assert vanishing_obstruction(a3, psi, empty, group=w_a3) is None


# --------------------------------------------------------------------------
# goodness


def test_good_d4_pair(case_d4_rank3):
    res = is_good_subsystem(
        case_d4_rank3.system,
        case_d4_rank3.psi,
        case_d4_rank3.psi_prime,
        group=case_d4_rank3.group,
    )
    assert res.is_good and bool(res)
    assert res.witnesses == ()


def test_good_a3_pair_by_direct_scan(case_a3):
    # scan the expansion by hand: e = t0 - t2 and only t0, t2 avoid the columns
    space = case_a3.space
    e_vec = polytabloid(space, QQ, identity(case_a3.system))
    assert sorted(e_vec.entries) == [0, 2]
    disjoint = [
        i for i, t in enumerate(space) if not (t.key & case_a3.psi_prime.roots)
    ]
    assert disjoint == [0, 2]
    res = is_good_subsystem(
        case_a3.system, case_a3.psi, case_a3.psi_prime, group=case_a3.group
    )
    assert res.is_good


def test_not_useful_pairs_are_not_good(case_g2):
    res = is_good_subsystem(
        case_g2.system, case_g2.psi, case_g2.psi_prime, group=case_g2.group
    )
    assert not res.is_good
    assert res.reason == "not a useful sub-system"


def test_empty_columns_fail_goodness(a3, w_a3):
    psi = closure_from_simples(a3, roots_of(a3, "100", "001"))
    empty = closure_from_simples(a3, [])
    res = is_good_subsystem(a3, psi, empty, group=w_a3)
    assert not res.is_good
    assert len(res.witnesses) == 2  # every coset avoids the empty set; only t0 appears


# --------------------------------------------------------------------------
# the submodule dichotomy probe


def test_probe_on_the_module_generator(case_d4_rank3):
    report = submodule_theorem_probe(case_d4_rank3.module, trials=10, seed=7)
    assert report.ok
    assert report.trials == 10 and report.seed == 7


def test_probe_is_reproducible(case_d4_rank3):
    a = submodule_theorem_probe(case_d4_rank3.module, trials=5, seed=3)
    b = submodule_theorem_probe(case_d4_rank3.module, trials=5, seed=3)
    assert a == b


def test_self_generated_submodule_contains_module(case_d4_rank3):
    module = case_d4_rank3.module
    space = module.space
    e_vec = polytabloid(space, QQ, identity(case_d4_rank3.system))
    orbit = [act_vector(space, QQ, w, e_vec) for w in space.group]
    cyclic = row_reduce(QQ, orbit, dim=len(space))
    assert cyclic == module.basis


def test_zero_vector_lands_in_complement(case_d4_rank3):
    from weylspecht.exactlin import form_complement

    module = case_d4_rank3.module
    perp = form_complement(module.basis)
    assert contains(perp, SparseVector(len(module.space), {}))


# --------------------------------------------------------------------------
# structural consequences across the corpus


def test_good_pairs_afford_norm_one_characters(a3, w_a3, g2, w_g2):
    checked = 0
    for system, group in ((a3, w_a3), (g2, w_g2)):
        for psi, pp in disjoint_pairs(system, max_size=2):
            res = is_good_subsystem(system, psi, pp, group=group)
            if not res.is_good:
                continue
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                module = build_specht_module(system, psi, pp, QQ, group=group)
            if module.dimension:
                assert character_norm(module) == 1
                checked += 1
    assert checked > 0


def test_quotient_is_irreducible_or_zero(case_d4_rank3, d4, w_d4):
    # cyclic closure from every basis vector recovers the whole module,
    # modulo the radical, over Q and over F2
    fields = (QQ, PrimeField(2))
    psi, pp = case_d4_rank3.psi, case_d4_rank3.psi_prime
    for field in fields:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            module = build_specht_module(d4, psi, pp, field, group=w_d4)
        dims = quotient_dimension(module)
        if dims[2] == 0:
            continue
        from weylspecht.exactlin import form_complement, intersect

        radical = intersect(module.basis, form_complement(module.basis))
        space = module.space
        for row in module.basis.rows:
            if contains(radical, row):
                continue
            orbit = [act_vector(space, field, w, row) for w in space.group]
            closed = row_reduce(field, orbit + list(radical.rows), dim=len(space))
            for check in module.basis.rows:
                assert contains(closed, check)


def test_obstruction_forces_vanishing_over_corpus(a3, w_a3, g2, w_g2):
    from weylspecht.specht import enumerate_tabloids

    for system, group in ((a3, w_a3), (g2, w_g2)):
        for psi, pp in disjoint_pairs(system, max_size=2):
            w = vanishing_obstruction(system, psi, pp, group=group)
            if w is None:
                continue
            space = enumerate_tabloids(system, psi, group, pp)
            assert polytabloid(space, QQ, identity(system)).is_zero()


def test_coefficient_laws_on_showcase_pairs(case_a3, case_g2, case_d4_rank3):
    for case in (case_a3, case_g2, case_d4_rank3):
        assert (
            coefficient_law_violations(
                case.system, case.group, case.psi, case.psi_prime
            )
            == []
        )
