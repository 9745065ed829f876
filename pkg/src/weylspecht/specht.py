"""Tabloids, polytabloids and the submodules they span inside the tabloid
module.

A tabloid is a left coset of the setwise stabilizer N(psi), keyed by the
image root set d(psi) itself; the stabilizer is exactly the subgroup fixing
that set, so the key is canonical. The module M^psi is the free module on
the tabloids; the kappa operator is the signed sum over the reflection group
of the column system, and a polytabloid is kappa applied to a tabloid.
Polytabloid coefficients are accumulated over the integers and only then
mapped into the working field, so prime-characteristic runs reuse the same
integer data.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    SparseVector,
    SubspaceBasis,
    form_complement,
    intersect,
    row_reduce,
    solve_coordinates,
)
from .rootsys import Root, RootSystem, format_root
from .subsystem import Subsystem, distinguished_reps, normalizer, normalizer_reps
from .weyl import (
    GeneratedGroup,
    GroupElement,
    apply_to_root,
    generate_group,
    inverse,
    sign,
    subgroup_generated,
)


@dataclass(frozen=True)
class Tabloid:
    """One coset d N(psi), keyed by the root set d(psi)."""

    key: frozenset
    rep: GroupElement
    rep_word: tuple[int, ...]
    rows: tuple[Root, ...]
    cols: tuple[Root, ...]


class TabloidSpace:
    """Indexed tabloid family for (system, psi) with optional column system.

    Tabloid order follows the coset representatives E_psi, which follow the
    BFS order of the group; the family therefore prints identically from run
    to run.
    """

    def __init__(
        self,
        system: RootSystem,
        psi: Subsystem,
        psi_prime: Subsystem | None,
        group: GeneratedGroup,
        n_psi: tuple[GroupElement, ...],
        n_j: tuple[GroupElement, ...],
        tabloids: tuple[Tabloid, ...],
        col_group: tuple[GroupElement, ...],
        col_signs: tuple[int, ...],
    ):
        self.system = system
        self.psi = psi
        self.psi_prime = psi_prime
        self.group = group
        self.n_psi = n_psi
        self.n_j = n_j
        self.tabloids = tabloids
        self.index = {t.key: i for i, t in enumerate(tabloids)}
        self.col_group = col_group
        self.col_signs = col_signs
        self._act_cache: dict = {}

    def __len__(self) -> int:
        return len(self.tabloids)

    def __iter__(self):
        return iter(self.tabloids)

    def __getitem__(self, i: int) -> Tabloid:
        return self.tabloids[i]

    def index_action(self, w: GroupElement) -> tuple[int, ...]:
        """The permutation of tabloid indices induced by w, cached per element."""
        perm = self._act_cache.get(w.perm)
        if perm is None:
            sys = self.system
            perm = tuple(
                self.index[frozenset(apply_to_root(sys, w, r) for r in t.key)]
                for t in self.tabloids
            )
            self._act_cache[w.perm] = perm
        return perm


def enumerate_tabloids(
    system: RootSystem,
    psi: Subsystem,
    group: GeneratedGroup,
    psi_prime: Subsystem | None = None,
) -> TabloidSpace:
    """One tabloid per coset of N(psi); count equals the index of N(psi)."""
    if psi.ambient_label != system.label or group.system_label != system.label:
        raise ValueError("subsystem and group must share the ambient system")
    pair = normalizer(system, psi, group)
    reps = normalizer_reps(system, psi, group, n_psi=pair.n_psi)
    tabloids = []
    for d in reps:
        key = frozenset(apply_to_root(system, d, r) for r in psi.roots)
        rows = tuple(apply_to_root(system, d, j) for j in psi.simples)
        cols = (
            tuple(apply_to_root(system, d, j) for j in psi_prime.simples)
            if psi_prime is not None
            else ()
        )
        tabloids.append(
            Tabloid(key=key, rep=d, rep_word=group.word_of(d), rows=rows, cols=cols)
        )
    if psi_prime is not None:
        col_group = subgroup_generated(system, psi_prime.simples)
        col_signs = tuple(sign(system, s) for s in col_group)
    else:
        col_group = (group.identity,)
        col_signs = (1,)
    return TabloidSpace(
        system=system,
        psi=psi,
        psi_prime=psi_prime,
        group=group,
        n_psi=pair.n_psi,
        n_j=pair.n_j,
        tabloids=tuple(tabloids),
        col_group=col_group,
        col_signs=col_signs,
    )


def act_tabloid(space: TabloidSpace, w: GroupElement, t: Tabloid) -> Tabloid:
    """The tabloid with key w(key); a well-defined action on the family."""
    i = space.index[t.key]
    return space.tabloids[space.index_action(w)[i]]


def act_vector(space: TabloidSpace, field, w: GroupElement, v: SparseVector) -> SparseVector:
    """Permute the coordinates of a module vector by the action of w."""
    if v.dim != len(space):
        raise ValueError("vector does not belong to this tabloid space")
    m = space.index_action(w)
    return SparseVector(v.dim, {m[i]: c for i, c in v.entries.items()})


def apply_kappa(space: TabloidSpace, field, v: SparseVector) -> SparseVector:
    """The signed sum over the column reflection group, applied to v."""
    if v.dim != len(space):
        raise ValueError("vector does not belong to this tabloid space")
    acc: dict = {}
    for sigma, sgn in zip(space.col_group, space.col_signs):
        m = space.index_action(sigma)
        for i, c in v.entries.items():
            j = m[i]
            cur = field.add(acc.get(j, field.zero), c if sgn > 0 else field.neg(c))
            if cur == field.zero:
                acc.pop(j, None)
            else:
                acc[j] = cur
    return SparseVector(v.dim, acc)


def polytabloid(space: TabloidSpace, field, w: GroupElement) -> SparseVector:
    """e_{wJ,wJ'}: the signed orbit sum of the base tabloid translated by w.

    Equals w applied to the polytabloid of the identity; coefficients are
    accumulated over Z before reduction into the field.
    """
    if space.psi_prime is None:
        raise ValueError("tabloid space was built without a column system")
    base = space.index[frozenset(space.psi.roots)]
    acc: dict[int, int] = {}
    w_action = space.index_action(w)
    for sigma, sgn in zip(space.col_group, space.col_signs):
        j = w_action[space.index_action(sigma)[base]]
        acc[j] = acc.get(j, 0) + sgn
    entries = {}
    for j, c in acc.items():
        fc = field.from_int(c)
        if fc != field.zero:
            entries[j] = fc
    return SparseVector(len(space), entries)


@dataclass
class SpechtModuleData:
    """The submodule spanned by all translated polytabloids, in echelon form."""

    space: TabloidSpace
    field: object
    generators: tuple
    basis: SubspaceBasis

    @property
    def dimension(self) -> int:
        return self.basis.rank

    @property
    def tabloid_count(self) -> int:
        return len(self.space)


def build_specht_module(
    system: RootSystem,
    psi: Subsystem,
    psi_prime: Subsystem,
    field,
    group: GeneratedGroup | None = None,
    check_full_span: bool = False,
) -> SpechtModuleData:
    """Span of the polytabloids over the distinguished representatives of
    the column system, which already generate the whole orbit span.

    Warns when the pair is not a useful sub-system; the computation still
    runs and may produce the zero module. `check_full_span` re-derives the
    basis from the full group orbit and raises on disagreement.
    """
    if group is None:
        group = generate_group(system)
    from .verify import is_useful_subsystem  # deferred: verify builds on this module

    if psi.roots & psi_prime.roots:
        useful = False
    else:
        useful = is_useful_subsystem(system, psi, psi_prime, group=group)
    if not useful:
        warnings.warn(
            f"{{J, J'}} is not a useful sub-system in {system.label}; "
            "the module may degenerate",
            stacklevel=2,
        )
    space = enumerate_tabloids(system, psi, group, psi_prime)
    dreps = distinguished_reps(system, psi_prime, group)
    generators = tuple((d, polytabloid(space, field, d)) for d in dreps)
    basis = row_reduce(field, [v for _, v in generators], dim=len(space))
    if check_full_span:
        full = row_reduce(
            field, [polytabloid(space, field, w) for w in group], dim=len(space)
        )
        if full != basis:
            raise RuntimeError("generator span differs from the full orbit span")
    return SpechtModuleData(space=space, field=field, generators=generators, basis=basis)


def bilinear_form(field, m1: SparseVector, m2: SparseVector):
    """Delta form on the tabloid basis, extended bilinearly."""
    if m1.dim != m2.dim:
        raise ValueError("vectors belong to different tabloid spaces")
    small, big = (m1, m2) if len(m1.entries) <= len(m2.entries) else (m2, m1)
    acc = field.zero
    for i, c in small.entries.items():
        d = big.entries.get(i)
        if d is not None:
            acc = field.add(acc, field.mul(c, d))
    return acc


def quotient_dimension(module: SpechtModuleData) -> tuple[int, int, int]:
    """(dim S, dim of S meet its form complement, dim of the quotient)."""
    perp = form_complement(module.basis)
    radical = intersect(module.basis, perp)
    dim_s = module.basis.rank
    return (dim_s, radical.rank, dim_s - radical.rank)


def matrix_of(module: SpechtModuleData, w: GroupElement, basis_vectors=None):
    """Matrix of w acting on the module; column j holds coordinates of w b_j.

    With no explicit basis the canonical echelon basis is used, where the
    coordinates of a member are simply its values at the pivot indices. An
    explicit basis must span exactly the module.
    """
    if module.dimension == 0:
        raise ValueError("the zero module affords no matrix representation")
    field = module.field
    space = module.space
    k = module.dimension
    cols = []
    if basis_vectors is None:
        pivots = module.basis.pivots
        for r in module.basis.rows:
            img = act_vector(space, field, w, r)
            cols.append([img.entries.get(p, field.zero) for p in pivots])
    else:
        bl = list(basis_vectors)
        if len(bl) != k:
            raise ValueError("basis size must equal the module dimension")
        if row_reduce(field, bl, dim=len(space)) != module.basis:
            raise ValueError("the given vectors do not form a basis of the module")
        for b in bl:
            img = act_vector(space, field, w, b)
            coords = solve_coordinates(field, bl, img)
            if coords is None:
                raise ValueError("action leaves the span of the given basis")
            cols.append(coords)
    return tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))


def character_value(module: SpechtModuleData, w: GroupElement):
    """Trace of the action of w; zero on the zero module."""
    field = module.field
    if module.dimension == 0:
        return field.zero
    space = module.space
    tr = field.zero
    for r, p in zip(module.basis.rows, module.basis.pivots):
        img = act_vector(space, field, w, r)
        tr = field.add(tr, img.entries.get(p, field.zero))
    return tr


def character_norm(module: SpechtModuleData) -> Fraction:
    """(1/|W|) sum of psi(w) psi(w^-1); equals 1 exactly for an irreducible
    rational character. Characteristic zero only."""
    if module.field.characteristic != 0:
        raise ValueError("character norm requires characteristic zero")
    group = module.space.group
    traces = {w.perm: character_value(module, w) for w in group}
    total = Fraction(0)
    for w in group:
        total += traces[w.perm] * traces[inverse(w).perm]
    return total / len(group)


def format_tabloid(space: TabloidSpace, t: Tabloid) -> str:
    """Brace display {dJ;dJ'} in the stored row and column orders."""
    sys = space.system
    rows = ",".join(format_root(sys, r) for r in t.rows)
    if t.cols:
        cols = ",".join(format_root(sys, r) for r in t.cols)
        return "{%s;%s}" % (rows, cols)
    return "{%s}" % rows


def format_module_vector(space: TabloidSpace, field, v: SparseVector) -> str:
    if not v.entries:
        return "0"
    minus_one = field.neg(field.one)
    parts = []
    for i in sorted(v.entries):
        c = v.entries[i]
        disp = format_tabloid(space, space.tabloids[i])
        if c == field.one:
            parts.append("+" + disp)
        elif c == minus_one:
            parts.append("-" + disp)
        else:
            parts.append(f"+({field.format(c)})*{disp}")
    return " ".join(parts)


def specht_report(
    module: SpechtModuleData,
    sample_words: tuple[tuple[int, ...], ...] = (),
) -> dict:
    """JSON-ready report for a built module."""
    from .exactlin import field_name

    space = module.space
    system = space.system
    dims = quotient_dimension(module)
    report = {
        "ambient": system.label,
        "psi": {
            "label": space.psi.label,
            "J": [format_root(system, r) for r in space.psi.simples],
        },
        "psi_prime": {
            "label": space.psi_prime.label if space.psi_prime else "0",
            "J'": [
                format_root(system, r)
                for r in (space.psi_prime.simples if space.psi_prime else ())
            ],
        },
        "field": field_name(module.field),
        "tabloid_count": len(space),
        "dim_S": dims[0],
        "dim_radical": dims[1],
        "dim_D": dims[2],
    }
    chars = []
    for word in sample_words:
        from .weyl import word_to_element

        w = word_to_element(system, word)
        chars.append(
            {"word": list(word), "trace": module.field.format(character_value(module, w))}
        )
    report["sample_characters"] = chars
    return report
