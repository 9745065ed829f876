"""The Weyl group realized as permutations of the root list.

An element stores the image index of every root. Composition is "right
factor acts first", matching words read left to right: tau_1 tau_2 applied
to a root applies tau_2 first. The BFS generator records one reduced word
per element, so downstream enumerations are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import Root, RootSystem, reflect_root


class GroupLimitError(RuntimeError):
    """A closure would exceed its element budget."""


DEFAULT_GROUP_LIMIT = 100_000


@dataclass(frozen=True)
class GroupElement:
    perm: tuple[int, ...]
    system_label: str


def _check_same(a: GroupElement, b: GroupElement) -> None:
    if a.system_label != b.system_label or len(a.perm) != len(b.perm):
        raise ValueError("elements belong to different root systems")


def identity(system: RootSystem) -> GroupElement:
    return GroupElement(tuple(range(len(system.roots))), system.label)


def reflection_in(system: RootSystem, root: Root) -> GroupElement:
    """The permutation of the root list induced by the reflection in `root`."""
    images = tuple(
        system.root_index(reflect_root(system, root, r)) for r in system.roots
    )
    return GroupElement(images, system.label)


def simple_reflection(system: RootSystem, i: int) -> GroupElement:
    """tau_i for a 1-based generator index."""
    if not 1 <= i <= system.rank:
        raise IndexError(f"generator index {i} out of range 1..{system.rank}")
    return reflection_in(system, system.simple_roots()[i - 1])


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    """a after b: the word ab applies b first."""
    _check_same(a, b)
    ap = a.perm
    return GroupElement(tuple(ap[j] for j in b.perm), a.system_label)


def inverse(a: GroupElement) -> GroupElement:
    inv = [0] * len(a.perm)
    for i, j in enumerate(a.perm):
        inv[j] = i
    return GroupElement(tuple(inv), a.system_label)


def apply_to_root(system: RootSystem, w: GroupElement, r: Root) -> Root:
    if w.system_label != system.label:
        raise ValueError("element belongs to a different root system")
    return system.roots[w.perm[system.root_index(r)]]


def word_to_element(system: RootSystem, word) -> GroupElement:
    """Left-to-right product of simple reflections; the empty word is e."""
    gens = {}
    acc = identity(system)
    for i in word:
        g = gens.get(i)
        if g is None:
            g = gens[i] = simple_reflection(system, i)
        acc = compose(acc, g)
    return acc


@dataclass(frozen=True)
class GeneratedGroup:
    """All of W in BFS order (identity first) with one reduced word each."""

    system_label: str
    elements: tuple[GroupElement, ...]
    words: tuple[tuple[int, ...], ...]
    _pos: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> GroupElement:
        return self.elements[i]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> GroupElement:
        return self.elements[0]

    def position(self, w: GroupElement) -> int:
        return self._pos[w.perm]

    def word_of(self, w: GroupElement) -> tuple[int, ...]:
        return self.words[self._pos[w.perm]]


def generate_group(system: RootSystem, limit: int = DEFAULT_GROUP_LIMIT) -> GeneratedGroup:
    """Breadth-first closure of the simple reflections.

    BFS reaches every element by a shortest word, so the recorded word of w
    is reduced and its length equals length(w).
    """
    gens = [simple_reflection(system, i) for i in range(1, system.rank + 1)]
    e = identity(system)
    elements = [e]
    words: list[tuple[int, ...]] = [()]
    pos = {e.perm: 0}
    head = 0
    while head < len(elements):
        w = elements[head]
        word = words[head]
        head += 1
        for i, g in enumerate(gens, start=1):
            nxt = compose(w, g)
            if nxt.perm not in pos:
                if len(elements) >= limit:
                    raise GroupLimitError(
                        f"group of {system.label} exceeds the limit of {limit} elements"
                    )
                pos[nxt.perm] = len(elements)
                elements.append(nxt)
                words.append(word + (i,))
    return GeneratedGroup(
        system_label=system.label,
        elements=tuple(elements),
        words=tuple(words),
        _pos=pos,
    )


def subgroup_generated(
    system: RootSystem, gens, limit: int = DEFAULT_GROUP_LIMIT
) -> tuple[GroupElement, ...]:
    """Closure of the reflections in the given roots, in deterministic order."""
    refl = [reflection_in(system, g) for g in sorted(set(gens))]
    e = identity(system)
    elements = [e]
    seen = {e.perm}
    head = 0
    while head < len(elements):
        w = elements[head]
        head += 1
        for g in refl:
            nxt = compose(w, g)
            if nxt.perm not in seen:
                if len(elements) >= limit:
                    raise GroupLimitError(
                        f"subgroup closure exceeds the limit of {limit} elements"
                    )
                seen.add(nxt.perm)
                elements.append(nxt)
    return tuple(elements)


def element_to_json(group: GeneratedGroup, w: GroupElement) -> dict:
    """Wire form of an element: its recorded reduced word plus permutation."""
    return {"word": list(group.word_of(w)), "perm": list(w.perm)}


def length(system: RootSystem, w: GroupElement) -> int:
    """Number of positive roots sent to negative roots."""
    pc = system.positive_count
    return sum(1 for i in range(pc) if w.perm[i] >= pc)


def sign(system: RootSystem, w: GroupElement) -> int:
    return -1 if length(system, w) % 2 else 1
