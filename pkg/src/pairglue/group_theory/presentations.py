"""Finite presentations read off paired complexes, and Tietze tooling.

Two independent routes produce a presentation of the fundamental group of a
glued complex:

* :func:`presentation_from_pairings` -- one generator per pairing, one relator
  per edge-class cycle word (the dual picture: loops through face pairs).
* :func:`presentation_from_cw` -- one generator per edge class, one relator per
  face pair reading the boundary word of the source face, plus one single-
  letter relator per edge of a spanning tree of the glued 1-skeleton.

Keeping both routes intact is the point: they must agree on every invariant
computed downstream, and the tests hold them against each other.
"""

from ..complex_core import _orbit_data, natural_key
from ..errors import DomainError, EliminationError
from ..families import M24, M25, build_family
from .words import Word, cyclic_reduce, free_reduce


class Presentation:
    """An ordered generator list plus a list of relator words."""

    __slots__ = ("generators", "relators")

    def __init__(self, generators, relators):
        self.generators = tuple(str(g) for g in generators)
        if len(set(self.generators)) != len(self.generators):
            raise DomainError("duplicate generator name in presentation")
        known = set(self.generators)
        rels = []
        for relator in relators:
            if not isinstance(relator, Word):
                relator = Word(relator)
            unknown = relator.generators() - known
            if unknown:
                raise DomainError(
                    f"unknown generator {sorted(unknown)[0]!r} in relator")
            rels.append(relator)
        self.relators = tuple(rels)

    def __eq__(self, other):
        return (isinstance(other, Presentation)
                and self.generators == other.generators
                and self.relators == other.relators)

    def __repr__(self):
        gens = " ".join(self.generators)
        rels = ", ".join(str(r) for r in self.relators)
        return f"<Presentation <{gens} | {rels}>>"


def presentation_from_pairings(complex_):
    """Generators = pairing names, relators = edge-class cycle words."""
    orbits, _, _ = _orbit_data(complex_)
    generators = [p.name for p in complex_.pairings]
    return Presentation(generators, [orbit.cycle_word for orbit in orbits])


def _spanning_tree(orbit_edges, vertex_class, generators, preferred):
    """Pick one generator per spanning-tree edge of the glued 1-skeleton.

    ``orbit_edges`` maps generator name -> (vertex class, vertex class) of its
    edge's endpoints.  When ``preferred`` names are given they must form a
    spanning tree on their own; otherwise the tree is grown greedily in
    generator order.
    """
    classes = set(vertex_class.values())
    if len(classes) <= 1:
        if preferred:
            raise DomainError("tree edges given for a complex with one vertex class")
        return []
    parent = {c: c for c in classes}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def try_join(name):
        a, b = orbit_edges[name]
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
        return True

    tree = []
    if preferred:
        for name in preferred:
            if name not in orbit_edges:
                raise DomainError(f"unknown tree generator {name!r}")
            if not try_join(name):
                raise DomainError(f"tree generator {name!r} closes a cycle")
            tree.append(name)
    else:
        for name in generators:
            if try_join(name):
                tree.append(name)
    if len(tree) != len(classes) - 1:
        raise DomainError("tree edges do not span the glued 1-skeleton")
    return tree


def presentation_from_cw(complex_, tree_strategy="auto"):
    """Edge-class generators, face-pair boundary relators, tree relators.

    ``tree_strategy`` is ``"auto"`` (use the complex's preferred tree when it
    carries one, else grow a greedy tree) or an explicit iterable of generator
    names to use as the spanning tree.

    Generator naming follows the complex's ``edge_names`` metadata when the
    metadata covers every edge class exactly once (the family builders emit
    x_i, y_i, z_i, u and, for even-parameter second-family complexes, v);
    otherwise classes are named e1..ek in class order.  An anchor flagged as
    reversed hands its generator the direction opposite to the anchor slot's
    stored arrow, which fixes the sign of every appearance.
    """
    from ..complex_core import vertex_orbits

    orbits, slot_sign, orbit_index = _orbit_data(complex_)

    names = [f"e{i + 1}" for i in range(len(orbits))]
    anchor_sign = [1] * len(orbits)
    order = list(range(len(orbits)))
    if complex_.edge_names:
        assigned = {}
        for name, face, slot_index, reversed_flag in complex_.edge_names:
            idx = orbit_index.get((face, slot_index))
            if idx is None or idx in assigned:
                assigned = None
                break
            assigned[idx] = (name, (face, slot_index), reversed_flag)
        if assigned is not None and len(assigned) == len(orbits):
            names = [None] * len(orbits)
            order = []
            for name, face, slot_index, reversed_flag in complex_.edge_names:
                idx = orbit_index[(face, slot_index)]
                names[idx] = name
                sign = slot_sign[(face, slot_index)] * (-1 if reversed_flag else 1)
                anchor_sign[idx] = sign
                order.append(idx)
        else:
            raise DomainError("edge naming metadata does not match the edge classes")

    generators = [names[idx] for idx in order]

    relators = []
    for pairing in complex_.pairings:
        letters = []
        for k in range(len(complex_.faces[pairing.source])):
            slot = (pairing.source, k)
            idx = orbit_index[slot]
            letters.append((names[idx], slot_sign[slot] * anchor_sign[idx]))
        relators.append(Word(letters))

    vclass = {}
    for orbit in vertex_orbits(complex_):
        for v in orbit.member_vertices:
            vclass[v] = orbit.representative
    orbit_edges = {}
    for idx, orbit in enumerate(orbits):
        tail, head = complex_.slot_endpoints(orbit.representative)
        orbit_edges[names[idx]] = (vclass[tail], vclass[head])

    if tree_strategy == "auto":
        preferred = complex_.preferred_tree
    else:
        preferred = tuple(tree_strategy)
        missing = [g for g in preferred if g not in generators]
        if missing:
            raise DomainError(f"unknown tree generator {missing[0]!r}")
    for name in _spanning_tree(orbit_edges, vclass, generators, preferred):
        relators.append(Word([(name, 1)]))

    return Presentation(generators, relators)


def _rotations(letters):
    for r in range(len(letters)):
        yield r, letters[r:] + letters[:r]


def _defining_candidates(presentation, generator):
    """All relators of the form ``g * w^-1`` (up to rotation/inversion).

    Yields tuples ``(sort_key, relator_index, replacement)`` where the
    replacement word ``w`` is free of ``generator``.  The deterministic rank
    is (cyclically reduced length, relator index, rotation, inversion flag).
    """
    out = []
    for index, relator in enumerate(presentation.relators):
        reduced = cyclic_reduce(relator)
        for inverted, base in ((0, reduced.letters),
                               (1, reduced.inverse().letters)):
            for rotation, rotated in _rotations(base):
                if rotated[0] != (generator, 1):
                    continue
                tail = rotated[1:]
                if any(name == generator for name, _ in tail):
                    continue
                replacement = Word(tail).inverse()
                key = (len(reduced), index, rotation, inverted)
                out.append((key, index, replacement))
    out.sort(key=lambda item: item[0])
    return out


def _substitute(word, generator, replacement):
    letters = []
    for name, sign in word.letters:
        if name != generator:
            letters.append((name, sign))
        elif sign == 1:
            letters.extend(replacement.letters)
        else:
            letters.extend(replacement.inverse().letters)
    return free_reduce(Word(letters))


def _apply_elimination(presentation, generator, relator_index, replacement):
    generators = [g for g in presentation.generators if g != generator]
    relators = []
    for index, relator in enumerate(presentation.relators):
        if index == relator_index:
            continue
        new = _substitute(relator, generator, replacement)
        if new.letters:
            relators.append(new)
    return Presentation(generators, relators)


def tietze_eliminate(presentation, generator):
    """Eliminate one generator using a defining relator.

    A defining relator is one that, up to cyclic rotation and inversion, reads
    ``g * w^-1`` with ``w`` free of ``g``.  The relator is removed, ``g`` is
    replaced by ``w`` everywhere, results are freely reduced and trivial
    relators dropped.  Raises EliminationError when no relator defines ``g``.
    """
    if generator not in presentation.generators:
        raise DomainError(f"unknown generator {generator!r}")
    candidates = _defining_candidates(presentation, generator)
    if not candidates:
        raise EliminationError(f"no defining relator for {generator!r}")
    _, index, replacement = candidates[0]
    return _apply_elimination(presentation, generator, index, replacement)


def auto_simplify(presentation):
    """Iterated Tietze elimination with a deterministic schedule.

    At each step every generator owning a defining relator competes; the one
    whose best defining relator is globally shortest wins, earliest generator
    on ties.  Stops when no generator can be eliminated.
    """
    current = presentation
    while True:
        best = None
        for position, generator in enumerate(current.generators):
            candidates = _defining_candidates(current, generator)
            if not candidates:
                continue
            rank = (candidates[0][0][0], position)
            if best is None or rank < best[0]:
                best = (rank, generator, candidates[0])
        if best is None:
            return current
        _, generator, (_, index, replacement) = best
        current = _apply_elimination(current, generator, index, replacement)


def family_elimination_order(n):
    """The scripted elimination schedule: b_1..b_n, a_1..a_n, d."""
    return ([f"b{i}" for i in range(1, n + 1)]
            + [f"a{i}" for i in range(1, n + 1)]
            + ["d"])


def scripted_reduction(family, n):
    """Yield the presentations along the scripted family reduction.

    The first value is the raw pairing presentation; each subsequent value
    eliminates the next generator of :func:`family_elimination_order`.  The
    defining relator for each step must express the generator by a nonempty
    word in the surviving c-generators alone; among those, positive
    replacement words are preferred on relator-length ties.  The family
    substitutions are all positive (b from the squared-letter relators, a
    from the chain relators, d from the first lid relator), so this pins the
    same elimination path at every n and keeps the lid relators as
    survivors.  A missing defining relator is a logic failure for these
    families, hence RuntimeError rather than EliminationError.
    """
    complex_ = build_family(family, n)
    current = presentation_from_pairings(complex_)
    yield current
    surviving = {f"c{i}" for i in range(1, n + 1)}
    for generator in family_elimination_order(n):
        chosen = None
        best_rank = None
        for key, index, replacement in _defining_candidates(current, generator):
            if not replacement.letters:
                continue
            if not replacement.generators() <= surviving:
                continue
            positive = all(sign == 1 for _, sign in replacement.letters)
            rank = (key[0], 0 if positive else 1, key)
            if best_rank is None or rank < best_rank:
                best_rank = rank
                chosen = (index, replacement)
        if chosen is None:
            raise RuntimeError(
                f"scripted elimination of {generator!r} failed at n={n}")
        current = _apply_elimination(current, generator, *chosen)
        yield current


def reduced_family_presentation(family, n):
    """The n-generator presentation on c_1..c_n after the scripted reduction.

    >>> p = reduced_family_presentation("m24", 3)
    >>> p.generators
    ('c1', 'c2', 'c3')
    """
    for presentation in scripted_reduction(family, n):
        pass
    return presentation


_PRESETS = ("G25", "H25", "DUAL24", "SEIFERT_M24_2")


def preset_presentation(preset, n=1):
    """Fixed comparison presentations used to cross-check the derived ones.

    ``G25``/``H25`` are the edge-generator presentations of the second family
    (odd and even parameter respectively; H25 rejects odd n), ``DUAL24`` the
    edge-generator presentation of the first family, and ``SEIFERT_M24_2`` a
    four-generator Seifert-style presentation matched against the reduced
    first-family presentation at n = 2 (the ``n`` argument is ignored there).
    """
    tag = str(preset)
    if tag not in _PRESETS:
        raise DomainError(f"unknown preset {preset!r} (expected one of {_PRESETS})")

    if tag == "SEIFERT_M24_2":
        gens = ["x", "y", "z", "h"]
        rels = [Word.parse("x y z"),
                Word.parse("x h -x -h"),
                Word.parse("y h -y -h"),
                Word.parse("z h -z -h"),
                Word.parse("x x x h"),
                Word.parse("y y y h h"),
                Word.parse("z z z -h")]
        return Presentation(gens, rels)

    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"preset parameter n must be a positive integer, got {n!r}")

    def m(i):
        return (i - 1) % n + 1

    def x(i):
        return f"x{m(i)}"

    def y(i):
        return f"y{m(i)}"

    def z(i):
        return f"z{m(i)}"

    gens = ([x(i) for i in range(1, n + 1)]
            + [y(i) for i in range(1, n + 1)]
            + [z(i) for i in range(1, n + 1)]
            + ["u"])
    surface = Word([(x(i), 1) for i in range(1, n + 1)])

    if tag == "DUAL24":
        rels = [surface]
        rels += [Word([(x(i), 1), ("u", 1), (y(i), -1)]) for i in range(1, n + 1)]
        rels += [Word([(x(i), 1), (y(i + 2), 1), (z(i + 2), -1)])
                 for i in range(1, n + 1)]
        rels += [Word([(z(i), 1), (z(i), 1), (y(i - 1), 1)]) for i in range(1, n + 1)]
        return Presentation(gens, rels)

    if tag == "G25":
        rels = [surface]
        rels += [Word([(x(i), 1), (y(i), 1), ("u", -1)]) for i in range(1, n + 1)]
        rels += [Word([(y(i), 1), (z(i), 1), (x(i - 1), -1)]) for i in range(1, n + 1)]
        rels += [Word([(z(i - 1), 1), (z(i), 1), (y(i - 1), -1)])
                 for i in range(1, n + 1)]
        return Presentation(gens, rels)

    # H25: even parameter only; the odd-indexed face words share u while the
    # even-indexed ones close on their own (their shared letter bounds a disk).
    if n % 2 != 0:
        raise DomainError("preset H25 requires an even parameter")
    rels = [surface]
    rels += [Word([(y(i), 1), (z(i), 1), (x(i - 1), -1)]) for i in range(1, n + 1)]
    rels += [Word([(z(i - 1), 1), (z(i), 1), (y(i - 1), -1)]) for i in range(1, n + 1)]
    rels += [Word([(x(i), 1), (y(i), 1), ("u", -1)]) for i in range(1, n + 1, 2)]
    rels += [Word([(x(i), 1), (y(i), 1)]) for i in range(2, n + 1, 2)]
    return Presentation(gens, rels)
