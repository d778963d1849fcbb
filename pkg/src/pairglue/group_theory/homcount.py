"""Counting homomorphisms from a presented group into small finite groups.

A finite group is passed around as a plain multiplication table: a square
tuple of tuples of element indices with the identity at index 0, so
``table[i][j]`` is the product of elements ``i`` and ``j``.  The counter
first runs the generator-elimination loop to shrink the search space, then
enumerates generator images depth first, rejecting a branch as soon as some
relator with all its generators assigned fails to evaluate to the identity.
"""

from itertools import permutations, product

from ..errors import CapacityError, DomainError
from .presentations import auto_simplify

MAX_SEARCH_GENERATORS = 6


def validate_table(table):
    """Check a multiplication table is a group table; raises DomainError.

    Verifies squareness, entry range, identity at index 0, two-sided
    inverses, and full associativity (cubic in the order, which is fine for
    the intended order-at-most-twelve targets).
    """
    order = len(table)
    if order == 0:
        raise DomainError("empty multiplication table")
    for i, row in enumerate(table):
        if len(row) != order:
            raise DomainError(f"row {i} has length {len(row)}, expected {order}")
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or not 0 <= entry < order:
                raise DomainError(f"entry at ({i}, {j}) is not an element index")
    for i in range(order):
        if table[0][i] != i or table[i][0] != i:
            raise DomainError("element 0 is not a two-sided identity")
    for i in range(order):
        if not any(table[i][j] == 0 and table[j][i] == 0 for j in range(order)):
            raise DomainError(f"element {i} has no two-sided inverse")
    for i in range(order):
        for j in range(order):
            for k in range(order):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise DomainError(
                        f"associativity fails at ({i}, {j}, {k})")


def _inverses(table):
    order = len(table)
    return tuple(next(j for j in range(order) if table[i][j] == 0)
                 for i in range(order))


def count_homomorphisms(presentation, table):
    """Number of homomorphisms from the presented group into the table group.

    The presentation is reduced first; if more than six generators survive,
    a CapacityError is raised rather than attempting a hopeless search.

    >>> from .presentations import Presentation
    >>> from .words import Word
    >>> z3 = tuple(tuple((i + j) % 3 for j in range(3)) for i in range(3))
    >>> count_homomorphisms(Presentation(["a"], [Word.parse("a a a")]), z3)
    3
    """
    validate_table(table)
    reduced = auto_simplify(presentation)
    generators = reduced.generators
    if len(generators) > MAX_SEARCH_GENERATORS:
        raise CapacityError(
            f"{len(generators)} generators remain after reduction; "
            f"the search handles at most {MAX_SEARCH_GENERATORS}")

    order = len(table)
    inverse = _inverses(table)
    index_of = {g: i for i, g in enumerate(generators)}

    # Precompile relators as (max generator index, letter index/sign pairs);
    # a relator is checked at the first depth where all its letters have
    # images.  Empty relators hold vacuously.
    compiled = []
    for relator in reduced.relators:
        letters = tuple((index_of[name], sign) for name, sign in relator)
        if letters:
            compiled.append((max(i for i, _ in letters), letters))
    by_depth = {}
    for depth, letters in compiled:
        by_depth.setdefault(depth, []).append(letters)

    images = [0] * len(generators)

    def evaluates_to_identity(letters):
        value = 0
        for gen_index, sign in letters:
            image = images[gen_index]
            value = table[value][image if sign > 0 else inverse[image]]
        return value == 0

    def search(depth):
        if depth == len(generators):
            return 1
        total = 0
        for candidate in range(order):
            images[depth] = candidate
            if all(evaluates_to_identity(letters)
                   for letters in by_depth.get(depth, ())):
                total += search(depth + 1)
        return total

    return search(0)


def _cyclic(m):
    return tuple(tuple((i + j) % m for j in range(m)) for i in range(m))


def _direct_product(left, right):
    elements = tuple(product(range(len(left)), range(len(right))))
    index = {e: i for i, e in enumerate(elements)}
    return tuple(
        tuple(index[(left[a][c], right[b][d])] for (c, d) in elements)
        for (a, b) in elements)


def _dihedral(m):
    # (i, j) is rotation i followed by j reflections:
    # (i, j) * (k, l) = (i + (-1)^j k, j + l)
    elements = tuple(product(range(m), range(2)))
    index = {e: i for i, e in enumerate(elements)}
    return tuple(
        tuple(index[((i + (k if j == 0 else -k)) % m, (j + l) % 2)]
              for (k, l) in elements)
        for (i, j) in elements)


def _quaternion():
    # signed quaternion units; (sign, axis) with axis in e,i,j,k
    unit = {
        ("e", "e"): (1, "e"), ("e", "i"): (1, "i"), ("e", "j"): (1, "j"),
        ("e", "k"): (1, "k"), ("i", "e"): (1, "i"), ("j", "e"): (1, "j"),
        ("k", "e"): (1, "k"), ("i", "i"): (-1, "e"), ("j", "j"): (-1, "e"),
        ("k", "k"): (-1, "e"), ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"), ("k", "i"): (1, "j"),
        ("i", "k"): (-1, "j"),
    }
    elements = tuple((s, axis) for axis in "eijk" for s in (1, -1))
    index = {e: i for i, e in enumerate(elements)}

    def multiply(a, b):
        sign, axis = unit[(a[1], b[1])]
        return (a[0] * b[0] * sign, axis)

    return tuple(tuple(index[multiply(a, b)] for b in elements)
                 for a in elements)


def _alternating4():
    elements = tuple(sorted(
        p for p in permutations(range(4))
        if sum(p[i] > p[j] for i in range(4) for j in range(i + 1, 4)) % 2 == 0))
    index = {e: i for i, e in enumerate(elements)}
    return tuple(
        tuple(index[tuple(p[q[x]] for x in range(4))] for q in elements)
        for p in elements)


def _dicyclic3():
    # order 12: (i, 0)(k, l) = (i + k, l); (i, 1)(k, 0) = (i - k, 1);
    # (i, 1)(k, 1) = (i - k + 3, 0), all mod 6
    elements = tuple(product(range(6), range(2)))
    index = {e: i for i, e in enumerate(elements)}

    def multiply(a, b):
        (i, j), (k, l) = a, b
        if j == 0:
            return ((i + k) % 6, l)
        if l == 0:
            return ((i - k) % 6, 1)
        return ((i - k + 3) % 6, 0)

    return tuple(tuple(index[multiply(a, b)] for b in elements)
                 for a in elements)


def small_groups():
    """All groups of order at most twelve, keyed by conventional name.

    Every table is validated before being returned, so a typo in a
    construction fails loudly here rather than corrupting a count.
    """
    catalog = {
        "Z1": _cyclic(1),
        "Z2": _cyclic(2),
        "Z3": _cyclic(3),
        "Z4": _cyclic(4),
        "Z2xZ2": _direct_product(_cyclic(2), _cyclic(2)),
        "Z5": _cyclic(5),
        "Z6": _cyclic(6),
        "D3": _dihedral(3),
        "Z7": _cyclic(7),
        "Z8": _cyclic(8),
        "Z4xZ2": _direct_product(_cyclic(4), _cyclic(2)),
        "Z2xZ2xZ2": _direct_product(_direct_product(_cyclic(2), _cyclic(2)),
                                    _cyclic(2)),
        "D4": _dihedral(4),
        "Q8": _quaternion(),
        "Z9": _cyclic(9),
        "Z3xZ3": _direct_product(_cyclic(3), _cyclic(3)),
        "Z10": _cyclic(10),
        "D5": _dihedral(5),
        "Z11": _cyclic(11),
        "Z12": _cyclic(12),
        "Z6xZ2": _direct_product(_cyclic(6), _cyclic(2)),
        "D6": _dihedral(6),
        "A4": _alternating4(),
        "Dic3": _dicyclic3(),
    }
    for table in catalog.values():
        validate_table(table)
    return catalog
