"""Builders for the two built-in face-pairing families.

Both families share the same cell inventory: for a parameter ``n >= 1`` the
polyhedron has 4n boundary vertices ``P_i, Q_i, R_i, S_i`` (indices mod n,
written 1-based), 6n + 2 triangular/polygonal faces and 3n + 1 pairings named
``a_1..a_n, b_1..b_n, c_1..c_n, d``.  The families differ in how the faces sit
around the polyhedron, which changes every derived invariant downstream.

The ``d`` pairing always identifies the top n-gon ``D = P_1 ... P_n`` with the
bottom n-gon ``Db`` whose boundary list is the S-cycle shifted by two
(``S_3 S_4 ... S_1 S_2``), uniformly in n.
"""

from .complex_core import PairedComplex, Pairing
from .errors import DomainError

M24 = "m24"
M25 = "m25"


def _check_n(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"family parameter n must be a positive integer, got {n!r}")


def _idx(i, n):
    """1-based index arithmetic modulo n."""
    return (i - 1) % n + 1


def _vertices(n):
    return [f"{letter}{i}" for letter in "PQRS" for i in range(1, n + 1)]


def _db_cycle(n):
    # slot k of Db holds S_{k+3} (mod n, 1-based): S3 S4 ... S1 S2
    return [f"S{_idx(k + 3, n)}" for k in range(n)]


def _pairings(n):
    out = []
    for letter, src, tgt in (("a", "A", "Ab"), ("b", "B", "Bb"), ("c", "C", "Cb")):
        out.extend(Pairing(f"{letter}{i}", f"{src}{i}", f"{tgt}{i}")
                   for i in range(1, n + 1))
    out.append(Pairing("d", "D", "Db"))
    return out


def build_m24(n):
    """First family.  Closed orientable for every n; one vertex class.

    >>> from pairglue.complex_core import cell_counts
    >>> tuple(cell_counts(build_m24(3)))
    (1, 10, 10, 1)
    """
    _check_n(n)

    def P(i):
        return f"P{_idx(i, n)}"

    def Q(i):
        return f"Q{_idx(i, n)}"

    def R(i):
        return f"R{_idx(i, n)}"

    def S(i):
        return f"S{_idx(i, n)}"

    faces = {}
    for i in range(1, n + 1):
        faces[f"A{i}"] = (P(i), P(i + 1), Q(i))
        faces[f"Ab{i}"] = (R(i + 2), P(i + 2), Q(i + 1))
        faces[f"B{i}"] = (R(i), P(i), Q(i))
        faces[f"Bb{i}"] = (S(i), S(i + 1), R(i + 1))
        faces[f"C{i}"] = (S(i), R(i), Q(i))
        faces[f"Cb{i}"] = (R(i + 1), Q(i), S(i))
    faces["D"] = tuple(P(i) for i in range(1, n + 1))
    faces["Db"] = tuple(_db_cycle(n))

    involution = []
    for i in range(1, n + 1):
        j = _idx  # shorthand below
        involution.extend([
            ((f"A{i}", 0), ("D", i - 1), True),
            ((f"Bb{i}", 0), ("Db", (i - 3) % n), True),
            ((f"B{i}", 0), (f"Ab{j(i - 2, n)}", 0), True),
            ((f"C{i}", 2), (f"Cb{i}", 1), True),
            ((f"A{i}", 2), (f"B{i}", 1), False),
            ((f"A{i}", 1), (f"Ab{j(i - 1, n)}", 1), True),
            ((f"B{i}", 2), (f"C{i}", 1), False),
            ((f"Ab{i}", 2), (f"Cb{j(i + 1, n)}", 0), False),
            ((f"C{j(i + 1, n)}", 0), (f"Bb{i}", 1), True),
            ((f"Bb{i}", 2), (f"Cb{i}", 2), False),
        ])

    edge_names = []
    for i in range(1, n + 1):
        edge_names.append((f"x{i}", f"A{i}", 0, False))
    for i in range(1, n + 1):
        edge_names.append((f"y{i}", f"B{i}", 1, False))
    for i in range(1, n + 1):
        edge_names.append((f"z{i}", f"C{i}", 1, False))
    edge_names.append(("u", "A1", 1, False))

    return PairedComplex(_vertices(n), faces, involution, _pairings(n),
                         name=M24, n=n, edge_names=edge_names)


def build_m25(n):
    """Second family.  Closed orientable for every n; the vertex count and the
    splitting of one edge class depend on the parity of n.

    >>> from pairglue.complex_core import cell_counts
    >>> tuple(cell_counts(build_m25(4)))
    (2, 14, 13, 1)
    """
    _check_n(n)

    def P(i):
        return f"P{_idx(i, n)}"

    def Q(i):
        return f"Q{_idx(i, n)}"

    def R(i):
        return f"R{_idx(i, n)}"

    def S(i):
        return f"S{_idx(i, n)}"

    faces = {}
    for i in range(1, n + 1):
        faces[f"A{i}"] = (P(i), P(i + 1), Q(i))
        faces[f"Ab{i}"] = (P(i + 2), R(i + 2), Q(i + 2))
        faces[f"B{i}"] = (Q(i), R(i + 1), P(i + 1))
        faces[f"Bb{i}"] = (R(i + 2), S(i + 2), S(i + 1))
        faces[f"C{i}"] = (Q(i - 1), R(i), S(i - 1))
        faces[f"Cb{i}"] = (S(i), Q(i), R(i))
    faces["D"] = tuple(P(i) for i in range(1, n + 1))
    faces["Db"] = tuple(_db_cycle(n))

    j = _idx
    involution = []
    for i in range(1, n + 1):
        involution.extend([
            ((f"A{i}", 0), ("D", i - 1), True),
            ((f"Bb{j(i - 1, n)}", 1), ("Db", (i - 3) % n), False),
            ((f"Ab{i}", 0), (f"B{j(i + 1, n)}", 1), False),
            ((f"Cb{i}", 0), (f"C{j(i + 1, n)}", 2), True),
            ((f"A{j(i + 2, n)}", 2), (f"Ab{i}", 2), True),
            ((f"A{i}", 1), (f"B{i}", 2), True),
            ((f"Ab{i}", 1), (f"Cb{j(i + 2, n)}", 1), False),
            ((f"B{i}", 0), (f"C{j(i + 1, n)}", 0), True),
            ((f"Cb{j(i + 2, n)}", 2), (f"Bb{i}", 0), True),
            ((f"C{j(i + 2, n)}", 1), (f"Bb{i}", 2), False),
        ])

    edge_names = []
    for i in range(1, n + 1):
        edge_names.append((f"x{i}", f"A{i}", 0, False))
    for i in range(1, n + 1):
        edge_names.append((f"y{i}", f"A{i}", 1, False))
    for i in range(1, n + 1):
        edge_names.append((f"z{i}", f"B{i}", 0, False))
    # The class containing the P_i Q_i edges is traversed against the stored
    # slot direction of its anchor, hence the reversed flag; for even n the
    # class splits by parity into two generators u and v, and v is the
    # preferred tree edge (the complex then has two vertex classes).
    edge_names.append(("u", "A1", 2, True))
    preferred_tree = ()
    if n % 2 == 0:
        edge_names.append(("v", "A2", 2, True))
        preferred_tree = ("v",)

    return PairedComplex(_vertices(n), faces, involution, _pairings(n),
                         name=M25, n=n, edge_names=edge_names,
                         preferred_tree=preferred_tree)


def build_family(family, n):
    """Dispatch on a family tag ("m24" or "m25")."""
    tag = str(family).lower()
    if tag == M24:
        return build_m24(n)
    if tag == M25:
        return build_m25(n)
    raise DomainError(f"unknown family {family!r} (expected m24 or m25)")
