"""Face-paired polyhedral complexes and their cell-orbit analysis.

A PairedComplex models the boundary sphere of a single polyhedron cut into
polygonal faces, together with a pairing of those faces.  Gluing each face to
its partner produces a closed pseudo-manifold; the classes of this module
compute the cells of that quotient (vertex classes, edge classes with their
cycle words, face pairs) and certify manifoldness through the Euler
characteristic.

Edges are positional throughout: slot ``k`` of a face is the directed edge
from its ``k``-th boundary vertex to the next one, and a slot is addressed as
``(face_label, k)``.  Vertex labels play no role in identification; they may
repeat along a single face (small complexes have monogons and loops).
"""

import re
from collections import namedtuple

from .errors import StructureError

_DIGIT_RUN = re.compile(r"(\d+)")


def natural_key(label):
    """Sort key that orders embedded integers numerically.

    >>> sorted(["P10", "P2", "Q1"], key=natural_key)
    ['P2', 'P10', 'Q1']
    """
    return tuple(int(run) if run.isdigit() else run
                 for run in _DIGIT_RUN.split(label))


def slot_key(slot):
    """Deterministic scan order for slots: face label (natural), then index."""
    return (natural_key(slot[0]), slot[1])


def format_slot(slot):
    """Render a slot as ``FACE.k``, the form used in documents and reports."""
    return f"{slot[0]}.{slot[1]}"


class Pairing:
    """An identification of one face with another.

    The correspondence is cyclic-affine on slot indices: vertex ``j`` of the
    source goes to vertex ``(offset + direction*j) mod L`` of the target,
    where ``direction`` is +1 or -1.  Consequently slot ``k`` of the source is
    carried to slot ``(offset + k) mod L`` read forwards when direction is +1,
    and to slot ``(offset - k - 1) mod L`` read backwards when direction is -1.
    This is fully general for polygon-to-polygon identifications.
    """

    __slots__ = ("name", "source", "target", "offset", "direction")

    def __init__(self, name, source, target, offset=0, direction=1):
        self.name = name
        self.source = source
        self.target = target
        self.offset = offset
        self.direction = direction

    def __repr__(self):
        return (f"Pairing({self.name!r}, {self.source!r}, {self.target!r}, "
                f"offset={self.offset}, direction={self.direction})")

    def __eq__(self, other):
        return (isinstance(other, Pairing)
                and (self.name, self.source, self.target, self.offset,
                     self.direction)
                == (other.name, other.source, other.target, other.offset,
                    other.direction))

    def __hash__(self):
        return hash((self.name, self.source, self.target, self.offset,
                     self.direction))

    def vertex_image(self, j, length):
        return (self.offset + self.direction * j) % length

    def image_directed(self, k, sense, length):
        """Image of source slot ``k`` traversed with ``sense`` (+1 forward)."""
        if self.direction == 1:
            return (self.offset + k) % length, sense
        return (self.offset - k - 1) % length, -sense

    def preimage_directed(self, k, sense, length):
        """Directed preimage of target slot ``k``; inverse of image_directed."""
        if self.direction == 1:
            return (k - self.offset) % length, sense
        return (self.offset - k - 1) % length, -sense


class PairedComplex:
    """A polyhedron boundary with paired faces.

    Parameters
    ----------
    vertex_labels : iterable of str
    faces : mapping or iterable of (label, vertex list); the list is the
        face's boundary cycle and its starting point is significant (it fixes
        slot indices).
    involution : iterable of (slot, slot, aligned) triples or a prebuilt
        ``{slot: (slot, aligned)}`` mapping.  Two slots form one polyhedron
        edge; ``aligned`` is True when their stored directions traverse the
        edge the same way.
    pairings : iterable of Pairing.

    ``name`` and ``n`` are serialized; ``edge_names`` / ``preferred_tree``
    are optional presentation metadata (see group_theory.presentations) and
    take no part in structural identity or serialization.

    Construction is deliberately permissive: malformed data is accepted and
    reported by :func:`validate`, which is what the error contract requires.
    """

    def __init__(self, vertex_labels, faces, involution, pairings,
                 name="complex", n=None, edge_names=(), preferred_tree=()):
        self.vertex_labels = tuple(vertex_labels)
        if hasattr(faces, "items"):
            face_items = faces.items()
        else:
            face_items = faces
        self.faces = {label: tuple(vertices) for label, vertices in face_items}
        if hasattr(involution, "items"):
            self.involution = {slot: (tuple(mate), bool(aligned))
                               for slot, (mate, aligned) in involution.items()}
        else:
            self.involution = {}
            for a, b, aligned in involution:
                a, b = tuple(a), tuple(b)
                self.involution[a] = (b, bool(aligned))
                self.involution[b] = (a, bool(aligned))
        self.pairings = tuple(pairings)
        self.name = name
        self.n = n
        self.edge_names = tuple(edge_names)
        self.preferred_tree = tuple(preferred_tree)

    def face_length(self, label):
        return len(self.faces[label])

    def face_slots(self, label):
        return [(label, k) for k in range(len(self.faces[label]))]

    def all_slots(self):
        """Every slot of every face, in deterministic scan order."""
        out = []
        for label in sorted(self.faces, key=natural_key):
            out.extend(self.face_slots(label))
        return out

    def slot_endpoints(self, slot):
        """The (tail, head) vertex labels of a slot's directed edge."""
        label, k = slot
        cycle = self.faces[label]
        return cycle[k], cycle[(k + 1) % len(cycle)]

    def pairing_by_face(self):
        """Map each face label to ``(pairing, is_source)``.

        Faces appearing in several pairings keep the first occurrence; that
        situation is reported by validate() and rejected before analysis.
        """
        table = {}
        for pairing in self.pairings:
            table.setdefault(pairing.source, (pairing, True))
            table.setdefault(pairing.target, (pairing, False))
        return table

    def same_structure(self, other):
        """Structural equality: cells, involution and pairings.

        Ignores ``name``, ``n`` and presentation metadata, and ignores the
        order in which vertices, faces and pairings were supplied.
        """
        if set(self.vertex_labels) != set(other.vertex_labels):
            return False
        if self.faces != other.faces:
            return False
        if self.involution != other.involution:
            return False
        mine = {p.name: (p.source, p.target, p.offset, p.direction)
                for p in self.pairings}
        theirs = {p.name: (p.source, p.target, p.offset, p.direction)
                  for p in other.pairings}
        return mine == theirs

    def __repr__(self):
        return (f"<PairedComplex {self.name!r}: {len(self.vertex_labels)} vertices, "
                f"{len(self.faces)} faces, {len(self.pairings)} pairings>")


CellCounts = namedtuple("CellCounts", ["sigma0", "sigma1", "sigma2", "sigma3"])

EdgeOrbit = namedtuple("EdgeOrbit", ["representative", "member_edges", "cycle_word"])
EdgeOrbit.__doc__ = """One edge class of the glued complex.

``member_edges`` holds one canonical slot per polyhedron edge (the lesser of
the edge's two slots in scan order), sorted; ``representative`` is the first
of them.  ``cycle_word`` is the closed word of pairing letters that carries
the representative edge around its class and back to itself.
"""

VertexOrbit = namedtuple("VertexOrbit", ["representative", "member_vertices"])


def validate(complex_):
    """Check every structural invariant; return the list of violations.

    An empty list means the complex is legal.  Violations are data (strings
    naming the offending face/slot/pairing), not exceptions: the analysis
    functions raise :class:`StructureError` themselves when handed a complex
    that does not validate.
    """
    violations = []
    c = complex_
    known_vertices = set(c.vertex_labels)

    for label, cycle in c.faces.items():
        if not cycle:
            violations.append(f"face {label} has no vertices")
        for v in cycle:
            if v not in known_vertices:
                violations.append(f"face {label} references unknown vertex {v}")

    seen_names = set()
    usage = {}
    for pairing in c.pairings:
        if pairing.name in seen_names:
            violations.append(f"duplicate pairing name {pairing.name}")
        seen_names.add(pairing.name)
        missing = [f for f in (pairing.source, pairing.target) if f not in c.faces]
        for f in missing:
            violations.append(f"pairing {pairing.name} references unknown face {f}")
        if missing:
            continue
        if pairing.source == pairing.target:
            violations.append(f"pairing {pairing.name} pairs face "
                              f"{pairing.source} with itself")
        ls, lt = len(c.faces[pairing.source]), len(c.faces[pairing.target])
        if ls != lt:
            violations.append(f"pairing {pairing.name} joins faces of different "
                              f"lengths ({ls} vs {lt})")
        if not 0 <= pairing.offset < lt:
            violations.append(f"pairing {pairing.name} offset {pairing.offset} "
                              f"out of range")
        if pairing.direction not in (1, -1):
            violations.append(f"pairing {pairing.name} direction must be +1 or -1")
        for f in (pairing.source, pairing.target):
            usage.setdefault(f, []).append(pairing.name)

    for label in c.faces:
        names = usage.get(label, [])
        if not names:
            violations.append(f"unpaired face {label}")
        elif len(names) > 1:
            violations.append(f"face {label} doubly paired ({', '.join(names)})")

    slots = set()
    for label, cycle in c.faces.items():
        if all(v in known_vertices for v in cycle):
            slots.update((label, k) for k in range(len(cycle)))

    for slot in sorted(slots, key=slot_key):
        entry = complex_.involution.get(slot)
        if entry is None:
            violations.append(f"involution missing entry for {format_slot(slot)}")
            continue
        mate, aligned = entry
        if mate == slot:
            violations.append(f"involution has a fixed point at {format_slot(slot)}")
            continue
        if mate not in slots:
            violations.append(f"involution at {format_slot(slot)} references "
                              f"unknown slot {format_slot(mate)}")
            continue
        back = complex_.involution.get(mate)
        if back != (slot, aligned):
            violations.append(f"involution not symmetric at {format_slot(slot)}")
            continue
        tail, head = c.slot_endpoints(slot)
        mtail, mhead = c.slot_endpoints(mate)
        expected = (mtail, mhead) if aligned else (mhead, mtail)
        if (tail, head) != expected:
            violations.append(f"involution endpoints mismatch at {format_slot(slot)}")
    for slot in complex_.involution:
        if slot not in slots:
            violations.append(f"involution references unknown slot {format_slot(slot)}")

    if violations:
        return violations

    # Orientation phase: orient every face so that neighbouring faces traverse
    # each shared edge in opposite directions, then require every pairing to
    # reverse that orientation (the glued space is then orientable).
    orient = {}
    for start in sorted(c.faces, key=natural_key):
        if start in orient:
            continue
        orient[start] = 1
        queue = [start]
        while queue:
            face = queue.pop()
            for slot in c.face_slots(face):
                mate, aligned = c.involution[slot]
                needed = -orient[face] if aligned else orient[face]
                if mate[0] not in orient:
                    orient[mate[0]] = needed
                    queue.append(mate[0])
                elif orient[mate[0]] != needed:
                    violations.append("boundary orientation inconsistent near "
                                      f"face {mate[0]}")
                    return violations
    for pairing in c.pairings:
        if pairing.direction * orient[pairing.source] * orient[pairing.target] != -1:
            violations.append(f"pairing {pairing.name} does not reverse orientation")

    return violations


def _require_valid(complex_):
    violations = validate(complex_)
    if violations:
        raise StructureError(violations)


def _orbit_data(complex_):
    """Traverse every edge class; the workhorse behind edge_orbits.

    Returns ``(orbits, slot_sign, orbit_index)`` where ``slot_sign[slot]`` is
    +1/-1 according to whether the class traversal first crossed the slot
    along or against its stored direction, and ``orbit_index[slot]`` is the
    position of the slot's class in ``orbits``.

    The traversal starts at the scan-order representative, repeatedly applies
    the pairing of the current slot's face (the inverse pairing when that face
    is a target) and then crosses the boundary involution, recording one
    pairing letter per step until the starting edge reappears.
    """
    from .group_theory.words import Word

    c = complex_
    _require_valid(c)
    by_face = c.pairing_by_face()

    def pairing_move(slot, sense):
        face, k = slot
        pairing, is_source = by_face[face]
        length = len(c.faces[face])
        if is_source:
            k2, sense2 = pairing.image_directed(k, sense, length)
            return (pairing.target, k2), sense2, (pairing.name, 1)
        k2, sense2 = pairing.preimage_directed(k, sense, length)
        return (pairing.source, k2), sense2, (pairing.name, -1)

    orbits = []
    slot_sign = {}
    orbit_index = {}
    for rep in c.all_slots():
        if rep in slot_sign:
            continue
        index = len(orbits)

        def record(slot, sense):
            mate, aligned = c.involution[slot]
            slot_sign[slot] = sense
            slot_sign[mate] = sense if aligned else -sense
            orbit_index[slot] = index
            orbit_index[mate] = index
            return min(slot, mate, key=slot_key)

        members = [record(rep, 1)]
        letters = []
        slot, sense = rep, 1
        while True:
            slot, sense, letter = pairing_move(slot, sense)
            letters.append(letter)
            if slot in slot_sign and orbit_index[slot] == index:
                mate = c.involution[slot][0]
                if min(slot, mate, key=slot_key) != members[0]:
                    raise StructureError([f"edge class at {format_slot(rep)} "
                                          "folds onto itself"])
                break
            members.append(record(slot, sense))
            mate, aligned = c.involution[slot]
            slot, sense = mate, sense if aligned else -sense
        orbits.append(EdgeOrbit(representative=rep,
                                member_edges=tuple(sorted(members, key=slot_key)),
                                cycle_word=Word(letters)))
    return orbits, slot_sign, orbit_index


def edge_orbits(complex_):
    """The edge classes of the glued complex, sorted by representative.

    Each class comes with its closed cycle word of pairing letters.  Raises
    StructureError when the complex does not validate.
    """
    return _orbit_data(complex_)[0]


def vertex_orbits(complex_):
    """Vertex classes of the glued complex (pairings generate the relation)."""
    c = complex_
    _require_valid(c)
    parent = {v: v for v in c.vertex_labels}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for pairing in c.pairings:
        source = c.faces[pairing.source]
        target = c.faces[pairing.target]
        for j, v in enumerate(source):
            union(v, target[pairing.vertex_image(j, len(source))])

    classes = {}
    for v in c.vertex_labels:
        classes.setdefault(find(v), []).append(v)
    out = []
    for members in classes.values():
        members.sort(key=natural_key)
        out.append(VertexOrbit(representative=members[0],
                               member_vertices=tuple(members)))
    out.sort(key=lambda orbit: natural_key(orbit.representative))
    return out


def cell_counts(complex_):
    """Cell census (sigma0, sigma1, sigma2, sigma3) of the glued complex.

    sigma3 is 1 by construction (a single polyhedron), sigma2 the number of
    face pairs, sigma1 the number of edge classes, sigma0 the number of
    vertex classes.
    """
    return CellCounts(sigma0=len(vertex_orbits(complex_)),
                      sigma1=len(edge_orbits(complex_)),
                      sigma2=len(complex_.faces) // 2,
                      sigma3=1)


def is_manifold(complex_):
    """Certify manifoldness of the glued complex.

    For a face-pairing quotient of a single polyhedron the quotient is a
    closed 3-manifold exactly when its Euler characteristic vanishes; the
    returned pair is (chi == 0, chi).
    """
    counts = cell_counts(complex_)
    chi = counts.sigma0 - counts.sigma1 + counts.sigma2 - counts.sigma3
    return chi == 0, chi
