"""Words in a free group over named generators.

A word is a flat sequence of signed letters ``(name, +1|-1)``; no run-length
compression is applied at the data level.  The text form used throughout the
package writes an inverse letter with a ``-`` prefix:

>>> w = Word.parse("a1 b3 -d")
>>> str(w)
'a1 b3 -d'
>>> str(w.inverse())
'd -b3 -a1'
"""

from ..complex_core import natural_key


class Word:
    __slots__ = ("letters",)

    def __init__(self, letters=()):
        normalized = []
        for name, sign in letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
            normalized.append((str(name), sign))
        self.letters = tuple(normalized)

    @classmethod
    def parse(cls, text):
        """Build a word from whitespace-separated tokens (``-x`` = inverse)."""
        letters = []
        for token in text.split():
            if token.startswith("-"):
                letters.append((token[1:], -1))
            else:
                letters.append((token, 1))
        return cls(letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def __str__(self):
        return " ".join(name if sign == 1 else f"-{name}"
                        for name, sign in self.letters)

    def __repr__(self):
        return f"Word.parse({str(self)!r})"

    def inverse(self):
        return Word((name, -sign) for name, sign in reversed(self.letters))

    def generators(self):
        """The set of generator names occurring in the word."""
        return {name for name, _ in self.letters}

    def exponent_sum(self, generator):
        """Net exponent of one generator (abelianized image).

        >>> Word.parse("a b a -b a").exponent_sum("a")
        3
        """
        return sum(sign for name, sign in self.letters if name == generator)


def free_reduce(word):
    """Cancel adjacent inverse pairs until none remain.  Idempotent.

    >>> str(free_reduce(Word.parse("a -b b a -a")))
    'a'
    """
    stack = []
    for name, sign in word.letters:
        if stack and stack[-1] == (name, -sign):
            stack.pop()
        else:
            stack.append((name, sign))
    return Word(stack)


def cyclic_reduce(word):
    """Freely reduce, then strip inverse first/last pairs."""
    letters = list(free_reduce(word).letters)
    while len(letters) >= 2 and letters[0] == (letters[-1][0], -letters[-1][1]):
        letters = letters[1:-1]
    return Word(letters)


def _letter_order(letter):
    name, sign = letter
    # positive letters sort before their inverses
    return (natural_key(name), 0 if sign == 1 else 1)


def _word_order(letters):
    return tuple(_letter_order(letter) for letter in letters)


def cyclic_normal_form(word):
    """Canonical representative of a relator up to rotation and inversion.

    The word is freely and cyclically reduced, then the lexicographically
    least sequence among all rotations of the result and of its inverse is
    returned (positive letters before inverses, generator names in natural
    order).  Two relators define the same cyclic class iff their normal forms
    are equal.

    >>> str(cyclic_normal_form(Word.parse("-a")))
    'a'
    >>> cyclic_normal_form(Word.parse("b -c -c")) == cyclic_normal_form(
    ...     Word.parse("c c -b"))
    True
    """
    reduced = cyclic_reduce(word)
    if not reduced.letters:
        return reduced
    candidates = []
    for base in (reduced.letters, reduced.inverse().letters):
        for r in range(len(base)):
            candidates.append(base[r:] + base[:r])
    return Word(min(candidates, key=_word_order))
