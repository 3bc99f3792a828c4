"""Free group words and automorphisms.

A word is a tuple of nonzero ints: ``+(i+1)`` is generator ``i`` and
``-(i+1)`` its inverse.  Every function returns freely reduced words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple  # tuple[int, ...]

EMPTY: Word = ()


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator names."""

    names: tuple

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise WordError(f"duplicate generator names in {self.names}")
        if not self.names:
            raise WordError("alphabet must be nonempty")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise WordError(f"unknown generator {name!r}") from None

    def parse(self, text: str) -> Word:
        """Parse ``a1 b1^-1 a2`` (also ``a^3``, ``a^-2``)."""
        letters = []
        for tok in text.split():
            name, _, exp = tok.partition("^")
            e = int(exp) if exp else 1
            if e == 0:
                continue
            g = self.index(name) + 1
            letters.extend([g if e > 0 else -g] * abs(e))
        return reduce(letters, self.rank)

    def format(self, w: Sequence[int]) -> str:
        return " ".join(self.names[abs(x) - 1] + ("^-1" if x < 0 else "") for x in w)

    def generator(self, name: str) -> Word:
        return (self.index(name) + 1,)


def reduce(letters: Iterable[int], rank: int | None = None) -> Word:
    """Freely reduce a raw letter sequence."""
    out: list = []
    for x in letters:
        if x == 0 or (rank is not None and abs(x) > rank):
            raise WordError(f"letter {x} out of range for rank {rank}")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def multiply(*words: Sequence[int]) -> Word:
    out: list = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def invert_word(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def power(w: Sequence[int], n: int) -> Word:
    if n < 0:
        w, n = invert_word(w), -n
    return multiply(*([w] * n))


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return tuple(w[i:j])


def _is_rotation(u: Word, v: Word) -> bool:
    if len(u) != len(v):
        return False
    if not u:
        return True
    # Rotation test via substring search on the doubled word.
    enc = lambda w: ",".join(map(str, w)) + ","
    return ("," + enc(v)) in ("," + enc(u + u))


def conjugate_equal(u: Sequence[int], v: Sequence[int], unoriented: bool = False) -> bool:
    """True iff u and v are conjugate (or u ~ v^-1 when ``unoriented``)."""
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if _is_rotation(cu, cv):
        return True
    return unoriented and _is_rotation(cu, cyclic_reduce(invert_word(cv)))


def abelianize(w: Sequence[int], rank: int) -> list:
    vec = [0] * rank
    for x in w:
        vec[abs(x) - 1] += 1 if x > 0 else -1
    return vec


@dataclass(frozen=True)
class FreeGroupAut:
    """Endomorphism of a free group given by generator images.

    Invertibility is not computed; callers attach inverse tables and
    check them by composition.
    """

    images: tuple
    _inv_images: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        imgs = tuple(reduce(w) for w in self.images)
        object.__setattr__(self, "images", imgs)
        object.__setattr__(self, "_inv_images", tuple(invert_word(w) for w in imgs))

    @property
    def rank(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, rank: int) -> "FreeGroupAut":
        return cls(tuple((i + 1,) for i in range(rank)))

    def __call__(self, w: Sequence[int]) -> Word:
        return apply_aut(self, w)

    def __matmul__(self, other: "FreeGroupAut") -> "FreeGroupAut":
        return compose_auts(self, other)

    def abelianization(self) -> list:
        """Integer matrix whose column j is the image of generator j."""
        cols = [abelianize(w, self.rank) for w in self.images]
        return [[cols[j][i] for j in range(self.rank)] for i in range(self.rank)]


def apply_aut(phi: FreeGroupAut, w: Sequence[int]) -> Word:
    out: list = []
    imgs, inv = phi.images, phi._inv_images
    n = len(imgs)
    for x in w:
        if abs(x) > n:
            raise WordError(f"letter {x} outside automorphism of rank {n}")
        for y in (imgs[x - 1] if x > 0 else inv[-x - 1]):
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def compose_auts(phi: FreeGroupAut, psi: FreeGroupAut) -> FreeGroupAut:
    """Functional order: (phi o psi)(x) = phi(psi(x))."""
    if phi.rank != psi.rank:
        raise WordError(f"rank mismatch {phi.rank} vs {psi.rank}")
    return FreeGroupAut(tuple(apply_aut(phi, w) for w in psi.images))


def aut_equal(phi: FreeGroupAut, psi: FreeGroupAut) -> bool:
    return phi.rank == psi.rank and phi.images == psi.images


def conjugation_aut(rank: int, c: Sequence[int]) -> FreeGroupAut:
    """x -> c x c^-1."""
    ci = invert_word(c)
    return FreeGroupAut(tuple(multiply(c, ((i + 1),), ci) for i in range(rank)))
