"""Integer partitions and Young-diagram combinatorics.

Everything downstream (counting, characters, sampling) indexes on the
``Partition`` type defined here.  Hooks and border strips are enumerated
through first-column hook lengths (beta numbers), which keeps the strip
query at O(rows) per call instead of walking the whole diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class Partition:
    """A weakly decreasing sequence of positive integer parts.

    Immutable and hashable; the empty sequence is the unique partition
    of 0.  The text form used by the CLI and JSON output is
    ``"[4,2,1]"`` (empty: ``"[]"``).
    """

    __slots__ = ("parts", "size")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "size", sum(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def first_column_hook_lengths(self) -> list[int]:
        """Hook lengths of the first-column boxes, top to bottom.

        These are strictly decreasing and determine the diagram (beta
        numbers for the fixed number of rows).
        """
        r = len(self.parts)
        return [self.parts[i] + r - 1 - i for i in range(r)]


def parse_partition(text: str) -> Partition:
    """Parse the bracketed text form, e.g. ``"[4,2,1]"`` or ``"[]"``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition text must be bracketed, got {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return Partition(())
    try:
        parts = [int(tok) for tok in inner.split(",")]
    except ValueError:
        raise ValueError(f"bad partition text {text!r}") from None
    return Partition(parts)


@dataclass(frozen=True)
class Hook:
    """A hook of the diagram: its box position, length and height.

    ``length`` counts the boxes of the hook; ``height`` is one less than
    the number of rows the hook touches (the leg length).
    """

    row: int
    col: int
    length: int
    height: int


@dataclass(frozen=True)
class StripRemoval:
    """A border strip of a given length together with what is left.

    ``sign`` is (-1)**height, the factor the strip contributes to a
    character expansion.
    """

    hook: Hook
    remainder: Partition
    sign: int


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, largest-first.

    The order is reverse-lexicographic on part sequences, e.g. for n=4:
    (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  Fixed so that table row and
    column order is reproducible bit-for-bit.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition(())
        return
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        rem = 0
        while parts and parts[-1] == 1:
            parts.pop()
            rem += 1
        if not parts:
            return
        parts[-1] -= 1
        rem += 1
        v = parts[-1]
        while rem > v:
            parts.append(v)
            rem -= v
        parts.append(rem)


def hook_multiset(lam: Partition) -> list[int]:
    """All hook lengths of the diagram, one per box, row-major.

    The returned list is a multiset; its length equals ``lam.size``.
    """
    if not lam.parts:
        return []
    conj = lam.conjugate().parts
    out = []
    for i, row_len in enumerate(lam.parts):
        for j in range(row_len):
            out.append(row_len - j + conj[j] - i - 1)
    return out


def raw_strips(parts: tuple[int, ...], t: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Border strips of length t as (row, height, remainder parts) triples.

    Scans the strictly decreasing beta numbers b_i = parts[i] + rows-1-i:
    a strip of length t exists at row i iff b_i - t is nonnegative and
    not itself a beta number; its height is the number of beta numbers
    the moved one passes.  Topmost row first.  This is the hot path of
    the character recursion, so it works on bare tuples.
    """
    r = len(parts)
    betas = [parts[i] + r - 1 - i for i in range(r)]
    beta_set = set(betas)
    out = []
    for i, b in enumerate(betas):
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        height = 0
        for j in range(i + 1, r):
            if betas[j] > nb:
                height += 1
            else:
                break
        new_betas = sorted(betas[:i] + betas[i + 1:] + [nb], reverse=True)
        rem = tuple(x - (r - 1 - k) for k, x in enumerate(new_betas))
        out.append((i, height, tuple(p for p in rem if p > 0)))
    return out


def strips_of_length(lam: Partition, t: int) -> list[StripRemoval]:
    """One StripRemoval per hook of length exactly t, topmost row first.

    Empty iff the diagram has no hook of length t.  Each row holds at
    most one hook of a given length, so row order is row-major order.
    """
    if t < 1:
        raise ValueError("strip length must be positive")
    out = []
    for row, height, rem in raw_strips(lam.parts, t):
        hook = Hook(row=row, col=lam.parts[row] - t + height, length=t, height=height)
        out.append(StripRemoval(hook=hook, remainder=Partition(rem),
                                sign=-1 if height % 2 else 1))
    return out


def is_t_core(lam: Partition, t: int) -> bool:
    """True iff no hook length of lam is divisible by t.

    Divisible by, not merely equal to; the empty partition is a t-core
    for every t.
    """
    if t < 1:
        raise ValueError("t must be positive")
    return all(h % t for h in hook_multiset(lam))
