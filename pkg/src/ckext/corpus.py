"""Built-in regression corpus.

The classical worked examples with published invariants: the full matrices
(Cuntz algebras O_N), the Fibonacci matrix, and six 3x3 matrices whose weak
pairs and strong triples are known in closed form.  Each entry records the
matrix and the expected marked groups, for use by the CLI's `examples`
command and the regression tests.

Three published marker values for these matrices are inconsistent with the
defining identity [T]_s = -iota(1) - [1_N] (the free parts of [T]_s and
iota(1) always carry the same sign, and for A4 the class of 1_N vanishes
weakly, making [T]_s = iota(1)).  The corpus therefore pins the values the
identities force, which every verifier in this package confirms; the
published variants are kept in PUBLISHED_DISCREPANCIES for reference.
"""

from __future__ import annotations

from dataclasses import dataclass

from .markediso import MarkedGroup, marked_group


@dataclass(frozen=True)
class MarkedDescriptor:
    """Abstract marked group: descriptor plus marker coordinates.

    Marker coordinates are written free part first, e.g. in Z + Z/2 the
    marker -2 (+) 1 is (-2, 1).  The trivial group is (0, ()).
    """

    free_rank: int
    torsion: tuple[int, ...]
    markers: tuple[tuple[int, ...], ...]

    def build(self) -> MarkedGroup:
        return marked_group(self.free_rank, self.torsion, self.markers)

    def label(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        name = " + ".join(parts) if parts else "0"
        marks = ", ".join("(" + ",".join(str(c) for c in m) + ")" for m in self.markers)
        return f"({name}; {marks})" if marks else f"({name})"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    rows: tuple[tuple[int, ...], ...]
    weak: MarkedDescriptor
    strong: MarkedDescriptor


def cuntz_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """The all-ones matrix of the Cuntz algebra O_n."""
    return tuple((1,) * n for _ in range(n))


def _cuntz_entry(n: int) -> CorpusEntry:
    torsion = (n - 1,) if n > 2 else ()
    weak_marker = ((-1) % (n - 1),) if n > 2 else ()
    return CorpusEntry(
        name=f"O_{n}",
        rows=cuntz_rows(n),
        weak=MarkedDescriptor(0, torsion, (weak_marker,)),
        strong=MarkedDescriptor(1, (), ((-1,), (1 - n,))),
    )


FIBONACCI = ((1, 1), (1, 0))

A1 = ((0, 0, 1), (1, 0, 1), (1, 1, 1))
A2 = ((0, 1, 1), (1, 0, 1), (1, 1, 1))
A3 = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
A4 = ((1, 0, 1), (0, 1, 1), (1, 1, 1))
A5 = ((1, 1, 1), (1, 1, 1), (1, 0, 0))
A6 = ((1, 1, 1), (1, 1, 0), (1, 1, 0))

CORPUS: tuple[CorpusEntry, ...] = (
    _cuntz_entry(2),
    _cuntz_entry(3),
    _cuntz_entry(4),
    _cuntz_entry(5),
    CorpusEntry("F", FIBONACCI,
                MarkedDescriptor(0, (), ((),)),
                MarkedDescriptor(1, (), ((-2,), (-1,)))),
    CorpusEntry("A1", A1,
                MarkedDescriptor(0, (3,), ((2,),)),
                MarkedDescriptor(1, (), ((4,), (3,)))),
    CorpusEntry("A2", A2,
                MarkedDescriptor(0, (4,), ((2,),)),
                MarkedDescriptor(1, (2,), ((-2, 0), (-2, 1)))),
    CorpusEntry("A3", A3,
                MarkedDescriptor(0, (2, 2), ((0, 0),)),
                MarkedDescriptor(1, (2, 2), ((-2, 0, 0), (-1, 1, 1)))),
    CorpusEntry("A4", A4,
                MarkedDescriptor(1, (), ((0,),)),
                MarkedDescriptor(2, (), ((1, 0), (1, 0)))),
    CorpusEntry("A5", A5,
                MarkedDescriptor(0, (2,), ((0,),)),
                MarkedDescriptor(1, (), ((-2,), (-2,)))),
    CorpusEntry("A6", A6,
                MarkedDescriptor(0, (2,), ((1,),)),
                MarkedDescriptor(1, (2,), ((-1, 0), (-1, -1)))),
)

# Published values that contradict [T]_s = -iota(1) - [1_N]; kept verbatim so
# the discrepancy itself stays testable.  For A2 and A3 the published iota(1)
# carries the wrong sign relative to [T]_s; for A4 the class of 1_N is weakly
# zero and [T]_s = iota(1), which neither published A4 value reflects.
PUBLISHED_DISCREPANCIES: dict[str, dict[str, MarkedDescriptor]] = {
    "A2": {"strong": MarkedDescriptor(1, (2,), ((-2, 0), (2, 1)))},
    "A3": {"strong": MarkedDescriptor(1, (2, 2), ((-2, 0, 0), (1, 1, 1)))},
    "A4": {"weak": MarkedDescriptor(1, (), ((-1,),)),
           "strong": MarkedDescriptor(2, (), ((-2, -1), (1, 0)))},
}
