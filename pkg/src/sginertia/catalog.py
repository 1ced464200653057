"""The extremal catalog: switching-isomorphism classes found by exhaustive search.

One record per line::

    <graph6> <cotree-bits> g=5 ip=3 in=3 eta=1 n=7 branch=3.3 name=Gamma1

The graph6 string is the canonical underlying graph, the bit string gives
the cotree signs after tree normalization (1 = negative), and the rest is
the stored girth, inertia, order and provenance. Every record re-verifies
against the exact engine when loaded with ``verify=True``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from .canon import canonical_certificate, graph6_decode
from .graph import Inertia, SignedGraph
from .inertia import inertia_exact
from .invariants import SwitchingClassCertificate, girth_length, tree_normalize


class CatalogError(ValueError):
    """Malformed or non-verifying catalog record."""


def certificate_from_bits(graph6: str, bits: str) -> SwitchingClassCertificate:
    n, pairs = graph6_decode(graph6)
    plain = SignedGraph(n, tuple(sorted((u, v, 1) for u, v in pairs)))
    _, tree, cotree, _ = tree_normalize(plain)
    if len(bits) != len(cotree) or set(bits) - {"0", "1"}:
        raise CatalogError(f"cotree bits {bits!r} do not fit {graph6} ({len(cotree)} cotree edges)")
    signs = tuple(-1 if b == "1" else 1 for b in bits)
    return SwitchingClassCertificate(graph6, tuple(tree), tuple(cotree), signs)


@dataclass(frozen=True)
class CatalogEntry:
    certificate: SwitchingClassCertificate
    girth: int
    inertia: Inertia
    order: int
    branch: str
    name: str = "-"

    @classmethod
    def from_graph(cls, g: SignedGraph, branch: str, name: str = "-") -> "CatalogEntry":
        return cls(canonical_certificate(g), girth_length(g), inertia_exact(g), g.n, branch, name)

    def graph(self) -> SignedGraph:
        return self.certificate.to_graph()

    def to_line(self) -> str:
        i = self.inertia
        return (
            f"{self.certificate.underlying} {self.certificate.bits or '.'} g={self.girth} "
            f"ip={i.pos} in={i.neg} eta={i.nul} n={self.order} branch={self.branch} name={self.name}"
        )

    @classmethod
    def from_line(cls, line: str) -> "CatalogEntry":
        parts = line.split()
        if len(parts) < 3:
            raise CatalogError(f"short catalog record {line!r}")
        g6, bits, *kv = parts
        fields = {}
        for item in kv:
            key, sep, value = item.partition("=")
            if not sep:
                raise CatalogError(f"bad field {item!r} in {line!r}")
            fields[key] = value
        try:
            cert = certificate_from_bits(g6, "" if bits == "." else bits)
            inertia = Inertia(int(fields["ip"]), int(fields["in"]), int(fields["eta"]))
            return cls(cert, int(fields["g"]), inertia, int(fields["n"]), fields["branch"], fields.get("name", "-"))
        except (KeyError, ValueError) as exc:
            raise CatalogError(f"bad catalog record {line!r}: {exc}") from exc

    def reverify(self) -> Optional[str]:
        """None if the stored girth, order and inertia match a fresh computation."""
        g = self.graph()
        problems = []
        if g.n != self.order:
            problems.append(f"order {g.n} != stored {self.order}")
        if girth_length(g) != self.girth:
            problems.append(f"girth {girth_length(g)} != stored {self.girth}")
        got = inertia_exact(g)
        if got != self.inertia:
            problems.append(f"inertia {tuple(got)} != stored {tuple(self.inertia)}")
        return "; ".join(problems) or None


@dataclass
class ExtremalCatalog:
    entries: list[CatalogEntry] = field(default_factory=list)
    provenance: str = ""

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def keys(self) -> set[tuple[str, str]]:
        return {(e.certificate.underlying, e.certificate.bits) for e in self.entries}

    def branch(self, name: str) -> list[CatalogEntry]:
        return [e for e in self.entries if e.branch == name]

    def contains(self, g: SignedGraph) -> bool:
        c = canonical_certificate(g)
        return (c.underlying, c.bits) in self.keys()

    def dumps(self) -> str:
        head = f"# {self.provenance}\n" if self.provenance else ""
        return head + "".join(e.to_line() + "\n" for e in self.entries)

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def loads(cls, text: str, verify: bool = True) -> "ExtremalCatalog":
        entries = []
        provenance = ""
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                provenance = provenance or line[1:].strip()
                continue
            try:
                entry = CatalogEntry.from_line(line)
            except CatalogError as exc:
                raise CatalogError(f"line {lineno}: {exc}") from exc
            if verify:
                bad = entry.reverify()
                if bad:
                    raise CatalogError(f"line {lineno}: record does not re-verify: {bad}")
            entries.append(entry)
        return cls(entries, provenance)

    @classmethod
    def load(cls, path: Union[str, Path], verify: bool = True) -> "ExtremalCatalog":
        p = Path(path)
        if not p.exists():
            return cls()
        return cls.loads(p.read_text(), verify)

    @classmethod
    def from_entries(cls, entries: Iterable[CatalogEntry], provenance: str = "") -> "ExtremalCatalog":
        ordered = sorted(entries, key=lambda e: (e.girth, e.branch, e.order, e.certificate.underlying, e.certificate.bits))
        return cls(ordered, provenance)
