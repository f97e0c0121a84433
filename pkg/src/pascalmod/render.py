"""Deterministic emission of masks, residue grids and stripe overlays.

Canonical image format is plain PBM (P1): human-diffable, byte-exact,
black (1) = nonzero entry, white (0) = divisible or outside-triangle
padding.  Raw PBM (P4), plain PGM/PPM for residues, ASCII art and JSON
are offered with the same cell semantics.
"""

import json
from dataclasses import dataclass

from .digits import digit_at

FORMATS = ("ascii", "pbm", "pgm", "ppm", "json")
STRIPE_LAYERS = ("row", "i", "j", "intersection")


@dataclass(frozen=True)
class RenderSpec:
    format: str = "pbm"
    centered: bool = False
    scale: int = 1
    raw: bool = False  # P4 instead of P1 for pbm

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.scale < 1:
            raise ValueError(f"scale must be at least 1, got {self.scale}")


def _cell_columns(rows: int, n: int, i: int, centered: bool) -> range:
    if centered:
        c = (rows - 1 - n) + 2 * i
    else:
        c = i
    return range(c, c + 1)


def _pixel_grid(grid, rows: int, spec: RenderSpec, levels=None):
    """Expand a triangular grid into a rectangular pixel grid.

    grid[n][i] is truthy/level data for 0 <= i <= n; padding pixels get
    `background` (0 for bitmaps, 255 for grayscale).
    """
    width = (2 * rows - 1) if spec.centered else rows
    background = 0 if levels is None else 255
    pixels = []
    for n in range(rows):
        line = [background] * width
        for i in range(n + 1):
            value = grid[n][i] if levels is None else levels[n][i]
            for c in _cell_columns(rows, n, i, spec.centered):
                line[c] = int(value)
        for _ in range(spec.scale):
            pixels.append([v for v in line for _ in range(spec.scale)])
    return pixels


def _pbm_bytes(pixels, raw: bool) -> bytes:
    height = len(pixels)
    width = len(pixels[0]) if pixels else 0
    if raw:
        body = bytearray()
        for line in pixels:
            byte = 0
            nbits = 0
            for v in line:
                byte = (byte << 1) | (1 if v else 0)
                nbits += 1
                if nbits == 8:
                    body.append(byte)
                    byte = nbits = 0
            if nbits:
                body.append(byte << (8 - nbits))
        return f"P4\n{width} {height}\n".encode() + bytes(body)
    lines = [" ".join("1" if v else "0" for v in line) for line in pixels]
    return (f"P1\n{width} {height}\n" + "\n".join(lines) + "\n").encode()


def _graymap_bytes(pixels, magic: str) -> bytes:
    height = len(pixels)
    width = len(pixels[0]) if pixels else 0
    if magic == "P3":
        lines = [" ".join(f"{v} {v} {v}" for v in line) for line in pixels]
    else:
        lines = [" ".join(str(v) for v in line) for line in pixels]
    return (f"{magic}\n{width} {height}\n255\n" + "\n".join(lines) + "\n").encode()


def render_mask(mask, spec: RenderSpec = RenderSpec()) -> bytes:
    """Serialize a divisibility mask; output is byte-exact per (mask, spec)."""
    if spec.format == "json":
        doc = {
            "modulus": mask.modulus,
            "rows": mask.rows,
            "grid": [[bool(v) for v in row] for row in mask.grid],
        }
        return (json.dumps(doc) + "\n").encode()
    if spec.format == "ascii":
        out = []
        for n in range(mask.rows):
            if spec.centered:
                line = [" "] * (2 * mask.rows - 1)
                for i in range(n + 1):
                    line[(mask.rows - 1 - n) + 2 * i] = "#" if mask.grid[n][i] else "."
                out.append("".join(line).rstrip())
            else:
                out.append("".join("#" if v else "." for v in mask.grid[n]))
        return ("\n".join(out) + "\n").encode()
    pixels = _pixel_grid(mask.grid, mask.rows, spec)
    if spec.format == "pbm":
        return _pbm_bytes(pixels, spec.raw)
    levels = [[0 if v else 255 for v in line] for line in pixels]
    return _graymap_bytes(levels, "P3" if spec.format == "ppm" else "P2")


def residue_level(m: int, r: int) -> int:
    """Gray level for residue r mod m: floor(255 * (m - r) / m); 0 maps to 255."""
    return 255 * (m - r) // m


def render_residues(rows, spec: RenderSpec = RenderSpec(format="pgm")) -> bytes:
    """Serialize triangle rows as a grayscale (or json/ascii) residue grid."""
    rows = list(rows)
    if not rows:
        raise ValueError("no rows to render")
    m = rows[0].modulus
    if any(r.modulus != m for r in rows):
        raise ValueError("rows have mixed moduli")
    count = len(rows)
    if spec.format == "json":
        doc = {"modulus": m, "rows": [list(r.entries) for r in rows]}
        return (json.dumps(doc) + "\n").encode()
    if spec.format == "ascii":
        out = []
        for r in rows:
            cells = [("." if e == 0 else str(e)) for e in r.entries]
            out.append(" " * (count - 1 - r.n) + " ".join(cells))
        return ("\n".join(out) + "\n").encode()
    if spec.format == "pbm":
        grid = [[e != 0 for e in r.entries] for r in rows]
        return _pbm_bytes(_pixel_grid(grid, count, spec), spec.raw)
    levels = [[residue_level(m, e) for e in r.entries] for r in rows]
    pixels = _pixel_grid(None, count, spec, levels=levels)
    return _graymap_bytes(pixels, "P3" if spec.format == "ppm" else "P2")


def stripe_survivors(place: int, rows: int, which) -> set:
    """Cells (n, i) left unshaded by the selected binary stripe layers.

    Layers: "row" keeps cells whose n has bit 1 at `place`; "i" and "j"
    keep cells whose i (resp. j = n - i) has bit 0 there; "intersection"
    imposes all three, leaving exactly the cells special at `place`.
    An empty selection keeps nothing.
    """
    if place < 1:
        raise ValueError("place 0 can never be special (i, j zero and n one there is impossible)")
    which = set(which)
    unknown = which - set(STRIPE_LAYERS)
    if unknown:
        raise ValueError(f"unknown stripe layers: {sorted(unknown)}")
    if not which:
        return set()
    if "intersection" in which:
        which |= {"row", "i", "j"}
    survivors = set()
    for n in range(rows):
        for i in range(n + 1):
            if "row" in which and digit_at(n, 2, place) != 1:
                continue
            if "i" in which and digit_at(i, 2, place) != 0:
                continue
            if "j" in which and digit_at(n - i, 2, place) != 0:
                continue
            survivors.add((n, i))
    return survivors


def render_stripes(place: int, rows: int, which=("intersection",), spec: RenderSpec = RenderSpec()) -> bytes:
    """PBM overlay of stripe survivors: shaded-out cells 0, survivors 1."""
    survivors = stripe_survivors(place, rows, which)
    grid = [[(n, i) in survivors for i in range(n + 1)] for n in range(rows)]
    pixels = _pixel_grid(grid, rows, spec)
    return _pbm_bytes(pixels, spec.raw)
