"""Regenerate the shipped fixtures.

Filling pairs for every subsurface type used by the plans on surfaces with
3g + n <= 14, plus a handful of certified distance-2 configurations.  Run from
the repository root; writes into src/curve_spectra/fixtures.
"""

from pathlib import Path

from curve_spectra import constructions as C
from curve_spectra.analysis import is_filling
from curve_spectra.ribbon import encode, from_beta_sequence, regions_from_faces, validate
from curve_spectra.theory import spectrum_max

OUT = Path(__file__).resolve().parent.parent / "src" / "curve_spectra" / "fixtures"

EXCEPTIONAL = [(0, 5), (0, 6), (1, 2), (1, 3), (2, 0)]
D2 = [(0, 5, 1), (0, 6, 1), (0, 6, 2), (1, 2, 1), (1, 3, 1), (1, 3, 2), (2, 0, 1), (2, 0, 2),
      (0, 7, 3), (2, 1, 3), (3, 0, 4)]


def surfaces():
    out = [(g, n) for g in range(5) for n in range(15) if 7 <= 3 * g + n <= 14]
    return EXCEPTIONAL + out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    types = {(0, 4, 0), (0, 0, 5)}
    for g, n in surfaces():
        for k in range(1, spectrum_max(g, n) + 1):
            types.add(tuple(C.plan_for_k(g, n, k).x_type))
    for x in sorted(types):
        C.save_fixture(C.filling_pair(*x), OUT)

    base = from_beta_sequence([0, 1], [1, -1])
    named = {
        "F05": base.with_regions(regions_from_faces(base, [2, 1, 1, 1])),
        "F06_two": base.with_regions(regions_from_faces(base, [2, 2, 1, 1])),
        "F06_infinite": base.with_regions(regions_from_faces(base, [3, 1, 1, 1])),
    }
    far = C.filling_pair(0, 0, 5).config
    assert is_filling(far)
    named["far_0_5"] = far
    for g, n, k in D2:
        named[f"d2_g{g}_n{n}_k{k}"] = C.construct(g, n, k)
    for name, cfg in named.items():
        assert validate(cfg).ok, name
        (OUT / f"{name}.json").write_bytes(encode(cfg))
    print(f"{len(types)} filling pairs, {len(named)} configurations in {OUT}")


if __name__ == "__main__":
    main()
