"""Regenerate the bundled instance files under instances/.

    python scripts/make_instances.py
"""

import json
import random
from pathlib import Path

from matroidenum import instances as gen
from matroidenum.matching import TractablePair, encode_intersection, free_solver, pair_to_dict
from matroidenum.matroids import FreeMatroid, LinearMatroidGF2, matroid_to_dict

OUT = Path(__file__).resolve().parent.parent / "instances"


def intersection(m1, m2, note):
    return {"kind": "intersection", "note": note, "m1": matroid_to_dict(m1), "m2": matroid_to_dict(m2)}


def build() -> dict[str, dict]:
    rng = random.Random(20240611)
    out = {}
    out["sample_bases"] = intersection(*gen.sample_pair(), "hand-written base lists, element k is label k+1")
    for n, r1, r2 in [(6, 3, 4), (8, 4, 5), (10, 5, 5), (12, 6, 6)]:
        out[f"uniform_{n}_{r1}_{r2}"] = intersection(
            gen.UniformMatroid(n, r1), gen.UniformMatroid(n, r2), f"uniform pair on {n} elements"
        )
    out["partition_graphic_10"] = intersection(*gen.random_partition_graphic_pair(rng, 10), "partition x graphic")
    out["linear_gf2_8"] = intersection(*gen.random_linear_pair(rng, 8), "two random GF(2) column matroids")
    out["b_matching"] = {
        "kind": "b-matching",
        "vertices": 6,
        "left": [0, 1, 2],
        "edges": [[0, 3], [0, 4], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [0, 5]],
        "b": [2, 1, 2, 1, 2, 1],
    }
    out["colorful_forest"] = {
        "kind": "colorful-forest",
        "vertices": 5,
        "edges": [[0, 1], [1, 2], [2, 0], [2, 3], [3, 4], [4, 2], [1, 3], [0, 4]],
        "colors": [0, 1, 0, 2, 1, 3, 2, 3],
    }
    out["dcs"] = {
        "kind": "dcs",
        "vertices": 4,
        "arcs": [[0, 1], [1, 2], [2, 3], [3, 0], [0, 2], [2, 0], [1, 3], [3, 1]],
        "out_cap": [1, 1, 2, 1],
        "in_cap": [1, 2, 1, 1],
    }
    out["cvc_c6"] = {"kind": "cvc", "vertices": 6, "edges": [[k, (k + 1) % 6] for k in range(6)]}
    out["cvc_cube"] = {
        "kind": "cvc",
        "vertices": 8,
        "edges": [[a, b] for a in range(8) for b in range(a + 1, 8) if bin(a ^ b).count("1") == 1],
    }
    out["cvc_k4_minus_edge"] = {"kind": "cvc", "vertices": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]}
    path = [(k, k + 1) for k in range(6)] + [(0, 3), (2, 5)]
    out["pair_free_graph"] = {"kind": "pair", **pair_to_dict(TractablePair(FreeMatroid(7), path, free_solver, "free"))}
    rows = ["1100101", "0110011", "0011110"]
    out["pair_linear"] = {
        "kind": "pair",
        **pair_to_dict(TractablePair(LinearMatroidGF2(rows), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (1, 4)])),
    }
    m1, m2 = gen.random_uniform_pair(rng, 6)
    out["pair_encoded"] = {"kind": "pair", **pair_to_dict(encode_intersection(m1, m2))}
    return out


def main():
    OUT.mkdir(exist_ok=True)
    for name, data in build().items():
        (OUT / f"{name}.json").write_text(json.dumps(data, indent=1) + "\n")
        print(name)


if __name__ == "__main__":
    main()
