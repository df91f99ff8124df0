"""From a CT slice to a training pair.

Walks the preprocessing chain one step at a time: HU windowing, the fixed
colorization lookup table, the masked-intensity grayscale target, and the
side-by-side composite that the training archive stores. Finishes with a
pack/unpack round trip to show the archive is pixel-exact.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from ctriage.harness import build_pairs
from ctriage.phantoms import PhantomSpec, generate_phantoms
from ctriage.preprocess import (
    COLORMAP,
    concat_pair,
    pack_archive,
    split_composite,
    split_patients,
    unpack_archive,
)

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

corpus = generate_phantoms(
    PhantomSpec(patient_count=4, slices_per_patient=10, seed=11), out_dir / "pair_corpus"
)

# The colormap is a fixed 256-entry table: black -> red -> yellow -> white.
strip = np.tile(COLORMAP[np.newaxis, :, :], (24, 1, 1))
Image.fromarray(strip, mode="RGB").save(out_dir / "colormap_strip.png")
print(f"colormap entries: {len(set(map(tuple, COLORMAP)))} distinct colors")

pairs = build_pairs(corpus.directory, "liver")
print(f"built {len(pairs)} liver pairs (one per slice with a nonempty mask)")

sample = pairs[len(pairs) // 2]
composite = concat_pair(sample)
Image.fromarray(composite, mode="RGB").save(out_dir / "composite_example.png")
print(f"composite shape {composite.shape}: colorized source left, target right")

source, target = split_composite(composite)
assert (source == sample.source).all() and (target == sample.target).all()
print("split(concat(pair)) recovered both halves exactly")

# 60/40 patient split, then the archive round trip.
split = split_patients(sorted({p.patient_id for p in pairs}), seed=5)
print(f"patients: {sorted(split.train_patients)} train / {sorted(split.test_patients)} test")

archive_path = pack_archive(pairs, out_dir / "pairs.archive")
archive = unpack_archive(archive_path)
restored = archive.sample(len(pairs) // 2)
assert (restored.source == sample.source).all()
print(f"archive holds {len(archive)} composites; round trip is pixel-exact")
