"""Generate a small phantom corpus and look at what is inside it.

Creates a few synthetic patients (elliptical body, an organ whose
cross-section swells and shrinks through the stack, bright lesion blobs),
loads one patient back through the DICOM ingestion path, and writes a
montage of windowed slices next to their ground-truth masks.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from ctriage.harness import corpus_mask, load_corpus
from ctriage.ingest import ABDOMEN_WINDOW, window_to_gray
from ctriage.phantoms import PhantomSpec, generate_phantoms

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

spec = PhantomSpec(patient_count=3, slices_per_patient=12, seed=7)
corpus = generate_phantoms(spec, out_dir / "demo_corpus")
print("manifest:")
print((corpus.directory / "manifest.txt").read_text())

series = load_corpus(corpus.directory)[0]
print(f"loaded patient {series.patient_id}: {len(series.slices)} slices of {series.shape}")
print(f"HU range in slice 6: [{series.slices[6].values.min():.0f}, {series.slices[6].values.max():.0f}]")

# Montage: windowed slice | organ mask | lesion mask, one row per sample slice.
rows = []
for index in (2, 6, 9):
    gray = window_to_gray(series.slices[index].values, ABDOMEN_WINDOW)
    organ = corpus_mask(corpus.directory, "liver", series.patient_id, index, gray.shape)
    lesion = corpus_mask(corpus.directory, "liver_laceration", series.patient_id, index, gray.shape)
    rows.append(np.hstack([gray, organ.values * 255, lesion.values * 255]))
montage = np.vstack(rows)
Image.fromarray(montage, mode="L").save(out_dir / "phantom_montage.png")
print(f"wrote {out_dir / 'phantom_montage.png'} (slice | organ mask | lesion mask)")
