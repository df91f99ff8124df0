"""Apply trained bundles to a new series: masks, bleeding volume, overlays.

Trains tiny liver and laceration models (reusing the corpus from demo 04's
settings), segments an unseen phantom patient, estimates the bleeding
volume from the laceration voxels and the series geometry, and writes
color overlays (liver green, laceration red).
"""

from pathlib import Path

from PIL import Image

from ctriage import inference, trainer
from ctriage.harness import build_pairs, load_corpus, pairs_for_patients
from ctriage.networks import DiscriminatorSpec, GeneratorSpec
from ctriage.phantoms import PhantomSpec, generate_phantoms
from ctriage.preprocess import pack_archive, split_patients
from ctriage.trainer import TrainConfig

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

corpus = generate_phantoms(
    PhantomSpec(patient_count=6, slices_per_patient=20, seed=34, lesion_count_range=(2, 4)),
    out_dir / "segment_corpus",
)
gen_spec = GeneratorSpec(encoder_widths=(8, 16, 32, 64), dropout_stages=(0,))
disc_spec = DiscriminatorSpec(conv_widths=(16, 32))

bundles = {}
for organ, epochs in (("liver", 8), ("liver_laceration", 16)):
    pairs = build_pairs(corpus.directory, organ)
    split = split_patients(sorted({p.patient_id for p in pairs}), seed=3)
    train_pairs = pairs_for_patients(pairs, split.train_patients)
    archive = pack_archive(train_pairs, out_dir / f"{organ}.archive")
    config = TrainConfig(epochs=epochs, batch_size=4, checkpoint_every=10, seed=42)
    result = trainer.train(
        archive, config, out_dir / f"run_{organ}", organ, gen_spec, disc_spec
    )
    bundles[organ] = result.bundle
    print(f"trained {organ} model ({len(train_pairs)} pairs, {epochs} epochs)")

# Segment a patient the models never saw.
series = load_corpus(corpus.directory)[-1]
result = inference.segment_study(bundles, series)
print(f"\nstudy for {series.patient_id}: {len(result.findings)} findings")
for finding in result.findings:
    pixels = sum(int(m.values.sum()) for m in finding.masks)
    print(f"  {finding.organ_label}: {pixels} positive pixels")
print(f"estimated bleeding volume: {result.laceration_volume_ml:.2f} mL")

overlay_dir = out_dir / "overlays"
overlay_dir.mkdir(exist_ok=True)
for index in range(len(series.slices)):
    gray = inference.display_gray(series.slices[index].values)
    masks = {f.organ_label: f.masks[index] for f in result.findings}
    rgb = inference.render_overlay(gray, masks)
    Image.fromarray(rgb, mode="RGB").save(overlay_dir / f"slice_{index:04d}.png")
print(f"wrote {len(series.slices)} overlays to {overlay_dir}")
