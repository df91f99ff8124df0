"""Train a small organ model on phantoms and score it on held-out patients.

Micro-scale version of the shipped experiment plan (a few minutes on a
laptop): generate a corpus, split patients 60/40, train a reduced
generator/discriminator pair, plot the loss trajectory, and print the
per-patient Dice report.
"""

import time
from pathlib import Path

import numpy as np

from ctriage import inference, metrics, trainer
from ctriage.harness import build_pairs, pairs_for_patients
from ctriage.networks import DiscriminatorSpec, GeneratorSpec
from ctriage.phantoms import PhantomSpec, generate_phantoms
from ctriage.preprocess import pack_archive, split_patients
from ctriage.trainer import TrainConfig

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

corpus = generate_phantoms(
    PhantomSpec(patient_count=6, slices_per_patient=12, seed=31), out_dir / "train_corpus"
)
pairs = build_pairs(corpus.directory, "liver")
split = split_patients(sorted({p.patient_id for p in pairs}), seed=3)
train_pairs = pairs_for_patients(pairs, split.train_patients)
test_pairs = pairs_for_patients(pairs, split.test_patients)
print(f"{len(train_pairs)} training pairs / {len(test_pairs)} held-out pairs")

archive = pack_archive(train_pairs, out_dir / "train.archive")
config = TrainConfig(epochs=6, batch_size=4, checkpoint_every=5, seed=42)
gen_spec = GeneratorSpec(encoder_widths=(8, 16, 32, 64), dropout_stages=(0,))
disc_spec = DiscriminatorSpec(conv_widths=(16, 32))

start = time.time()
result = trainer.train(archive, config, out_dir / "train_run", "liver", gen_spec, disc_spec)
print(f"trained {config.epochs} epochs in {time.time() - start:.0f}s; "
      f"checkpoints at {[d.name for d in result.checkpoint_dirs]}")

per_epoch = {}
for record in result.records:
    per_epoch.setdefault(record.epoch, []).append(record.g_l1)
for epoch, values in per_epoch.items():
    bar = "#" * int(np.mean(values) * 200)
    print(f"epoch {epoch}: mean g_l1 {np.mean(values):.4f} {bar}")

report = metrics.evaluate(inference.bundle_predictor(result.bundle), test_pairs)
report.split_label = "60/40"
print()
print(report.to_table())
for patient, dice_value in sorted(report.per_patient.items()):
    print(f"  {patient}: {dice_value:.3f}")
