"""A tour of the two networks.

Builds the default generator (8-level encoder/decoder with skip
connections, tanh output) and the default patch discriminator, then shows
the properties the pipeline relies on: output range, patch-map geometry at
two input sizes, the 70-pixel receptive field, and the exact parameter
count from layer arithmetic.
"""

import torch

from ctriage.networks import (
    DiscriminatorSpec,
    GeneratorSpec,
    build_discriminator,
    build_generator,
    receptive_field,
)

torch.manual_seed(0)

gen_spec = GeneratorSpec()
gen = build_generator(gen_spec).eval()
print("generator encoder widths:", gen_spec.encoder_widths)
print("generator decoder widths:", gen_spec.resolved_decoder_widths)
print("parameters:", sum(p.numel() for p in gen.parameters()))

with torch.no_grad():
    out = gen(torch.rand(1, 3, 256, 256) * 2 - 1)
print(f"forward: (1, 3, 256, 256) -> {tuple(out.shape)}, range [{out.min():.3f}, {out.max():.3f}]")

disc_spec = DiscriminatorSpec()
disc = build_discriminator(disc_spec).eval()
print("\ndiscriminator conv widths:", disc_spec.conv_widths, "strides:", disc_spec.resolved_strides())
print("receptive field:", receptive_field(disc_spec), "pixels")

with torch.no_grad():
    patch_256 = disc(torch.rand(1, 3, 256, 256), torch.rand(1, 3, 256, 256))
    patch_512 = disc(torch.rand(1, 3, 512, 512), torch.rand(1, 3, 512, 512))
print(f"patch map at 256: {tuple(patch_256.shape[2:])}, at 512: {tuple(patch_512.shape[2:])}")
print(f"patch values lie in [{patch_256.min():.4f}, {patch_256.max():.4f}] (probabilities)")

# Reduced variants are just data: the desk-scale config used by the
# acceptance experiments swaps in narrower widths, nothing else.
small = GeneratorSpec(encoder_widths=(16, 32, 64, 128), dropout_stages=(0,))
print("\ndesk-scale generator parameters:", sum(p.numel() for p in build_generator(small).parameters()))
