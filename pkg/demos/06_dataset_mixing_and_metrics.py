"""Training-set composition and count metrics.

Builds toy real and CG manifests, mixes CG frames into the real training
split at several percentages, and scores a fake predictor with MAE/MSE.
"""

from crowdgen.dataset import (
    ManifestEntry,
    MixSpec,
    compose_training_set,
    mae,
    mse,
    split_fraction,
)


def manifest(n, source):
    return [
        ManifestEntry(
            image=f"frames/frame_{i:06d}.png",
            annotation="annotations.csv",
            density=f"density/frame_{i:06d}.dmap",
            source=source,
            split="train",
            frame=i,
        )
        for i in range(n)
    ]


# 40% train / 60% test on the real corpus, contiguous frames like the usual
# video-dataset conventions
real = split_fraction(manifest(200, "real"), 0.4, policy="contiguous")
cg = manifest(735, "cg")

print("p    train_total  real  cg")
for p in (0, 20, 40, 60, 80, 100):
    mixed = compose_training_set(real, cg, MixSpec(float(p), seed=11))
    train = [e for e in mixed if e.split == "train"]
    n_cg = sum(1 for e in train if e.source == "cg")
    print(f"{p:3d}  {len(train):11d}  {len(train) - n_cg:4d}  {n_cg:3d}")

test = [e for e in mixed if e.split == "test"]
print(f"\ntest split: {len(test)} frames, all real: {all(e.source == 'real' for e in test)}")

# metrics on a deliberately biased predictor
gt = [12, 15, 9, 22, 18, 14]
pred = [c + 1.5 for c in gt]
print(f"\nconstant +1.5 bias: MAE {mae(pred, gt):.3f}  MSE {mse(pred, gt):.3f}")
pred = [c + (1.5 if i % 2 else -4.0) for i, c in enumerate(gt)]
print(f"mixed errors:       MAE {mae(pred, gt):.3f}  MSE {mse(pred, gt):.3f} (MSE punishes outliers)")
