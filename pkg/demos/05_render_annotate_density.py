"""One frame end to end: render, ground truth, density map.

Simulates the bundled tracks briefly, then takes a single frame through
the image/annotation/density trio and shows them side by side.  Writes
demos/output/frame_triptych.png.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from crowdgen.annotate import annotate
from crowdgen.biocrowds import SimConfig, run
from crowdgen.density import KernelParams, build_density_map
from crowdgen.geometry import GroundMapping, top_view_camera
from crowdgen.render import RenderConfig, render_frame
from crowdgen.trajectory import derive_agent_specs, parse_tracks

HERE = pathlib.Path(__file__).parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

with open(HERE / "data" / "sample_tracks.csv", "rb") as fh:
    tracks = parse_tracks(fh)
mapping = GroundMapping(0.05)
specs = derive_agent_specs(tracks, mapping, replication=1.0, jitter_m=0.0, seed=3)
log, _ = run(specs, SimConfig(world_bounds=(0, 0, 16, 12), seed=4, max_frames=160))

camera = top_view_camera(mapping, 320, 240, height_m=10.0)
render_cfg = RenderConfig(320, 240, background=(26, 28, 24), agent_radius_m=0.25)
frame_idx = 120
img = render_frame(camera, log.frames[frame_idx], render_cfg)

anns, report = annotate(camera, log)
ann = anns[frame_idx]
print(f"frame {frame_idx}: {ann.count} agents in view "
      f"({report.excluded} excluded over the whole run)")

dmap = build_density_map(ann, (320, 240), KernelParams())
print(f"density mass = {dmap.mass():.6f} (count = {ann.count})")

fig, axes = plt.subplots(1, 3, figsize=(15, 4.2))
axes[0].imshow(img.pixels)
axes[0].set_title("rendered frame")
axes[1].imshow(img.pixels)
if ann.entries:
    us = [u for _, u, _ in ann.entries]
    vs = [v for _, _, v in ann.entries]
    axes[1].scatter(us, vs, s=40, facecolors="none", edgecolors="yellow")
axes[1].set_title(f"ground truth ({ann.count} heads)")
im = axes[2].imshow(dmap.grid, cmap="inferno")
axes[2].set_title(f"density map, mass {dmap.mass():.2f}")
fig.colorbar(im, ax=axes[2], fraction=0.04)
for ax in axes:
    ax.set_xticks([])
    ax.set_yticks([])
fig.savefig(OUT / "frame_triptych.png", dpi=120, bbox_inches="tight")
print(f"wrote {OUT / 'frame_triptych.png'}")

# the sprite style used by the surrogate-real corpus
sprite_cfg = RenderConfig(320, 240, background=(74, 84, 96), agent_radius_m=0.3, style="sprite")
sprite = render_frame(camera, log.frames[frame_idx], sprite_cfg)
plt.imsave(OUT / "frame_sprite_style.png", sprite.pixels)
print(f"wrote {OUT / 'frame_sprite_style.png'}")
