"""Regenerates sample_tracks.csv: 22 synthetic top-view pedestrian tracks.

The tracks live in a 320x240 px top view of a 16x12 m plaza (0.05 m/px).
People enter from the left or right margin, cross with a gentle sine
wobble at a walking pace, and appear for 120..200 frames with staggered
start frames.  Deterministic; rerunning overwrites the CSV identically.
"""

import pathlib

import numpy as np

OUT = pathlib.Path(__file__).with_name("sample_tracks.csv")


def main():
    rng = np.random.default_rng(20260810)
    rows = ["frame,id,u,v"]
    for pid in range(22):
        left_to_right = pid % 2 == 0
        n_frames = int(rng.integers(120, 201))
        start_frame = int(rng.integers(0, 61))
        v0 = float(rng.uniform(25, 215))
        step = float(rng.uniform(0.7, 1.1))  # px/frame, ~1..1.7 m/s at 30 fps
        u0 = float(rng.uniform(12, 40)) if left_to_right else float(rng.uniform(280, 308))
        direction = 1.0 if left_to_right else -1.0
        wobble_amp = float(rng.uniform(0.0, 6.0))
        wobble_freq = float(rng.uniform(0.01, 0.03))
        for k in range(n_frames + 1):
            u = u0 + direction * step * k
            v = v0 + wobble_amp * np.sin(wobble_freq * k * 2 * np.pi)
            rows.append(f"{start_frame + k},{pid},{u:.3f},{v:.3f}")
    OUT.write_text("\n".join(rows) + "\n")
    print(f"wrote {OUT} ({len(rows) - 1} records)")


if __name__ == "__main__":
    main()
