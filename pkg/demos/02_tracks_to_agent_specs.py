"""From tracked pedestrians to simulation parameters.

Reads the bundled 22-person track file and derives one agent spec per
track: start and goal from the first and last observations, speed as mean
path length per frame.  Replication > 1 shows how the same data seeds a
larger synthetic crowd.
"""

import pathlib

from crowdgen.geometry import GroundMapping
from crowdgen.trajectory import derive_agent_specs, parse_tracks

HERE = pathlib.Path(__file__).parent

with open(HERE / "data" / "sample_tracks.csv", "rb") as fh:
    tracks = parse_tracks(fh)
print(f"{len(tracks)} tracks, frames {min(t.first_frame for t in tracks)}"
      f"..{max(t.last_frame for t in tracks)}")

mapping = GroundMapping(0.05)
specs = derive_agent_specs(tracks, mapping, replication=1.0, jitter_m=0.0, seed=0)
print("\nfirst five derived agents:")
for s in specs[:5]:
    print(
        f"  agent {s.agent_id}: ({s.start.x:5.2f},{s.start.y:5.2f}) -> "
        f"({s.goal.x:5.2f},{s.goal.y:5.2f})  speed {s.speed:.4f} m/frame  "
        f"frames {s.spawn_frame}..{s.despawn_frame}"
    )

# Replicate to 150% of the original crowd; extra replicas get their start
# and goal jittered inside a 10 cm disc and separate through simulation.
bigger = derive_agent_specs(tracks, mapping, replication=1.5, jitter_m=0.1, seed=0)
print(f"\nreplication 1.5 -> {len(bigger)} agents (from {len(tracks)} tracks)")
replica = bigger[len(tracks)]
original = bigger[0]
print(f"replica of track {replica.source_person_id}: start offset "
      f"{((replica.start.x - original.start.x) ** 2 + (replica.start.y - original.start.y) ** 2) ** 0.5:.3f} m")
