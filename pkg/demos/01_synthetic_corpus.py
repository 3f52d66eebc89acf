"""Generate a small labeled hive corpus and look at what lands on disk.

Every recording is a hive-specific harmonic buzz with external sounds
(chirps, noise bursts, tones) injected by a Poisson process. The injected
spans are written to ``.lab`` files, so the corpus ships with exact ground
truth. Run from the repository root:

    python3 demos/01_synthetic_corpus.py
"""

from pathlib import Path

from hivesound import synth
from hivesound.corpus import load_manifest

OUT = Path(__file__).resolve().parent / "output" / "corpus"


def main() -> None:
    corpus = synth.gen_corpus(
        OUT,
        n_hives=3,
        recordings_per_hive=2,
        recording_duration=60.0,
        event_rate=1.5,
        seed=7,
    )
    print(f"wrote {len(corpus.recordings)} recordings under {corpus.root}\n")

    print("manifest.csv:")
    print(corpus.manifest_text())

    first = corpus.recordings[0]
    print(f"annotations for {first.id} ({len(first.events)} events):")
    print(first.lab_path.read_text() or "  (no external sounds landed here)\n")

    recordings = load_manifest(corpus.manifest_text(), base_dir=corpus.root)
    total = sum(r.duration for r in recordings)
    covered = sum(
        ev.offset - ev.onset for rec in corpus.recordings for ev in rec.events
    )
    print(f"total audio: {total:.0f} s, raw event time: {covered:.0f} s "
          f"({100 * covered / total:.0f}% before overlap merging)")
    print(f"expected coverage at this rate: "
          f"{100 * synth.expected_nobee_fraction(1.5):.0f}%")


if __name__ == "__main__":
    main()
