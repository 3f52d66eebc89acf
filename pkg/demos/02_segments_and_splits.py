"""Cut recordings into labeled blocks and build train/test splits.

Shows the labeling rule (a block is nobee when it overlaps any retained
event with positive measure), the effect of the minimum event duration on
class counts, both split schemes, and balancing by duplication.

    python3 demos/02_segments_and_splits.py
"""

from collections import Counter
from pathlib import Path

from hivesound import runner, segmentation, synth
from hivesound.corpus import Label

OUT = Path(__file__).resolve().parent / "output" / "corpus"


def ensure_corpus() -> Path:
    if not (OUT / "manifest.csv").exists():
        synth.gen_corpus(OUT, n_hives=3, recordings_per_hive=2,
                         recording_duration=60.0, event_rate=1.5, seed=7)
    return OUT


def label_counts(segments) -> str:
    counts = Counter(s.label for s in segments)
    return f"{counts[Label.BEE]} bee / {counts[Label.NOBEE]} nobee"


def main() -> None:
    corpus = ensure_corpus()
    for min_duration in (0.0, 5.0):
        segments = runner.load_corpus_segments(corpus, 30.0, min_duration)
        print(f"min event duration {min_duration:>3.0f} s: "
              f"{len(segments)} blocks of 30 s, {label_counts(segments)}")
    print()

    segments = runner.load_corpus_segments(corpus, 30.0, 0.0)
    plan = segmentation.split_random(segments, 0.25, seed=1)
    print(f"random split:            {len(plan.train)} train / {len(plan.test)} test")

    plan = segmentation.split_hive_independent(segments, 0.34, seed=1)
    held_out = sorted({s.hive_id for s in plan.test})
    print(f"hive-independent split:  {len(plan.train)} train / {len(plan.test)} test "
          f"(held-out hive: {', '.join(held_out)})")

    balanced = segmentation.balance_by_duplication(plan.train, seed=1)
    print(f"balanced training set:   {len(plan.train)} -> {len(balanced)} "
          f"({label_counts(balanced)})")

    half_a, half_b = segmentation.halve_train_set(plan.train, seed=1)
    print(f"ensemble halves:         {len(half_a)} + {len(half_b)}")

    inventory = OUT.parent / "inventory.csv"
    inventory.write_text(segmentation.write_inventory(segments))
    print(f"\nsegment inventory written to {inventory}")


if __name__ == "__main__":
    main()
