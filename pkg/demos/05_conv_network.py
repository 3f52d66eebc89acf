"""Train the convolutional classifier end to end at desk scale.

Uses the small two-stage conv stack and a 100-frame receptive field so the
whole script finishes in about a minute; the full-size stack (receptive
field 1000, four conv stages) trains the same way, just slower. Two models
are trained on disjoint halves and ensembled; segment scores average the
eval-mode outputs over non-overlapping receptive-field excerpts.

    python3 demos/05_conv_network.py
"""

import logging
from pathlib import Path

import numpy as np

from hivesound import cnn, features, runner, segmentation, synth
from hivesound.corpus import Label
from hivesound.evaluation import roc_auc

OUT = Path(__file__).resolve().parent / "output"
CORPUS = OUT / "corpus"


def ensure_corpus() -> Path:
    if not (CORPUS / "manifest.csv").exists():
        synth.gen_corpus(CORPUS, n_hives=3, recordings_per_hive=2,
                         recording_duration=60.0, event_rate=1.5, seed=7)
    return CORPUS


def main() -> None:
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    segments = runner.load_corpus_segments(ensure_corpus(), 30.0, 5.0)
    plan = segmentation.split_random(segments, 0.25, seed=1)

    arch = cnn.reduced_architecture(receptive_field=100, dropout_rate=0.0)
    print(f"architecture: {len(arch.conv_stack)} conv stages, "
          f"flatten {arch.flatten_size()}, dense {arch.dense_units}")

    config = cnn.TrainConfig(epochs=8, batch_size=20, learning_rate=0.02,
                             momentum=0.9, seed=1)
    cache = {}

    def feat(segment):
        key = (segment.recording_id, segment.start)
        if key not in cache:
            cache[key] = features.cnn_input(segment.audio).values
        return cache[key]

    model_a, model_b = cnn.train_ensemble(plan.train, config, arch, feature_fn=feat)

    scores = [cnn.predict_segment((model_a, model_b), feat(s)) for s in plan.test]
    labels = [s.label is Label.NOBEE for s in plan.test]
    print(f"\ntest AUC over {len(plan.test)} segments: {roc_auc(scores, labels):.3f}")
    for score, seg in zip(scores, plan.test):
        print(f"  {seg.recording_id} @{seg.start:>5.0f}s  {seg.label.value:<6} -> {score:.3f}")

    path = OUT / "network.ckpt"
    cnn.save_checkpoint(model_a, path)
    reloaded = cnn.load_checkpoint(path)
    probe = feat(plan.test[0])[:100][None]
    same = np.array_equal(cnn.forward(reloaded, probe)[0], cnn.forward(cnn.load_checkpoint(path), probe)[0])
    print(f"\ncheckpoint {path.name} round-trips deterministically: {same}")
    print((path.parent / (path.name + '.manifest.txt')).read_text())


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    main()
