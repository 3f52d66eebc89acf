"""Train the SMO-based SVM on a synthetic corpus and score it with AUC.

    python3 demos/04_svm_classifier.py
"""

from pathlib import Path

import numpy as np

from hivesound import features, runner, segmentation, svm, synth
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
    segments = runner.load_corpus_segments(ensure_corpus(), 30.0, 0.0)
    plan = segmentation.split_random(segments, 0.25, seed=1)
    train_set = segmentation.balance_by_duplication(plan.train, seed=1)
    print(f"{len(plan.train)} train (balanced to {len(train_set)}), "
          f"{len(plan.test)} test segments")

    recipe = features.DEFAULT_SVM_RECIPE
    X_train = np.array([features.segment_vector(s.audio, recipe).values for s in train_set])
    X_test = np.array([features.segment_vector(s.audio, recipe).values for s in plan.test])
    y_train = np.where([s.label is Label.NOBEE for s in train_set], 1.0, -1.0)

    model = svm.train_smo(X_train, y_train, C=10.0, kernel=svm.KernelConfig("rbf"), seed=1)
    print(f"trained: {len(model.dual_coefs)} support vectors of {len(train_set)} samples, "
          f"bias {model.bias:.3f}, rbf gamma {model.kernel.gamma:.2e}")

    for name, X, segs in (("train", X_train, train_set), ("test", X_test, plan.test)):
        scores = svm.decision(model, X)
        labels = [s.label is Label.NOBEE for s in segs]
        print(f"{name} AUC: {roc_auc(scores, labels):.3f}")

    path = OUT / "svm_model.json"
    svm.save_model(model, path)
    reloaded = svm.load_model(path)
    same = np.array_equal(svm.decision(reloaded, X_test), svm.decision(model, X_test))
    print(f"saved to {path.name}; reloaded decisions identical: {same}")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    main()
