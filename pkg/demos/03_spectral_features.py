"""From waveform to classifier features: STFT, mel bands, MFCC summaries.

Builds a buzz-plus-chirp clip, walks it through the spectral stack, and
renders the network input (mean-subtracted log-mel) next to the waveform.

    python3 demos/03_spectral_features.py
"""

from pathlib import Path

import numpy as np

from hivesound import features, synth
from hivesound.audio import AudioBuffer

OUT = Path(__file__).resolve().parent / "output"


def demo_clip() -> AudioBuffer:
    profile = synth.SynthHiveProfile(hive_id="demo", f0=230.0, seed=3)
    buzz = synth.gen_bee_audio(profile, duration=8.0)
    samples = buzz.samples.copy()
    spec = synth.SynthEventSpec(kind="chirp", duration=2.0, level=0.6)
    samples[3 * 22050 : 5 * 22050] += synth.gen_event_audio(spec, 22050, seed=4)
    return AudioBuffer(samples, 22050)


def main() -> None:
    clip = demo_clip()
    print(f"clip: {clip.duration:.0f} s at {clip.sample_rate} Hz\n")

    power = features.stft_power(clip, window=2048, hop=512)
    print(f"STFT power:     {power.frames} frames x {power.bands} bins")

    mel = features.mel_spectrogram(clip, n_mels=80, window=2048, hop=512)
    logmel = features.log_mel(mel)
    print(f"log-mel:        {logmel.frames} frames x {logmel.bands} bands")

    cepstra = features.mfcc(clip)
    print(f"MFCC:           {cepstra.frames} frames x {cepstra.bands} coefficients")

    vector = features.segment_vector(clip, features.DEFAULT_SVM_RECIPE)
    print(f"summary vector: {vector.values.shape[0]} dims "
          f"(mean+std of MFCC, delta, delta-delta, coefficient 0 dropped)\n")

    net_input = features.cnn_input(clip)
    print(f"network input:  {net_input.frames} frames x {net_input.bands} bands, "
          f"per-band mean {np.abs(net_input.values.mean(axis=0)).max():.1e}")

    cache = OUT / "features.fmx"
    features.save_feature_matrix(net_input, cache)
    again = features.load_feature_matrix(cache)
    print(f"binary cache:   {cache.name}, round-trip equal: "
          f"{np.array_equal(again.values, net_input.values.astype(np.float32))}")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, (top, bottom) = plt.subplots(2, 1, figsize=(9, 6), sharex=False)
        t = np.arange(len(clip)) / clip.sample_rate
        top.plot(t, clip.samples, linewidth=0.3)
        top.set_title("waveform (chirp from 3 s to 5 s)")
        bottom.imshow(net_input.values.T, origin="lower", aspect="auto",
                      extent=[0, clip.duration, 0, 80])
        bottom.set_title("network input: mean-subtracted log-mel")
        bottom.set_xlabel("seconds")
        bottom.set_ylabel("mel band")
        fig.tight_layout()
        fig.savefig(OUT / "features.png", dpi=110)
        print(f"figure saved:   {OUT / 'features.png'}")
    except ImportError:
        print("matplotlib not available; skipped the figure")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    main()
