"""Sweep a trained checkpoint and look at the trends.

    python demos/03_evaluate.py runs/desk_hybrid/checkpoint.pt
"""
import sys

from semcom.experiments import SweepSpec, emit_report, evaluate, pivot, save_reconstructions

ckpt = sys.argv[1] if len(sys.argv) > 1 else "runs/desk_hybrid/checkpoint.pt"

# three noise draws per cell; all scenarios of a cell share them
spec = SweepSpec(ckpt, snr_list=[-2, 0, 2, 4, 6, 8], repeats=3)
rows = evaluate(spec)
emit_report(rows, "runs/demo_eval.csv")

# MS-SSIM by SNR, one column per decoder/scenario at the middle compression ratio
print(pivot(rows, cbr="4/64"))

# fewer symbols per image cost quality at every SNR
for snr in (0.0, 8.0):
    line = [f"{r.cbr} {r.msssim_mean:.4f}" for r in rows
            if r.snr_db == snr and r.decoder == "HCD" and r.scenario == "targeted"]
    print(f"HCD targeted at {snr:g} dB:", ", ".join(line))

# the same pipeline over block Rayleigh fading, which the models never saw in training
fading = evaluate(SweepSpec(ckpt, snr_list=[0, 8], cbr_list=["4/64"], scenarios=["targeted"],
                            repeats=3, channel="rayleigh"))
for r in fading:
    print(f"rayleigh {r.snr_db:g} dB {r.decoder}: psnr {r.psnr_mean:.2f} +- {r.psnr_std:.2f}")

for path in save_reconstructions(SweepSpec(ckpt, snr_list=[-2, 0], cbr_list=["4/64"]),
                                 "runs/demo_panels", n_images=4):
    print("wrote", path)
