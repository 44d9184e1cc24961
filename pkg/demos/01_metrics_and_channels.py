"""Metrics and channels on their own, no training involved.

Run from the repository root:  python demos/01_metrics_and_channels.py
"""
import numpy as np
import torch

from semcom.channel import awgn, empirical_snr_db, power_normalize, rayleigh_zf
from semcom.imaging import make_desk_dataset, ImageFolder
from semcom.metrics import MsSsimConfig, ms_ssim, psnr, ssim

root = make_desk_dataset("data/desk")        # no-op when the crops already exist
img = ImageFolder(root, "eval")[0]           # float32 HxWx3 in [0, 1]
rng = np.random.default_rng(0)

# additive pixel noise lowers all three scores; PSNR is in dB, the others in (0, 1]
for sigma in (0.01, 0.05, 0.2):
    noisy = np.clip(img + rng.normal(0, sigma, img.shape), 0, 1)
    print(f"pixel noise {sigma:4}: psnr {psnr(img, noisy):6.2f}  ssim {ssim(img, noisy):.4f}  "
          f"ms-ssim {ms_ssim(img, noisy):.4f}")

# a 32x32 crop only holds two 11-pixel scales
small = img[:32, :32]
print("ms-ssim, 2 scales on 32x32:", ms_ssim(small, small * 0.9, MsSsimConfig(num_scales=2)))

# channel symbols are unit power reals, consecutive pairs forming complex symbols
x = power_normalize(torch.randn(2, 768))
for snr in (0, 5, 10):
    print(f"awgn {snr:2d} dB  measured {empirical_snr_db(x, awgn(x, snr, seed=snr)):6.2f} dB")

# block fading: one coefficient per image, undone by zero forcing; deep fades
# blow the noise up so the measured SNR varies a lot from draw to draw
for seed in range(3):
    y = rayleigh_zf(x, 5.0, seed=seed)
    print(f"rayleigh 5 dB, draw {seed}: per-image SNR after ZF "
          f"{[round(empirical_snr_db(x[i], y[i]), 2) for i in range(2)]}")
