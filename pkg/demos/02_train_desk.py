"""Train the two desk-scale models used by the acceptance suite.

Takes roughly 50 minutes per model on a single CPU core. The runs land in
runs/desk_hybrid and runs/desk_mse; the acceptance tests pick them up instead of
retraining.

    python demos/02_train_desk.py            # both
    python demos/02_train_desk.py mse        # one
"""
import logging
import sys

from semcom.config import load_config
from semcom.imaging import make_desk_dataset
from semcom.training import run_training

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

kinds = sys.argv[1:] or ["hybrid", "mse"]
cfg = load_config("configs/desk.yaml")
make_desk_dataset(cfg.data.root)

for kind in kinds:
    # same budget for both objectives; only the loss differs
    run = cfg.override({"loss.kind": kind, "train.out_dir": f"runs/desk_{kind}"})
    print(run_training(run, progress=lambda s: print(
        f"[{kind}] epoch {s.epoch:2d} target {s.target} psnr {s.psnr:.2f} ms-ssim {s.ms_ssim:.4f}")))
