#!/usr/bin/env python3
"""Rebuild MNIST IDX files from the npm `mnist` package (cazala/mnist).

The package bundles ~10k real MNIST digits as JSON, pixel values rounded
to three decimals of v/255. That rounding is invertible, so the original
bytes are recovered exactly. Emits standard big-endian IDX files:

    train-images-idx3-ubyte  train-labels-idx1-ubyte
    t10k-images-idx3-ubyte   t10k-labels-idx1-ubyte

Usage: mnist_from_npm.py <package/src/digits dir> <output dir>

The pool is shuffled with a fixed seed and split 80/20 per class.
"""
import json
import random
import struct
import sys
from pathlib import Path

def write_idx_images(path, rows):
    with open(path, "wb") as f:
        f.write(struct.pack(">IIII", 2051, len(rows), 28, 28))
        for r in rows:
            f.write(bytes(r))

def write_idx_labels(path, labels):
    with open(path, "wb") as f:
        f.write(struct.pack(">II", 2049, len(labels)))
        f.write(bytes(labels))

def main():
    src, out = Path(sys.argv[1]), Path(sys.argv[2])
    out.mkdir(parents=True, exist_ok=True)
    train, test = [], []
    for digit in range(10):
        flat = json.loads((src / f"{digit}.json").read_text())["data"]
        assert len(flat) % 784 == 0
        n = len(flat) // 784
        imgs = []
        for i in range(n):
            px = flat[i * 784:(i + 1) * 784]
            imgs.append([round(v * 255) for v in px])
        cut = (n * 4) // 5
        train += [(img, digit) for img in imgs[:cut]]
        test += [(img, digit) for img in imgs[cut:]]
    rng = random.Random(20260809)
    rng.shuffle(train)
    rng.shuffle(test)
    write_idx_images(out / "train-images-idx3-ubyte", [i for i, _ in train])
    write_idx_labels(out / "train-labels-idx1-ubyte", [l for _, l in train])
    write_idx_images(out / "t10k-images-idx3-ubyte", [i for i, _ in test])
    write_idx_labels(out / "t10k-labels-idx1-ubyte", [l for _, l in test])
    print(f"wrote {len(train)} train / {len(test)} test samples to {out}")

if __name__ == "__main__":
    main()
